"""
Equilibrium measures of quartic potentials.

For W(x) = w1 x + w2 x^2 + w3 x^3 + w4 x^4 the resolvent is
omega(z) = W'(z)/2 - P(z) sqrt(q(z)) with q the polynomial whose roots are
the edges of the support and P the density prefactor. Requiring
omega(z) ~ 1/z at infinity gives the boundary conditions; the higher
orders of the same expansion give the moments.
"""

from typing import Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import integrate

from src.models import (
    DensityCut,
    Moments,
    OneCutSupport,
    QuarticPotential,
    SpectralDensity,
    TwoCutSupport,
)
from src.services.equilibrium.config import (
    ADMISSIBILITY_POINTS,
    ADMISSIBILITY_TOL,
    DEFAULT_GAP_NODES,
    DEFAULT_QUADRATURE_NODES,
    LOG_INTEGRAL_LIMIT,
    MAX_MOMENT_ORDER,
    MOMENT_NODES,
    NEAR_FIELD_FRACTION,
    NEAR_SINGULARITY_DISTANCE,
    RESIDUAL_GATE,
)
from src.services.equilibrium.quadrature import (
    chebyshev_points,
    density_integral,
    edge_weighted_integral,
    edge_weighted_nodes,
)
from src.utils import (
    NearSingularityError,
    NonAdmissibleDensityError,
    PreconditionError,
    ResidualViolationError,
    get_logger,
)

logger = get_logger(__name__)

Support = Union[OneCutSupport, TwoCutSupport]


# Expansion coefficients


def series_coefficients(q_terms: Sequence[float], count: int) -> np.ndarray:
    """
    Coefficients c_1..c_count of sqrt(1 + sum_n Q_n u^n) = 1 - sum_n c_n u^n.

    q_terms holds Q_1, Q_2, ...; missing terms are zero.
    """
    q = np.zeros(count + 1)
    usable = min(len(q_terms), count)
    q[1:usable + 1] = q_terms[:usable]
    c = np.zeros(count + 1)
    for n in range(1, count + 1):
        c[n] = 0.5 * (np.dot(c[1:n], c[n - 1:0:-1]) - q[n])
    return c[1:]


def one_cut_coefficients(support: OneCutSupport) -> Tuple[float, float, float, float]:
    """C1..C4 of sqrt((z - a)(z - b)) = z (1 - sum C_n z^-n)."""
    s1, s2 = support.s1, support.s2
    return (
        s1 / 2.0,
        (s1 ** 2 - 4.0 * s2) / 8.0,
        (s1 ** 3 - 4.0 * s1 * s2) / 16.0,
        (5.0 * s1 ** 4 - 24.0 * s1 ** 2 * s2 + 16.0 * s2 ** 2) / 128.0,
    )


def one_cut_series(support: OneCutSupport, count: int = 9) -> np.ndarray:
    """C1..C_count; entry n - 1 holds C_n."""
    return series_coefficients((-support.s1, support.s2), count)


def two_cut_coefficients(support: TwoCutSupport) -> Tuple[float, ...]:
    """c1..c7 of sqrt(q(z)) = z^2 (1 - sum c_n z^-n)."""
    s1, s2, s3, s4 = support.s1, support.s2, support.s3, support.s4
    c1 = s1 / 2.0
    c2 = (s1 ** 2 - 4.0 * s2) / 8.0
    c3 = (s1 ** 3 - 4.0 * s1 * s2 + 8.0 * s3) / 16.0
    c4 = (
        5.0 * s1 ** 4 - 24.0 * s1 ** 2 * s2 + 32.0 * s1 * s3
        + 16.0 * s2 ** 2 - 64.0 * s4
    ) / 128.0
    c5 = (
        7.0 * s1 ** 5 - 40.0 * s1 ** 3 * s2 + 48.0 * s1 ** 2 * s3
        + 48.0 * s1 * s2 ** 2 - 64.0 * s1 * s4 - 64.0 * s2 * s3
    ) / 256.0
    c6 = (
        21.0 * s1 ** 6 - 140.0 * s1 ** 4 * s2 + 160.0 * s1 ** 3 * s3
        + 240.0 * s1 ** 2 * s2 ** 2 - 192.0 * s1 ** 2 * s4
        - 384.0 * s1 * s2 * s3 - 64.0 * s2 ** 3 + 256.0 * s2 * s4
        + 128.0 * s3 ** 2
    ) / 1024.0
    c7 = (
        33.0 * s1 ** 7 - 252.0 * s1 ** 5 * s2 + 280.0 * s1 ** 4 * s3
        + 560.0 * s1 ** 3 * s2 ** 2 - 320.0 * s1 ** 3 * s4
        - 960.0 * s1 ** 2 * s2 * s3 - 320.0 * s1 * s2 ** 3
        + 768.0 * s1 * s2 * s4 + 384.0 * s1 * s3 ** 2
        + 384.0 * s2 ** 2 * s3 - 512.0 * s3 * s4
    ) / 2048.0
    return (c1, c2, c3, c4, c5, c6, c7)


def two_cut_series(support: TwoCutSupport, count: int = 8) -> np.ndarray:
    """c1..c_count from the recurrence; entry n - 1 holds c_n."""
    return series_coefficients(
        (-support.s1, support.s2, -support.s3, support.s4), count
    )


# Prefactors and densities


def one_cut_prefactor(w: QuarticPotential, support: OneCutSupport) -> Tuple[float, float, float]:
    """Ascending coefficients of the 1-cut prefactor polynomial."""
    s1, s2 = support.s1, support.s2
    return (
        w.w2 + 0.75 * s1 * w.w3 + 0.25 * (3.0 * s1 ** 2 - 4.0 * s2) * w.w4,
        0.5 * (3.0 * w.w3 + 2.0 * w.w4 * s1),
        2.0 * w.w4,
    )


def two_cut_prefactor(w: QuarticPotential, support: TwoCutSupport) -> Tuple[float, float]:
    """Ascending coefficients of the prefactor on the right cut (negated on the left)."""
    return (1.5 * w.w3 + support.s1 * w.w4, 2.0 * w.w4)


def prefactor_root(w: QuarticPotential, support: TwoCutSupport) -> float:
    """Zero of the linear 2-cut prefactor."""
    return -3.0 * w.w3 / (4.0 * w.w4) - support.s1 / 2.0


def _stationary_points(cut: DensityCut) -> np.ndarray:
    """Real stationary points of the prefactor strictly inside the cut."""
    coefficients = np.trim_zeros(np.asarray(cut.prefactor, dtype=float), "b")
    if coefficients.size < 3:
        return np.empty(0)
    roots = P.polyroots(P.polyder(coefficients))
    real = roots.real[np.abs(roots.imag) <= 1e-12 * (1.0 + np.abs(roots.real))]
    return real[(real > cut.lo) & (real < cut.hi)]


def check_admissible(
    density: SpectralDensity,
    points: int = ADMISSIBILITY_POINTS,
    tol: float = ADMISSIBILITY_TOL,
) -> float:
    """
    Screen a density for negative values.

    The edge square root is divided out, so a sign change of the
    prefactor near an edge is not hidden by the vanishing edge factor.
    The prefactor minimum on each cut lies at an edge or at one of its
    stationary points, and both are always screened.

    Returns:
        Smallest value of rho / sqrt((hi - x)(x - lo)) seen

    Raises:
        NonAdmissibleDensityError: negative values below -tol
    """
    worst = np.inf
    for index, cut in enumerate(density.cuts):
        x = np.concatenate((
            [cut.lo, cut.hi],
            _stationary_points(cut),
            chebyshev_points(cut.lo, cut.hi, points),
        ))
        values = density.smooth_factor(index, x)
        if not np.all(np.isfinite(values)):
            raise NonAdmissibleDensityError(
                "Density is not finite on its support",
                details={"cut": [cut.lo, cut.hi]}
            )
        worst = min(worst, float(values.min()))
    if worst < -tol:
        raise NonAdmissibleDensityError(
            "Density takes negative values",
            details={"min_value": worst, "edges": list(density.edges)}
        )
    return worst


def build_one_cut_density(
    w: QuarticPotential, support: OneCutSupport, check: bool = False
) -> SpectralDensity:
    """rho(x) = prefactor(x) sqrt((b - x)(x - a)) / pi on [a, b]."""
    density = SpectralDensity(
        (DensityCut(support.a, support.b, one_cut_prefactor(w, support)),),
        support.edges,
    )
    if check:
        check_admissible(density)
    return density


def build_two_cut_density(
    w: QuarticPotential, support: TwoCutSupport, check: bool = True
) -> SpectralDensity:
    """rho(x) = +-(3 w3 / 2 + s1 w4 + 2 w4 x) sqrt(|q(x)|) / pi, + on the right cut."""
    right = two_cut_prefactor(w, support)
    left = tuple(-c for c in right)
    density = SpectralDensity(
        (
            DensityCut(support.a1, support.b1, left),
            DensityCut(support.a2, support.b2, right),
        ),
        support.edges,
    )
    if check:
        check_admissible(density)
    return density


# Moments and transforms


def density_moment(density: SpectralDensity, n: int, nodes: int = MOMENT_NODES) -> float:
    """n-th moment of a density, n = 0..8."""
    if not 0 <= n <= MAX_MOMENT_ORDER:
        raise PreconditionError(
            "Moment order must lie in 0..8", details={"n": n}
        )
    rule = max(nodes, DEFAULT_QUADRATURE_NODES) if len(density.cuts) > 1 else nodes
    return float(density_integral(density, lambda x: x ** n, rule))


def density_moments(density: SpectralDensity, nodes: int = MOMENT_NODES) -> Moments:
    return Moments(
        density_moment(density, 1, nodes),
        density_moment(density, 2, nodes),
        density_moment(density, 3, nodes),
        density_moment(density, 4, nodes),
    )


def _cut_cauchy(density: SpectralDensity, index: int, z: complex, nodes: int) -> complex:
    """integral over cut `index` of rho(x) / (z - x)."""
    cut = density.cuts[index]
    lo, hi = cut.lo, cut.hi
    xr = min(max(z.real, lo), hi)
    distance = abs(z - xr)
    if distance >= NEAR_FIELD_FRACTION * cut.width:
        x, v = edge_weighted_nodes(lo, hi, nodes)
        return complex(np.dot(v * density.smooth_factor(index, x), 1.0 / (z - x)))

    # Subtract the value at the nearest support point; the remainder is bounded.
    def rho(x):
        return float(density(np.array([x]))[0])

    f0 = rho(xr)

    def remainder(x):
        return (rho(x) - f0) / (z - x)

    points = [xr] if lo < xr < hi else None
    re, _ = integrate.quad(lambda x: remainder(x).real, lo, hi, points=points, limit=LOG_INTEGRAL_LIMIT)
    im, _ = integrate.quad(lambda x: remainder(x).imag, lo, hi, points=points, limit=LOG_INTEGRAL_LIMIT)
    return complex(re, im) + f0 * (np.log(z - lo) - np.log(z - hi))


def borel_transform(
    density: SpectralDensity, z: complex, nodes: int = DEFAULT_QUADRATURE_NODES
) -> complex:
    """
    G(z) = (i / pi) integral rho(x) / (z - x) dx.

    Raises:
        NearSingularityError: z within 1e-8 of the support
    """
    z = complex(z)
    if density.distance_to_support(z) < NEAR_SINGULARITY_DISTANCE:
        raise NearSingularityError(
            "Borel transform evaluated on the support",
            details={"z": [z.real, z.imag]}
        )
    total = sum(_cut_cauchy(density, k, z, nodes) for k in range(len(density.cuts)))
    return 1j / np.pi * total


def sqrt_q(support: Support, z: complex) -> complex:
    """Branch of sqrt(q(z)) cut along the support and ~ z^K at infinity."""
    value = 1.0 + 0.0j
    for edge in support.edges:
        value *= np.sqrt(complex(z) - edge)
    return value


def analytic_borel_transform(w: QuarticPotential, support: Support, z: complex) -> complex:
    """Closed-form G(z) = (2 P(z) sqrt(q(z)) - W'(z)) / (2 pi i); valid at a solved support."""
    z = complex(z)
    if isinstance(support, TwoCutSupport):
        prefactor = two_cut_prefactor(w, support)
    else:
        prefactor = one_cut_prefactor(w, support)
    p = P.polyval(z, np.asarray(prefactor))
    return (2.0 * p * sqrt_q(support, z) - w.derivative(z)) / (2j * np.pi)


# Boundary conditions


def one_cut_boundary_residuals(w: QuarticPotential, support: OneCutSupport) -> Tuple[float, float]:
    """z^0 and z^-1 conditions on the resolvent expansion; both vanish at a solution."""
    c1, c2, c3, c4 = one_cut_coefficients(support)
    p0, p1, p2 = one_cut_prefactor(w, support)
    r1 = p2 * c3 + p1 * c2 + p0 * c1 + 0.5 * w.w1
    r2 = p2 * c4 + p1 * c3 + p0 * c2 - 1.0
    return r1, r2


def gap_integral(
    support: TwoCutSupport,
    slope: float,
    offset: float,
    nodes: int = DEFAULT_GAP_NODES,
) -> float:
    """integral over the gap of sqrt(q(x)) (slope x + offset); q > 0 there."""
    b1, a2 = support.gap
    a1, b2 = support.a1, support.b2

    def outer(x):
        return np.sqrt((x - a1) * (b2 - x)) * (slope * x + offset)

    return float(edge_weighted_integral(outer, b1, a2, nodes))


def two_cut_boundary_residuals(
    w: QuarticPotential, support: TwoCutSupport, gap_nodes: int = DEFAULT_GAP_NODES
) -> Tuple[float, float, float, float]:
    """Three expansion conditions and the equal-chemical-potential gap condition."""
    c1, c2, c3, c4 = two_cut_coefficients(support)[:4]
    shift = 0.5 * (4.0 * c1 * w.w4 + 3.0 * w.w3)
    r1 = 2.0 * c2 * w.w4 + c1 * shift + w.w2
    r2 = 2.0 * c3 * w.w4 + c2 * shift + 0.5 * w.w1
    r3 = 2.0 * c4 * w.w4 + c3 * shift - 1.0
    r4 = gap_integral(support, 4.0 * w.w4, 4.0 * w.w4 * c1 + 3.0 * w.w3, gap_nodes)
    return r1, r2, r3, r4


def boundary_residuals(w: QuarticPotential, support: Support) -> Tuple[float, ...]:
    if isinstance(support, TwoCutSupport):
        return two_cut_boundary_residuals(w, support)
    return one_cut_boundary_residuals(w, support)


def expansion_moments(w: QuarticPotential, support: Support) -> Moments:
    """m1..m4 read off the resolvent expansion without checking the boundary conditions."""
    if isinstance(support, TwoCutSupport):
        c = np.concatenate(([0.0], two_cut_series(support, 8)))
        c[1:8] = two_cut_coefficients(support)
        lead = 2.0 * w.w4
        shift = 0.5 * (4.0 * c[1] * w.w4 + 3.0 * w.w3)
        m = [lead * c[k + 4] + shift * c[k + 3] for k in range(1, 5)]
    else:
        c = np.concatenate(([0.0], one_cut_series(support, 8)))
        p0, p1, p2 = one_cut_prefactor(w, support)
        m = [p2 * c[k + 4] + p1 * c[k + 3] + p0 * c[k + 2] for k in range(1, 5)]
    return Moments(*m)


def moment_extraction(
    w: QuarticPotential, support: Support, residual_tol: float = RESIDUAL_GATE
) -> Moments:
    """
    Moments of the equilibrium measure from the expansion coefficients.

    Raises:
        ResidualViolationError: boundary residuals do not vanish
    """
    residuals = np.asarray(boundary_residuals(w, support))
    norm = float(np.max(np.abs(residuals)))
    if not norm < residual_tol:
        raise ResidualViolationError(
            "Boundary residuals do not vanish; moments are undefined",
            details={"residual_norm": norm, "edges": list(support.edges)}
        )
    return expansion_moments(w, support)
