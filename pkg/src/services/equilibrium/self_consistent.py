"""
Self-consistency between the effective potential and its own moments.

Each ansatz becomes a ResidualSystem: a map from a flat parameter vector to
residuals, with converters to and from CandidateParams and an ordering
guard used by the Newton line search.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from src.enums import Ansatz, ErrorCode, GeometryModel
from src.models import (
    CandidateParams,
    EffectiveCoefficients,
    Moments,
    OneCutSupport,
    QuarticPotential,
    SpectralDensity,
    TwoCutSupport,
)
from src.services.equilibrium.closed_form import critical_density
from src.services.equilibrium.config import DEFAULT_GAP_NODES, ORDERING_MARGIN
from src.services.equilibrium.riemann_hilbert import (
    build_one_cut_density,
    build_two_cut_density,
    gap_integral,
    one_cut_boundary_residuals,
    one_cut_prefactor,
    one_cut_series,
    two_cut_coefficients,
)
from src.utils import ModelDomainError, PreconditionError


def effective_coefficients(model: GeometryModel, g: float, m: Moments) -> EffectiveCoefficients:
    """
    Quartic effective potential absorbing the trace-squared interaction.

    Raises:
        ModelDomainError: the Gaussian baseline has no effective potential
    """
    if model is GeometryModel.PLUS:
        w = QuarticPotential(
            8.0 * m.m3 + 4.0 * g * m.m1,
            2.0 * (6.0 * m.m2 + g),
            8.0 * m.m1,
            2.0,
        )
    elif model is GeometryModel.MINUS:
        w = QuarticPotential(0.0, 2.0 * (6.0 * m.m2 + g), 0.0, 2.0)
    else:
        raise ModelDomainError(
            "The effective potential is defined for the (1,0) and (0,1) models only",
            code=ErrorCode.UNSUPPORTED_MODEL,
            details={"model": model.value}
        )
    return EffectiveCoefficients(w=w, source_moments=m, model=model, g=g)


def effective_potential(model: GeometryModel, g: float, m: Moments) -> QuarticPotential:
    return effective_coefficients(model, g, m).w


def _require_interacting(model: GeometryModel) -> None:
    if model not in (GeometryModel.PLUS, GeometryModel.MINUS):
        raise ModelDomainError(
            "Self-consistent systems exist for the (1,0) and (0,1) models only",
            code=ErrorCode.UNSUPPORTED_MODEL,
            details={"model": model.value}
        )


# (1,0) two-cut systems


def residuals_10_two_cut(
    g: float, params: CandidateParams, gap_nodes: int = DEFAULT_GAP_NODES
) -> np.ndarray:
    """Seven conditions for (a1, b1, a2, b2, m1, m2, m3)."""
    if params.ansatz is not Ansatz.ASYM2:
        raise PreconditionError("Seven-condition system needs the asym2 ansatz")
    support = TwoCutSupport(*params.support)
    m1, m2, m3 = params.moments.as_tuple()
    return _two_cut_conditions(g, support, m1, m2, m3, gap_nodes)


def _two_cut_conditions(g, support, m1, m2, m3, gap_nodes):
    c1, c2, c3, c4, c5, c6, c7 = two_cut_coefficients(support)
    k = c1 + 3.0 * m1
    return np.array([
        4.0 * c2 + 4.0 * c1 * k + 2.0 * (g + 6.0 * m2),
        4.0 * c3 + 4.0 * c2 * k + 2.0 * (g * m1 + 2.0 * m3),
        4.0 * c4 + 4.0 * c3 * k - 1.0,
        4.0 * c5 + 4.0 * c4 * k - m1,
        4.0 * c6 + 4.0 * c5 * k - m2,
        4.0 * c7 + 4.0 * c6 * k - m3,
        gap_integral(support, 1.0, k, gap_nodes),
    ])


def reduced_moments_10(support: TwoCutSupport) -> Moments:
    """Moments eliminated from the last three expansion conditions; nan where singular."""
    c1, _, _, c4, c5, c6, c7 = two_cut_coefficients(support)
    denominator = 1.0 - 12.0 * c4
    if denominator == 0.0:
        return Moments(np.nan, np.nan, np.nan)
    m1 = (4.0 * c5 + 4.0 * c4 * c1) / denominator
    k = c1 + 3.0 * m1
    return Moments(m1, 4.0 * c6 + 4.0 * c5 * k, 4.0 * c7 + 4.0 * c6 * k)


def residuals_10_two_cut_reduced(
    g: float, support: TwoCutSupport, gap_nodes: int = DEFAULT_GAP_NODES
) -> np.ndarray:
    """Four conditions for the edges alone, moments eliminated."""
    m = reduced_moments_10(support)
    full = _two_cut_conditions(g, support, m.m1, m.m2, m.m3, gap_nodes)
    return full[[0, 1, 2, 6]]


# One-cut systems


def _one_cut_moment_residuals(w: QuarticPotential, support: OneCutSupport, m: Moments) -> np.ndarray:
    c = np.concatenate(([0.0], one_cut_series(support, 7)))
    p0, p1, p2 = one_cut_prefactor(w, support)
    extracted = [p2 * c[k + 4] + p1 * c[k + 3] + p0 * c[k + 2] for k in (1, 2, 3)]
    return np.asarray(extracted) - np.asarray(m.as_tuple())


def residuals_10_one_cut(g: float, params: CandidateParams) -> np.ndarray:
    """Two boundary conditions and three moment conditions for (a, b, m1, m2, m3)."""
    if params.ansatz is not Ansatz.ASYM1:
        raise PreconditionError("Five-condition system needs the asym1 ansatz")
    support = OneCutSupport(*params.support)
    w = effective_potential(GeometryModel.PLUS, g, params.moments)
    r1, r2 = one_cut_boundary_residuals(w, support)
    return np.concatenate(([r1, r2], _one_cut_moment_residuals(w, support, params.moments)))


def residuals_symmetric_one_cut(model: GeometryModel, g: float, b: float, m2: float) -> np.ndarray:
    """Normalisation and m2 consistency on [-b, b]."""
    m = Moments(0.0, m2, 0.0)
    support = OneCutSupport(-b, b)
    w = effective_potential(model, g, m)
    _, r2 = one_cut_boundary_residuals(w, support)
    return np.array([r2, _one_cut_moment_residuals(w, support, m)[1]])


def residuals_symmetric_two_cut(model: GeometryModel, g: float, a: float, b: float) -> np.ndarray:
    """First and normalisation conditions on -b..-a, a..b with m2 = 4 c6."""
    _require_interacting(model)
    support = TwoCutSupport.symmetric(a, b)
    _, c2, _, c4, _, c6, _ = two_cut_coefficients(support)
    m2 = 4.0 * c6
    return np.array([4.0 * c2 + 2.0 * (g + 6.0 * m2), 4.0 * c4 - 1.0])


# Systems as vector maps


@dataclass(frozen=True)
class ResidualSystem:
    """Residual map over a flat parameter vector for one (model, g, ansatz)."""

    model: GeometryModel
    g: float
    ansatz: Ansatz
    dimension: int
    residuals: Callable[[np.ndarray], np.ndarray]
    to_params: Callable[[np.ndarray], CandidateParams]
    from_params: Callable[[CandidateParams], np.ndarray]
    reduced: bool = False

    def ordered(self, x: np.ndarray) -> bool:
        """Ordering guard with a small margin between consecutive edges."""
        x = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(x)):
            return False
        if self.ansatz is Ansatz.SYM1:
            return x[0] > ORDERING_MARGIN and x[1] >= 0.0
        if self.ansatz is Ansatz.SYM2:
            return ORDERING_MARGIN < x[0] and x[0] + ORDERING_MARGIN < x[1]
        edges = x[:2] if self.ansatz is Ansatz.ASYM1 else x[:4]
        if not np.all(np.diff(edges) > ORDERING_MARGIN):
            return False
        if self.reduced:
            return True
        m1, m2 = x[len(edges)], x[len(edges) + 1]
        return m2 >= m1 * m1

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.residuals(np.asarray(x, dtype=float))


def build_system(
    model: GeometryModel,
    g: float,
    ansatz: Ansatz,
    reduced: bool = False,
    gap_nodes: int = DEFAULT_GAP_NODES,
) -> ResidualSystem:
    """
    Residual system for one ansatz.

    Raises:
        ModelDomainError: asymmetric ansatz for a model without one
    """
    _require_interacting(model)
    if not ansatz.symmetric and model is not GeometryModel.PLUS:
        raise ModelDomainError(
            "Asymmetric solutions are sought for the (1,0) model only",
            details={"model": model.value, "ansatz": ansatz.value}
        )

    if ansatz is Ansatz.SYM1:
        return ResidualSystem(
            model, g, ansatz, 2,
            residuals=lambda x: residuals_symmetric_one_cut(model, g, x[0], x[1]),
            to_params=lambda x: CandidateParams(ansatz, (x[0],), Moments(0.0, x[1], 0.0)),
            from_params=lambda p: np.array([p.support[0], p.moments.m2]),
        )

    if ansatz is Ansatz.SYM2:
        def sym2_params(x):
            c6 = two_cut_coefficients(TwoCutSupport.symmetric(x[0], x[1]))[5]
            return CandidateParams(ansatz, (x[0], x[1]), Moments(0.0, 4.0 * c6, 0.0))

        return ResidualSystem(
            model, g, ansatz, 2,
            residuals=lambda x: residuals_symmetric_two_cut(model, g, x[0], x[1]),
            to_params=sym2_params,
            from_params=lambda p: np.array(p.support),
        )

    if ansatz is Ansatz.ASYM1:
        def asym1_params(x):
            return CandidateParams(ansatz, (x[0], x[1]), Moments(x[2], x[3], x[4]))

        return ResidualSystem(
            model, g, ansatz, 5,
            residuals=lambda x: residuals_10_one_cut(g, asym1_params(x)),
            to_params=asym1_params,
            from_params=lambda p: np.array(p.support + p.moments.as_tuple()),
        )

    if reduced:
        def reduced_params(x):
            return CandidateParams(ansatz, tuple(x), reduced_moments_10(TwoCutSupport(*x)))

        return ResidualSystem(
            model, g, ansatz, 4,
            residuals=lambda x: residuals_10_two_cut_reduced(g, TwoCutSupport(*x), gap_nodes),
            to_params=reduced_params,
            from_params=lambda p: np.array(p.support),
            reduced=True,
        )

    def asym2_params(x):
        return CandidateParams(ansatz, tuple(x[:4]), Moments(x[4], x[5], x[6]))

    return ResidualSystem(
        model, g, ansatz, 7,
        residuals=lambda x: residuals_10_two_cut(g, asym2_params(x), gap_nodes),
        to_params=asym2_params,
        from_params=lambda p: np.array(p.support + p.moments.as_tuple()),
    )


def density_for_params(
    model: GeometryModel, g: float, params: CandidateParams, check: bool = True
) -> SpectralDensity:
    """
    Density built from the effective potential at the candidate's own moments.

    Raises:
        NonAdmissibleDensityError: negative density (when check is set)
    """
    w = effective_potential(model, g, params.moments)
    support = params.full_support()
    if params.ansatz is Ansatz.SYM2 and params.support[0] == 0.0:
        return critical_density(params.support[1])
    if isinstance(support, TwoCutSupport):
        return build_two_cut_density(w, support, check=check)
    return build_one_cut_density(w, support, check=check)


def system_residual_norm(system: ResidualSystem, params: CandidateParams) -> float:
    return float(np.max(np.abs(system(system.from_params(params)))))


def candidate_from_vector(system: ResidualSystem, x) -> Optional[CandidateParams]:
    """CandidateParams for x, or None when x breaks the ordering constraints."""
    try:
        return system.to_params(np.asarray(x, dtype=float))
    except (PreconditionError, ValueError):
        return None
