"""
Metropolis sampling of exp(-N^2 E(lambda)) over eigenvalue configurations.

Energies are updated incrementally: power sums give the action change in
O(1) and the pair log sum changes in O(N) per move.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid

from src.enums import GeometryModel, InitMode
from src.models import EigenvalueConfig, McConfig, McTrace, PowerSums, SpectralDensity
from src.services.ensemble import (
    action_from_power_sums,
    coulomb_energy,
    log_distance_delta,
    pair_log_distance_delta,
    power_sum_delta,
)
from src.services.ensemble.config import REPULSION_WEIGHT
from src.services.montecarlo.config import (
    ADAPTATION_WINDOW,
    AUDIT_WARN_DRIFT,
    EVEN_SPAN,
    TARGET_ACCEPTANCE_HIGH,
    TARGET_ACCEPTANCE_LOW,
    THEORY_CDF_POINTS,
    WIDTH_GROW,
    WIDTH_SHRINK,
)
from src.utils import ErrorCode, SamplingError, format_structured_log, get_logger

logger = get_logger(__name__)


@dataclass
class ChainState:
    """Mutable chain state: eigenvalues with cached power sums and energy."""

    values: np.ndarray
    model: GeometryModel
    g: float
    sums: PowerSums
    energy: float

    @classmethod
    def from_values(cls, values, model: GeometryModel, g: float) -> "ChainState":
        config = EigenvalueConfig(values, model, g).validate()
        return cls(
            values=np.array(config.values, dtype=float),
            model=model,
            g=g,
            sums=PowerSums.from_values(config.values),
            energy=coulomb_energy(config),
        )

    @property
    def n(self) -> int:
        return int(self.values.size)

    def action(self, sums: PowerSums) -> float:
        return action_from_power_sums(sums, self.n, self.model, self.g)

    def audit(self) -> float:
        """Recompute sums and energy from scratch; return the drift of the cached energy."""
        fresh = coulomb_energy(EigenvalueConfig(self.values, self.model, self.g, trace_tolerance=np.inf))
        drift = abs(fresh - self.energy)
        self.sums = PowerSums.from_values(self.values)
        self.energy = fresh
        return drift

    def recenter(self) -> None:
        """Shift a (0,1) state back onto zero trace."""
        self.values -= self.values.mean()
        self.audit()


def _single_moves(state: ChainState, width: float, rng: np.random.Generator, positive_trace: bool) -> int:
    n = state.n
    scale = float(n * n)
    repulsion = REPULSION_WEIGHT / scale
    indices = rng.integers(n, size=n)
    steps = rng.normal(0.0, width, size=n) if width > 0 else np.zeros(n)
    uniforms = rng.random(n)
    current_action = state.action(state.sums)
    accepted = 0
    for i, step, u in zip(indices, steps, uniforms):
        old = state.values[i]
        new = old + step
        log_delta = log_distance_delta(state.values, i, new)
        if log_delta == -np.inf:
            continue
        sums = power_sum_delta(state.sums, old, new)
        if positive_trace and sums.p1 < 0.0:
            continue
        new_action = state.action(sums)
        delta = (new_action - current_action) - repulsion * log_delta
        if delta <= 0.0 or u < math.exp(-scale * delta):
            state.values[i] = new
            state.sums = sums
            state.energy += delta
            current_action = new_action
            accepted += 1
    return accepted


def _pair_moves(state: ChainState, width: float, rng: np.random.Generator) -> int:
    n = state.n
    scale = float(n * n)
    repulsion = REPULSION_WEIGHT / scale
    first = rng.integers(n, size=n)
    second = rng.integers(n - 1, size=n)
    second = second + (second >= first)
    steps = rng.normal(0.0, width, size=n) if width > 0 else np.zeros(n)
    uniforms = rng.random(n)
    current_action = state.action(state.sums)
    accepted = 0
    for i, j, step, u in zip(first, second, steps, uniforms):
        old_i, old_j = state.values[i], state.values[j]
        new_i, new_j = old_i + step, old_j - step
        log_delta = pair_log_distance_delta(state.values, i, j, new_i, new_j)
        if log_delta == -np.inf:
            continue
        sums = power_sum_delta(power_sum_delta(state.sums, old_i, new_i), old_j, new_j)
        new_action = state.action(sums)
        delta = (new_action - current_action) - repulsion * log_delta
        if delta <= 0.0 or u < math.exp(-scale * delta):
            state.values[i] = new_i
            state.values[j] = new_j
            state.sums = sums
            state.energy += delta
            current_action = new_action
            accepted += 1
    return accepted


def metropolis_sweep(
    state: ChainState,
    width: float,
    rng: np.random.Generator,
    positive_trace: bool = False,
) -> float:
    """
    N proposals applied to `state` in place.

    Single-eigenvalue Gaussian moves for (1,0) and the Gaussian baseline,
    trace-preserving pair moves for (0,1). Proposals landing on another
    eigenvalue are rejected.

    Returns:
        Fraction of accepted proposals
    """
    if state.model is GeometryModel.MINUS:
        accepted = _pair_moves(state, width, rng)
    else:
        accepted = _single_moves(state, width, rng, positive_trace)
    return accepted / state.n


def _quantile_values(density: SpectralDensity, n: int) -> np.ndarray:
    x = np.linspace(density.lower, density.upper, THEORY_CDF_POINTS)
    cdf = cumulative_trapezoid(density(x), x, initial=0.0)
    cdf /= cdf[-1]
    keep = np.concatenate(([True], np.diff(cdf) > 0.0))
    return np.interp((np.arange(n) + 0.5) / n, cdf[keep], x[keep])


def initial_values(config: McConfig) -> np.ndarray:
    """Starting eigenvalues for the chosen initialisation."""
    n = config.n
    if config.init is InitMode.EVEN:
        values = np.linspace(-EVEN_SPAN, EVEN_SPAN, n)
    elif config.init is InitMode.FROM_THEORY:
        values = _quantile_values(config.init_density, n)
    else:
        values = np.array(config.init_values, dtype=float)
    if config.model is GeometryModel.MINUS:
        values = values - values.mean()
    if config.positive_trace and values.sum() < 0.0:
        values = -values
    if np.unique(values).size != n:
        raise SamplingError(
            "Initial eigenvalues must be distinct",
            details={"n": n, "distinct": int(np.unique(values).size)}
        )
    return values


def run_chain(
    config: McConfig,
    on_window: Optional[Callable[[int, float, float], None]] = None,
) -> McTrace:
    """
    Burn-in with width adaptation, then fixed-width sampling.

    Every `sample_interval` sampling sweeps the order parameter P1/N, m2,
    the energy, the acceptance since the previous sample and a snapshot of
    the eigenvalues are recorded. (0,1) states are re-centred on zero trace
    and every state's energy is audited from scratch periodically.

    Args:
        config: Chain configuration
        on_window: Called with (sweep, acceptance, width) after each burn-in window

    Returns:
        McTrace of the sampling phase

    Raises:
        SamplingError: invalid initial state, or no samples recorded
    """
    rng = np.random.default_rng(config.seed)
    state = ChainState.from_values(initial_values(config), config.model, config.g)
    width = config.width
    max_drift = 0.0

    logger.info(
        format_structured_log(
            "Starting Metropolis chain",
            {
                "model": config.model.value,
                "g": config.g,
                "n": config.n,
                "sweeps": config.sweeps,
                "burnin": config.burnin,
                "seed": config.seed,
                "init": config.init.value,
            }
        )
    )

    window_acceptance = 0.0
    for sweep in range(1, config.burnin + 1):
        window_acceptance += metropolis_sweep(state, width, rng, config.positive_trace)
        if sweep % ADAPTATION_WINDOW == 0:
            rate = window_acceptance / ADAPTATION_WINDOW
            if rate < TARGET_ACCEPTANCE_LOW:
                width *= WIDTH_SHRINK
            elif rate > TARGET_ACCEPTANCE_HIGH:
                width *= WIDTH_GROW
            logger.debug(f"Burn-in sweep {sweep}: acceptance={rate:.3f}, width={width:.4g}")
            if on_window is not None:
                on_window(sweep, rate, width)
            window_acceptance = 0.0
        max_drift = max(max_drift, _maintain(state, sweep, config))

    records = {"sweeps": [], "order_parameter": [], "m2": [], "energy": [], "acceptance": []}
    snapshots = []
    since_sample = 0.0
    total_acceptance = 0.0
    sampling_sweeps = config.sweeps - config.burnin
    for k in range(1, sampling_sweeps + 1):
        sweep = config.burnin + k
        rate = metropolis_sweep(state, width, rng, config.positive_trace)
        since_sample += rate
        total_acceptance += rate
        max_drift = max(max_drift, _maintain(state, sweep, config))
        if k % config.sample_interval == 0:
            records["sweeps"].append(sweep)
            records["order_parameter"].append(state.sums.p1 / state.n)
            records["m2"].append(state.sums.p2 / state.n)
            records["energy"].append(state.energy)
            records["acceptance"].append(since_sample / config.sample_interval)
            snapshots.append(state.values.copy())
            since_sample = 0.0

    max_drift = max(max_drift, state.audit())
    if not snapshots:
        raise SamplingError(
            "Chain recorded no samples; sample_interval exceeds the sampling sweeps",
            code=ErrorCode.EMPTY_SAMPLES,
            details={"sampling_sweeps": sampling_sweeps, "sample_interval": config.sample_interval}
        )

    trace = McTrace(
        sweeps=np.asarray(records["sweeps"], dtype=int),
        order_parameter=np.asarray(records["order_parameter"]),
        m2=np.asarray(records["m2"]),
        energy=np.asarray(records["energy"]),
        acceptance=np.asarray(records["acceptance"]),
        acceptance_rate=total_acceptance / sampling_sweeps,
        final_values=state.values.copy(),
        final_width=width,
        snapshots=np.asarray(snapshots),
        max_audit_drift=max_drift,
    )
    logger.info(
        format_structured_log(
            "Metropolis chain finished",
            {
                "model": config.model.value,
                "g": config.g,
                "acceptance_rate": trace.acceptance_rate,
                "mean_energy": trace.mean_energy,
                "energy_stderr": trace.energy_stderr,
                "mean_order_parameter": float(np.mean(trace.order_parameter)),
                "final_width": width,
                "max_audit_drift": max_drift,
            }
        )
    )
    return trace


def _maintain(state: ChainState, sweep: int, config: McConfig) -> float:
    """Periodic re-centring and energy audits; returns the drift found."""
    drift = 0.0
    if state.model is GeometryModel.MINUS and sweep % config.recenter_interval == 0:
        drift = state.audit()
        state.recenter()
    elif sweep % config.audit_interval == 0:
        drift = state.audit()
    if drift > AUDIT_WARN_DRIFT:
        logger.warning(f"Energy bookkeeping drift {drift:.3e} at sweep {sweep}")
    return drift
