"""
Tests for the Metropolis sampler, empirical densities and density comparison.
"""

import numpy as np
import pytest
from scipy.integrate import cumulative_trapezoid

from src.enums import Ansatz, GeometryModel, InitMode
from src.models import McConfig
from src.services.equilibrium import (
    gaussian_baseline_density,
    initial_solution,
    solve_one_cut_01,
    solve_two_cut_01,
)
from src.services.montecarlo import (
    ChainState,
    MonteCarloManager,
    compare_densities,
    empirical_density,
    initial_values,
    metropolis_sweep,
    read_checkpoint,
    run_chain,
)
from src.utils import ErrorCode, SamplingError, ValidationError


def small_config(**overrides):
    values = dict(model=GeometryModel.PLUS, g=-4.0, n=6, sweeps=300, burnin=100, seed=7, sample_interval=5)
    values.update(overrides)
    return McConfig(**values)


def test_pair_moves_keep_zero_trace():
    rng = np.random.default_rng(1)
    state = ChainState.from_values([-0.5, 0.5], GeometryModel.MINUS, -2.0)
    for _ in range(500):
        metropolis_sweep(state, 0.3, rng)
        assert abs(state.values.sum()) < 1e-12
        assert state.values[0] != state.values[1]


def test_incremental_energy_matches_audit():
    rng = np.random.default_rng(3)
    state = ChainState.from_values(np.linspace(-1.0, 1.0, 16), GeometryModel.PLUS, -4.0)
    for _ in range(200):
        metropolis_sweep(state, 0.1, rng)
    assert state.audit() < 1e-9


def test_positive_trace_restriction():
    rng = np.random.default_rng(5)
    state = ChainState.from_values(np.linspace(-1.0, 1.0, 8), GeometryModel.PLUS, -5.0)
    for _ in range(300):
        metropolis_sweep(state, 0.2, rng, positive_trace=True)
        assert state.sums.p1 >= 0.0


def test_even_initialisation_centres_minus_model():
    values = initial_values(small_config(model=GeometryModel.MINUS, n=5))
    assert values.sum() == pytest.approx(0.0, abs=1e-14)
    assert np.all(np.diff(values) > 0)


def test_theory_initialisation_follows_quantiles():
    config = small_config(
        model=GeometryModel.GAUSSIAN_BASELINE, g=0.0, n=200,
        init=InitMode.FROM_THEORY, init_density=gaussian_baseline_density(),
    )
    values = initial_values(config)
    assert np.all(np.abs(values) < 2.0)
    assert np.mean(values) == pytest.approx(0.0, abs=1e-4)
    assert np.mean(values ** 2) == pytest.approx(1.0, abs=0.03)


def test_explicit_initialisation_is_flipped_for_positive_trace():
    config = small_config(n=3, init=InitMode.EXPLICIT, init_values=[-1.0, -0.5, 0.2], positive_trace=True)
    assert initial_values(config).sum() > 0.0


def test_explicit_initialisation_rejects_coincident_values():
    config = small_config(n=2, init=InitMode.EXPLICIT, init_values=[0.3, 0.3])
    with pytest.raises(SamplingError):
        initial_values(config)


def test_chain_is_deterministic_for_a_seed():
    first = run_chain(small_config())
    second = run_chain(small_config())
    assert np.array_equal(first.final_values, second.final_values)
    assert np.array_equal(first.energy, second.energy)
    assert first.sweeps[0] == 105
    assert first.snapshots.shape == (40, 6)
    assert first.max_audit_drift < 1e-9


def test_burn_in_reports_each_window():
    windows = []
    run_chain(small_config(), on_window=lambda sweep, rate, width: windows.append(sweep))
    assert windows == list(range(10, 101, 10))


def test_chain_without_samples():
    with pytest.raises(SamplingError) as exc_info:
        run_chain(small_config(sweeps=20, burnin=10, sample_interval=50))
    assert exc_info.value.code is ErrorCode.EMPTY_SAMPLES


def test_build_config_reduces_burn_in(settings):
    manager = MonteCarloManager(settings)
    config = manager.build_config(GeometryModel.MINUS, 4, sweeps=100, burnin=200)
    assert config.burnin == 10
    assert config.sample_interval == settings.MC_SAMPLE_INTERVAL


@pytest.mark.parametrize(
    "kwargs",
    [
        {"model": GeometryModel.PLUS, "n": 1},
        {"model": GeometryModel.MINUS, "n": 4, "positive_trace": True},
        {"model": GeometryModel.PLUS, "n": 4, "init": InitMode.FROM_THEORY},
        {"model": GeometryModel.PLUS, "n": 4, "init": InitMode.EXPLICIT, "init_values": [0.1, 0.2]},
    ],
)
def test_build_config_rejects_inconsistent_settings(settings, kwargs):
    with pytest.raises(ValidationError):
        MonteCarloManager(settings).build_config(sweeps=100, burnin=10, **kwargs)


def test_manager_run_writes_checkpoint(settings, out_dir):
    manager = MonteCarloManager(settings)
    config = manager.build_config(GeometryModel.PLUS, 6, g=-4.0, sweeps=200, burnin=50, seed=11)
    path = f"{out_dir}/final_state.bin"
    result = manager.run(config, checkpoint_path=path)

    summary = result["summary"]
    assert summary["samples"] == result["trace"].sweeps.size
    assert 0.0 <= summary["acceptance_rate"] <= 1.0
    assert result["histogram"].mass() == pytest.approx(1.0)

    values, metadata = read_checkpoint(path)
    assert np.array_equal(values, result["trace"].final_values)
    assert metadata["model"] == "10"
    assert metadata["seed"] == 11
    assert metadata["n"] == 6


def test_histogram_is_normalised():
    samples = np.random.default_rng(0).normal(size=(50, 40))
    histogram = empirical_density(samples)
    assert histogram.mass() == pytest.approx(1.0)
    assert not histogram.mirrored


def test_canonical_histogram_mirrors_negative_samples():
    samples = np.random.default_rng(0).normal(-1.0, 0.3, size=1000)
    histogram = empirical_density(samples, bins=20, canonical=True)
    assert histogram.mirrored
    assert np.sum(histogram.centers * histogram.density * histogram.widths) > 0.0


def test_histogram_of_empty_sample():
    with pytest.raises(SamplingError) as exc_info:
        empirical_density(np.array([np.nan]))
    assert exc_info.value.code is ErrorCode.EMPTY_SAMPLES


def test_compare_identical_densities():
    x = np.linspace(-2.0, 2.0, 101)
    rho = gaussian_baseline_density()(x)
    metrics = compare_densities(x, rho, x, rho)
    assert metrics.l1 == 0.0
    assert metrics.sup_norm == 0.0
    assert not metrics.resampled
    assert all(abs(d) < 1e-15 for d in metrics.moment_differences.values())


def test_compare_resamples_onto_histogram_grid():
    x = np.linspace(-2.0, 2.0, 401)
    hx = np.linspace(-1.95, 1.95, 40)
    density = gaussian_baseline_density()
    metrics = compare_densities(x, density(x), hx, density(hx))
    assert metrics.resampled
    assert metrics.note
    assert metrics.sup_norm < 1e-3


def test_compare_rejects_unsorted_grid():
    with pytest.raises(ValidationError):
        compare_densities([0.0, 1.0], [1.0, 1.0], [1.0, 0.0], [1.0, 1.0])


@pytest.mark.slow
def test_gaussian_baseline_second_moment():
    """E[tr M^2 / N] = 1 at every N."""
    config = McConfig(
        model=GeometryModel.GAUSSIAN_BASELINE, n=64, sweeps=20000, burnin=2000, seed=2024, sample_interval=5
    )
    trace = run_chain(config)
    assert abs(np.mean(trace.m2) - 1.0) < 3.0 * trace.m2_stderr


@pytest.mark.slow
def test_two_eigenvalue_minus_model_marginal():
    """At N = 2 the eigenvalues are (x, -x) with density proportional to x^2 exp(-4 (8 x^4 + 2 g x^2))."""
    g = -1.0
    config = McConfig(
        model=GeometryModel.MINUS, g=g, n=2, sweeps=1002000, burnin=2000, seed=99, sample_interval=2, width=0.3
    )
    trace = run_chain(config)
    samples = np.sort(trace.snapshots.ravel())

    x = np.linspace(-1.5, 1.5, 30001)
    weight = x ** 2 * np.exp(-4.0 * (8.0 * x ** 4 + 2.0 * g * x ** 2))
    cdf = cumulative_trapezoid(weight, x, initial=0.0)
    cdf /= cdf[-1]
    empirical = np.arange(1, samples.size + 1) / samples.size
    assert samples.size >= 10 ** 6
    assert np.max(np.abs(empirical - np.interp(samples, x, cdf))) < 0.01


def l1_to_theory(trace, density, canonical=False):
    histogram = empirical_density(trace.snapshots, canonical=canonical)
    x = np.linspace(density.lower, density.upper, 4001)
    return compare_densities(x, density(x), histogram.centers, histogram.density).l1


@pytest.mark.slow
def test_plus_one_cut_histogram_matches_theory():
    _, theory = solve_one_cut_01(-3.0)
    config = McConfig(model=GeometryModel.PLUS, g=-3.0, n=128, sweeps=20000, burnin=2000, seed=11)
    trace = run_chain(config)
    assert np.max(np.abs(trace.order_parameter)) < 0.2
    assert l1_to_theory(trace, theory) < 0.05


@pytest.mark.slow
def test_minus_two_cut_histogram_matches_theory():
    _, theory = solve_two_cut_01(-7.0)
    config = McConfig(model=GeometryModel.MINUS, g=-7.0, n=128, sweeps=20000, burnin=2000, seed=12)
    assert l1_to_theory(run_chain(config), theory) < 0.05


@pytest.mark.slow
def test_broken_phase_chain_started_from_theory():
    """Started on the m1 > 0 density, the chain stays in the broken phase."""
    theory = initial_solution(GeometryModel.PLUS, Ansatz.ASYM2, -4.0).density
    config = McConfig(
        model=GeometryModel.PLUS, g=-4.0, n=128, sweeps=20000, burnin=2000, seed=13,
        init=InitMode.FROM_THEORY, init_density=theory,
    )
    trace = run_chain(config)
    assert np.all(np.abs(trace.order_parameter) > 0.2)
    assert l1_to_theory(trace, theory, canonical=True) < 0.05
