import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qqcorr import (
    DephasingFactor,
    NoiseConfig,
    TrajectoryConfig,
    apply_channel,
    dephasing_exponents,
    random_density,
    rho_entangled,
    rho_separable,
    simulate_trajectories,
)
from qqcorr.errors import InvalidTrajectoryConfig, NegativeTime
from qqcorr.sweep import montecarlo_z_scores

# Exponent tables exactly as published for the two noise settings.
MULTILOCAL_EXPONENTS = np.array(
    [
        [0, 1, 4, 4, 5, 8],
        [1, 0, 1, 5, 4, 5],
        [4, 1, 0, 8, 5, 4],
        [4, 5, 8, 0, 1, 4],
        [5, 4, 5, 1, 0, 1],
        [8, 5, 4, 4, 1, 0],
    ]
)
COLLECTIVE_EXPONENTS = np.array(
    [
        [0, 1, 4, 4, 9, 16],
        [1, 0, 1, 1, 4, 9],
        [4, 1, 0, 0, 1, 4],
        [4, 1, 0, 0, 1, 4],
        [9, 4, 1, 1, 0, 1],
        [16, 9, 4, 4, 1, 0],
    ]
)


def test_exponent_tables_match_published_matrices():
    np.testing.assert_array_equal(dephasing_exponents("multilocal"), MULTILOCAL_EXPONENTS)
    np.testing.assert_array_equal(dephasing_exponents("collective"), COLLECTIVE_EXPONENTS)
    np.testing.assert_array_equal(
        dephasing_exponents("combined"), MULTILOCAL_EXPONENTS + COLLECTIVE_EXPONENTS
    )


def test_exponent_highlights():
    assert dephasing_exponents("multilocal")[0, 5] == 8
    assert dephasing_exponents("collective")[0, 5] == 16
    assert dephasing_exponents("collective")[2, 3] == 0  # decoherence-free element


def test_dephasing_factor_bridges_gamma_and_gamma_tilde():
    f = DephasingFactor.from_time(0.7, gamma_rate=2.0)
    assert f.gamma == pytest.approx(math.exp(-0.7 * 2.0 / 8.0))
    assert f.gamma_tilde == pytest.approx(f.gamma**8, abs=1e-13)
    assert DephasingFactor.from_time(0.0).gamma == 1.0
    with pytest.raises(NegativeTime):
        DephasingFactor.from_time(-0.1)
    with pytest.raises(ValueError):
        DephasingFactor(0.5, 0.5)


def test_apply_channel_t0_is_identity(rng):
    state = random_density(rng)
    for mode in ("multilocal", "collective", "combined"):
        out = apply_channel(state, 0.0, NoiseConfig(1.0, mode))
        np.testing.assert_array_equal(out.matrix, state.matrix)


def test_apply_channel_fixes_diagonal_states():
    diag = np.diag([0.1, 0.2, 0.3, 0.2, 0.1, 0.1]).astype(complex)
    for mode in ("multilocal", "collective", "combined"):
        out = apply_channel(diag, 3.7, NoiseConfig(1.0, mode))
        np.testing.assert_array_equal(out.matrix, diag)


def test_apply_channel_entrywise_decay():
    # At t*Gamma = 8 ln 2 the basic factor is exactly 1/2.
    t = 8.0 * math.log(2.0)
    out = apply_channel(rho_entangled(0.25), t, NoiseConfig(1.0, "multilocal"))
    assert out.matrix[0, 5].real == pytest.approx(0.125 * 0.5**8, rel=1e-12)
    assert out.matrix[2, 3].real == pytest.approx(0.25 * 0.5**8, rel=1e-12)


def test_apply_channel_rejects_negative_time():
    with pytest.raises(NegativeTime):
        apply_channel(rho_entangled(0.1), -1e-9, NoiseConfig())


@settings(max_examples=30, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=3.0),
    st.floats(min_value=0.0, max_value=3.0),
    st.sampled_from(["multilocal", "collective", "combined"]),
)
def test_channel_semigroup_property(t1, t2, mode):
    cfg = NoiseConfig(1.3, mode)
    state = rho_entangled(0.2)
    once = apply_channel(state, t1 + t2, cfg)
    twice = apply_channel(apply_channel(state, t1, cfg), t2, cfg)
    np.testing.assert_allclose(twice.matrix, once.matrix, atol=1e-12)


def test_monotone_envelope(rng):
    state = random_density(rng)
    for mode in ("multilocal", "collective", "combined"):
        cfg = NoiseConfig(1.0, mode)
        previous = np.abs(state.matrix)
        for t in np.linspace(0.1, 4.0, 14):
            current = np.abs(apply_channel(state, float(t), cfg).matrix)
            assert np.all(current <= previous + 1e-15)
            previous = current


def test_trajectories_diagonal_state_exact():
    diag = np.diag([0.3, 0.1, 0.1, 0.2, 0.2, 0.1]).astype(complex)
    est = simulate_trajectories(diag, 1.0, NoiseConfig(), TrajectoryConfig(n_trajectories=200, seed=5))
    np.testing.assert_array_equal(est.state.matrix, diag)
    np.testing.assert_array_equal(est.std_error, np.zeros((6, 6)))


def test_trajectories_collective_decoherence_free_entry_exact():
    state = rho_entangled(0.25)
    est = simulate_trajectories(
        state, 1.5, NoiseConfig(1.0, "collective"), TrajectoryConfig(n_trajectories=300, seed=9)
    )
    assert est.state.matrix[2, 3] == state.matrix[2, 3]
    assert est.std_error[2, 3] == 0.0
    assert np.array_equal(np.diag(est.state.matrix), np.diag(state.matrix))


def test_trajectories_deterministic_for_fixed_seed():
    state = rho_separable(0.2)
    cfg = NoiseConfig(1.0, "multilocal")
    tcfg = TrajectoryConfig(n_trajectories=150, seed=123)
    a = simulate_trajectories(state, 0.8, cfg, tcfg)
    b = simulate_trajectories(state, 0.8, cfg, tcfg)
    np.testing.assert_array_equal(a.state.matrix, b.state.matrix)
    np.testing.assert_array_equal(a.std_error, b.std_error)


def test_trajectories_match_analytic_channel_over_seeds():
    # Pooled over 10 seeds, at least 95% of (entry, seed) pairs must fall
    # within 4 standard errors of the analytic channel.
    state = rho_entangled(0.25)
    for mode in ("multilocal", "collective"):
        cfg = NoiseConfig(1.0, mode)
        analytic = apply_channel(state, 1.0, cfg)
        within = total = 0
        for seed in range(10):
            est = simulate_trajectories(state, 1.0, cfg, TrajectoryConfig(n_trajectories=10_000, seed=seed))
            z = montecarlo_z_scores(analytic, est)
            within += int(np.sum(z <= 4.0))
            total += z.size
        assert within / total >= 0.95


def test_trajectories_combined_mode_matches_analytic():
    state = rho_entangled(0.25)
    cfg = NoiseConfig(1.0, "combined")
    analytic = apply_channel(state, 0.8, cfg)
    est = simulate_trajectories(state, 0.8, cfg, TrajectoryConfig(n_trajectories=4000, seed=2))
    z = montecarlo_z_scores(analytic, est)
    assert np.mean(z <= 4.0) >= 0.95


def test_trajectories_mu_independence():
    # The noise variance scales as Gamma/mu^2, so the ensemble average must
    # not depend on mu; estimates at different mu agree within mutual 4 sigma.
    state = rho_entangled(0.25)
    cfg = NoiseConfig(1.0, "multilocal")
    estimates = [
        simulate_trajectories(state, 1.0, cfg, TrajectoryConfig(n_trajectories=4000, mu=mu, seed=31 + i))
        for i, mu in enumerate((0.5, 1.0, 2.0))
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            diff = np.abs(np.asarray(estimates[i].state) - np.asarray(estimates[j].state))
            sigma = np.sqrt(estimates[i].std_error**2 + estimates[j].std_error**2)
            ok = (diff <= 4.0 * sigma) | (sigma == 0.0)
            assert np.mean(ok) >= 0.95


def test_trajectory_config_validation():
    with pytest.raises(InvalidTrajectoryConfig):
        TrajectoryConfig(n_trajectories=50)
    with pytest.raises(InvalidTrajectoryConfig):
        TrajectoryConfig(mu=0.0)
    with pytest.raises(InvalidTrajectoryConfig):
        TrajectoryConfig(dt=-0.1)
    with pytest.raises(InvalidTrajectoryConfig):
        # dt must stay below t/100
        simulate_trajectories(
            rho_entangled(0.1), 1.0, NoiseConfig(), TrajectoryConfig(n_trajectories=100, dt=0.5)
        )
