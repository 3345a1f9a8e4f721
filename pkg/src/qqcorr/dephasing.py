"""Classical dephasing channels and their stochastic-trajectory oracle.

The model couples the qubit's sigma_z and the qutrit's diag(1, 0, -1) to
zero-mean white-noise fields: one per subsystem ("multilocal"), one shared
("collective"), or all three at once ("combined" - physically well defined
but not exercised by the closed forms; treat as experimental).  Averaging the
random phase unitaries damps each density-matrix entry by gamma**k with
gamma = exp(-t*Gamma/8) and an integer exponent k fixed by the z-eigenvalue
differences of the bra and ket basis states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTrajectoryConfig, NegativeTime
from .linalg import DensityMatrix, state_matrix
from .states import QUBIT_Z_EIGENVALUES, QUTRIT_Z_EIGENVALUES

MULTILOCAL = "multilocal"
COLLECTIVE = "collective"
COMBINED = "combined"
MODES = (MULTILOCAL, COLLECTIVE, COMBINED)


@dataclass(frozen=True)
class NoiseConfig:
    """Damping rate Gamma (units 1/time) and which noise fields are active."""

    gamma_rate: float = 1.0
    mode: str = MULTILOCAL

    def __post_init__(self):
        if not self.gamma_rate > 0:
            raise ValueError(f"gamma_rate must be positive, got {self.gamma_rate}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class DephasingFactor:
    """The pair gamma = exp(-t*Gamma/8) and gamma_tilde = exp(-t*Gamma) = gamma**8.

    Closed-form expressions take gamma_tilde; the channel works in gamma.
    Centralising the conversion here keeps the eighth power in one place.
    """

    gamma: float
    gamma_tilde: float

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0 or not 0.0 < self.gamma_tilde <= 1.0:
            raise ValueError("dephasing factors must lie in (0, 1]")
        if abs(self.gamma_tilde - self.gamma**8) > 1e-12:
            raise ValueError("gamma_tilde must equal gamma**8 within 1e-12")

    @classmethod
    def from_time(cls, t: float, gamma_rate: float = 1.0) -> "DephasingFactor":
        if t < 0:
            raise NegativeTime(f"t must be nonnegative, got {t}")
        return cls(math.exp(-t * gamma_rate / 8.0), math.exp(-t * gamma_rate))


def dephasing_exponents(mode: str) -> np.ndarray:
    """Integer exponent matrix k with rho(t)[i,j] = rho(0)[i,j] * gamma**k[i,j].

    With dA the qubit z-eigenvalue difference (0, +-2) and dB the qutrit one
    (0, +-1, +-2) between bra and ket: multilocal k = dA^2 + dB^2, collective
    k = (dA+dB)^2, combined adds both.  Diagonal entries always get k = 0.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    da = QUBIT_Z_EIGENVALUES[:, None] - QUBIT_Z_EIGENVALUES[None, :]
    db = QUTRIT_Z_EIGENVALUES[:, None] - QUTRIT_Z_EIGENVALUES[None, :]
    local = da**2 + db**2
    shared = (da + db) ** 2
    if mode == MULTILOCAL:
        return local
    if mode == COLLECTIVE:
        return shared
    return local + shared


def apply_channel(rho0, t: float, cfg: NoiseConfig) -> DensityMatrix:
    """Evolve a 6x6 state for time t under the analytic dephasing map.

    Entrywise multiplication by gamma**k; populations are untouched, so any
    diagonal state is a fixed point and t = 0 returns the input exactly.
    """
    if t < 0:
        raise NegativeTime(f"t must be nonnegative, got {t}")
    m = state_matrix(rho0)
    if m.shape != (6, 6):
        raise ValueError(f"expected a 6x6 state, got shape {m.shape}")
    gamma = math.exp(-t * cfg.gamma_rate / 8.0)
    k = dephasing_exponents(cfg.mode)
    return DensityMatrix(m * gamma**k)


# Noise-field phase weights per basis state: each active field X contributes
# 0.5 * mu * Phi_X * w to the accumulated phase of basis state |i>, where w is
# the matching z eigenvalue and Phi_X the time-integrated field.
_FIELD_WEIGHTS = {
    MULTILOCAL: (QUBIT_Z_EIGENVALUES, QUTRIT_Z_EIGENVALUES),
    COLLECTIVE: (QUBIT_Z_EIGENVALUES + QUTRIT_Z_EIGENVALUES,),
    COMBINED: (
        QUBIT_Z_EIGENVALUES,
        QUTRIT_Z_EIGENVALUES,
        QUBIT_Z_EIGENVALUES + QUTRIT_Z_EIGENVALUES,
    ),
}


@dataclass(frozen=True)
class TrajectoryConfig:
    """Monte Carlo settings: gyromagnetic ratio mu, ensemble size, step, seed.

    ``dt=None`` resolves to t/1000 at simulation time; an explicit dt must
    satisfy dt <= t/100.  Each trajectory draws from its own RNG stream
    derived from (seed, trajectory index), so results are reproducible and
    independent of evaluation order.
    """

    n_trajectories: int = 10_000
    dt: float | None = None
    mu: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n_trajectories < 100:
            raise InvalidTrajectoryConfig(
                f"n_trajectories must be at least 100, got {self.n_trajectories}"
            )
        if not self.mu > 0:
            raise InvalidTrajectoryConfig(f"mu must be positive, got {self.mu}")
        if self.dt is not None and not self.dt > 0:
            raise InvalidTrajectoryConfig(f"dt must be positive, got {self.dt}")


@dataclass(frozen=True)
class TrajectoryEstimate:
    """Ensemble-averaged state and the per-entry standard error of the mean."""

    state: DensityMatrix
    std_error: np.ndarray
    n_trajectories: int


def simulate_trajectories(
    rho0, t: float, cfg: NoiseConfig, tcfg: TrajectoryConfig
) -> TrajectoryEstimate:
    """Monte Carlo average over piecewise-constant white-noise trajectories.

    Per trajectory, each active field n_X takes an independent Gaussian value
    on every step with variance Gamma/(mu^2 dt) (the white-noise correlator
    discretised), the accumulated diagonal phase unitary is applied to rho0,
    and the ensemble mean plus its standard error are returned.  Since the
    accumulated phases are exactly Gaussian for any dt, the estimator is
    unbiased against :func:`apply_channel` at every step size.

    Entries whose bra and ket phases cancel identically (the decoherence-free
    entries of the collective mode, and all populations) are reproduced
    exactly with zero standard error.
    """
    if t < 0:
        raise NegativeTime(f"t must be nonnegative, got {t}")
    m = state_matrix(rho0)
    if m.shape != (6, 6):
        raise ValueError(f"expected a 6x6 state, got shape {m.shape}")
    n = tcfg.n_trajectories
    if t == 0.0:
        return TrajectoryEstimate(DensityMatrix(m), np.zeros((6, 6)), n)

    dt = tcfg.dt if tcfg.dt is not None else t / 1000.0
    if dt > t / 100.0 + 1e-15:
        raise InvalidTrajectoryConfig(f"dt={dt} exceeds t/100={t / 100.0}")
    n_steps = max(1, math.ceil(t / dt - 1e-12))
    dt_eff = t / n_steps

    weights = np.stack(_FIELD_WEIGHTS[cfg.mode]).astype(float)  # (n_fields, 6)
    phase_weights = 0.5 * tcfg.mu * weights
    # std of the integrated field per step: sqrt((Gamma/mu^2) * dt)
    step_scale = math.sqrt(cfg.gamma_rate * dt_eff) / tcfg.mu
    n_fields = weights.shape[0]

    factor_sum = np.zeros((6, 6), dtype=complex)
    for k in range(n):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=tcfg.seed, spawn_key=(k,)))
        integrated = rng.standard_normal((n_fields, n_steps)).sum(axis=1) * step_scale
        theta = integrated @ phase_weights  # (6,) accumulated phase per basis state
        factor_sum += np.exp(1j * (theta[:, None] - theta[None, :]))

    factor_mean = factor_sum / n
    mean_state = m * factor_mean
    # Unit-modulus samples: sample variance is n*(1 - |mean|^2)/(n-1) exactly.
    spread = np.clip(1.0 - np.abs(factor_mean) ** 2, 0.0, None)
    std_error = np.abs(m) * np.sqrt(spread / (n - 1))
    return TrajectoryEstimate(DensityMatrix(mean_state), std_error, n)
