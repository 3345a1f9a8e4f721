"""Correlation quantifiers for qubit-qutrit states.

Negativity, von Neumann entropy, mutual information, classical correlation
(numeric minimisation over qubit von Neumann measurements), quantum discord,
the Bloch decomposition, geometric discord in closed form, and a variational
geometric-discord oracle that minimises the squared Hilbert-Schmidt distance
to the measured state directly.

Measurements act on the qubit (A) side only.  The minimisation protocol is
fixed: an exhaustive 64 x 128 grid over [0, pi) x [0, 2*pi) followed by
Nelder-Mead refinement from the best cell (objective tolerance 1e-8, at most
500 iterations); grid ties resolve to the lowest (theta, phi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.special import entr

from .errors import DimensionMismatch, InvalidDensityMatrix, InvalidDirection
from .linalg import DensityMatrix, hermitian_eigenvalues, hs_norm_sq, partial_trace, partial_transpose_qubit, state_matrix
from .states import GeneratorSet, generators

_LN2 = math.log(2.0)
_N_THETA = 64
_N_PHI = 128
_ZERO_OUTCOME = 1e-12
_ENTROPY_EIG_FLOOR = -1e-12


@dataclass(frozen=True)
class MeasurementDirection:
    """Bloch angles of a qubit von Neumann measurement, theta in [0, pi), phi in [0, 2*pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta < math.pi or not 0.0 <= self.phi < 2.0 * math.pi:
            raise InvalidDirection(f"angles ({self.theta}, {self.phi}) outside [0, pi) x [0, 2pi)")

    def bloch_vector(self) -> np.ndarray:
        s = math.sin(self.theta)
        return np.array([s * math.cos(self.phi), s * math.sin(self.phi), math.cos(self.theta)])

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        """The orthogonal projector pair (I +- n.sigma)/2."""
        nx, ny, nz = self.bloch_vector()
        off = 0.5 * (nx - 1j * ny)
        p1 = np.array([[0.5 * (1 + nz), off], [np.conj(off), 0.5 * (1 - nz)]])
        return p1, np.eye(2) - p1


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors x (qubit), y (qutrit) and the 3x8 correlation matrix."""

    x: np.ndarray
    y: np.ndarray
    T: np.ndarray


@dataclass(frozen=True)
class CorrelationRecord:
    """All correlation measures of one state; discord = mutual_info - classical by construction."""

    negativity: float
    mutual_info: float
    classical: float
    discord: float
    geometric_discord: float
    geometric_discord_x2: float
    optimal_direction: MeasurementDirection


def negativity(rho) -> float:
    """Twice the absolute sum of the negative partial-transpose eigenvalues.

    Normalised to 1 on maximally entangled qubit-qutrit states; zero exactly
    on PPT states, which for 2x3 systems are exactly the separable ones.
    """
    m = state_matrix(rho)
    if m.shape != (6, 6):
        raise DimensionMismatch(f"negativity needs a 6x6 state, got {m.shape}")
    eta = hermitian_eigenvalues(partial_transpose_qubit(m))
    return float(np.sum(np.abs(eta) - eta))


def von_neumann_entropy(rho) -> float:
    """Entropy -Tr(rho log2 rho) with 0*log(0) = 0.

    Eigenvalues in [-1e-12, 0) are clamped to zero; anything more negative
    means the input was not a state and raises.
    """
    w = hermitian_eigenvalues(state_matrix(rho))
    if float(w[0]) < _ENTROPY_EIG_FLOOR:
        raise InvalidDensityMatrix(f"eigenvalue {w[0]:.3e} below {_ENTROPY_EIG_FLOOR:.0e}")
    return float(np.sum(entr(np.clip(w, 0.0, None))) / _LN2)


def mutual_information(rho) -> float:
    """Total correlations S(rho_A) + S(rho_B) - S(rho_AB)."""
    m = state_matrix(rho)
    return (
        von_neumann_entropy(partial_trace(m, "A"))
        + von_neumann_entropy(partial_trace(m, "B"))
        - von_neumann_entropy(m)
    )


def _state_blocks(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    return m[:3, :3], m[:3, 3:], m[3:, :3], m[3:, 3:]


def _measured_blocks(blocks, theta, phi) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalised post-measurement qutrit blocks B_k = Tr_A[(P_k x I) rho] for both outcomes.

    Vectorised over trailing grid axes of theta/phi; returns (..., 3, 3) pairs.
    """
    r00, r01, r10, r11 = blocks
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c = np.cos(theta)[..., None, None]
    m = (np.sin(theta) * np.exp(-1j * phi))[..., None, None]  # n_x - i n_y
    cross = m * r10 + np.conj(m) * r01
    b1 = 0.5 * ((1.0 + c) * r00 + cross + (1.0 - c) * r11)
    b2 = 0.5 * ((1.0 - c) * r00 - cross + (1.0 + c) * r11)
    return b1, b2


def _conditional_entropy_values(blocks, theta, phi) -> np.ndarray:
    """sum_k p_k S(B_k / p_k) for each direction; outcomes with p_k < 1e-12 contribute 0."""
    total = 0.0
    for b in _measured_blocks(blocks, theta, phi):
        w = np.clip(np.linalg.eigvalsh(b), 0.0, None)
        p = np.sum(w, axis=-1)
        contrib = (np.sum(entr(w), axis=-1) - entr(p)) / _LN2
        total = total + np.where(p < _ZERO_OUTCOME, 0.0, contrib)
    return np.asarray(total)


def _canonical_direction(theta: float, phi: float) -> MeasurementDirection:
    """Map arbitrary angles onto [0, pi) x [0, 2*pi) using the antipodal symmetry."""
    s = math.sin(theta)
    nx, ny, nz = s * math.cos(phi), s * math.sin(phi), math.cos(theta)
    th = math.acos(min(1.0, max(-1.0, nz)))
    if th < 1e-9 or th > math.pi - 1e-9:
        return MeasurementDirection(0.0, 0.0)
    ph = math.atan2(ny, nx) % (2.0 * math.pi)
    if ph >= 2.0 * math.pi:
        ph = 0.0
    return MeasurementDirection(th, ph)


def _grid_refine_minimum(values_fn) -> tuple[float, MeasurementDirection]:
    """Coarse-grid scan plus simplex refinement; ties break to lowest (theta, phi)."""
    thetas = np.linspace(0.0, math.pi, _N_THETA, endpoint=False)
    phis = np.linspace(0.0, 2.0 * math.pi, _N_PHI, endpoint=False)
    grid_theta = np.repeat(thetas, _N_PHI)
    grid_phi = np.tile(phis, _N_THETA)
    values = values_fn(grid_theta, grid_phi)
    k = int(np.argmin(values))  # first occurrence = lowest theta, then phi
    best_value = float(values[k])
    best_theta, best_phi = float(grid_theta[k]), float(grid_phi[k])

    def scalar(x):
        return float(values_fn(np.array([x[0]]), np.array([x[1]]))[0])

    result = minimize(
        scalar,
        x0=np.array([best_theta, best_phi]),
        method="Nelder-Mead",
        options={"fatol": 1e-8, "xatol": 1e-6, "maxiter": 500},
    )
    if result.fun <= best_value:
        best_value = float(result.fun)
        best_theta, best_phi = float(result.x[0]), float(result.x[1])
    return best_value, _canonical_direction(best_theta, best_phi)


def measured_conditional_entropy(rho, direction: MeasurementDirection) -> float:
    """Average qutrit entropy after measuring the qubit along ``direction``."""
    if not isinstance(direction, MeasurementDirection):
        raise InvalidDirection(f"expected MeasurementDirection, got {type(direction).__name__}")
    m = state_matrix(rho)
    if m.shape != (6, 6):
        raise DimensionMismatch(f"expected a 6x6 state, got {m.shape}")
    value = _conditional_entropy_values(
        _state_blocks(m), np.array([direction.theta]), np.array([direction.phi])
    )
    return float(value[0])


def classical_correlation(rho) -> tuple[float, MeasurementDirection]:
    """S(rho_B) minus the minimal measured conditional entropy, with the minimiser."""
    m = state_matrix(rho)
    if m.shape != (6, 6):
        raise DimensionMismatch(f"expected a 6x6 state, got {m.shape}")
    blocks = _state_blocks(m)
    h_min, direction = _grid_refine_minimum(
        lambda th, ph: _conditional_entropy_values(blocks, th, ph)
    )
    s_b = von_neumann_entropy(partial_trace(m, "B"))
    return max(s_b - h_min, 0.0), direction


def quantum_discord(rho) -> float:
    """Mutual information minus classical correlation (same optimal direction).

    Can dip a few 1e-8 below zero on zero-discord states; callers that need a
    nonnegative report should clamp.
    """
    return mutual_information(rho) - classical_correlation(rho)[0]


def _generator_stack(basis: GeneratorSet) -> np.ndarray:
    """All 35 operators sigma_i x I3, I2 x l_j, sigma_i x l_j stacked for one pass."""
    i2, i3 = np.eye(2), np.eye(3)
    ops = [np.kron(s, i3) for s in basis.pauli]
    ops += [np.kron(i2, g) for g in basis.gellmann]
    ops += [np.kron(s, g) for s in basis.pauli for g in basis.gellmann]
    return np.stack(ops)


_STANDARD_STACK = _generator_stack(_standard := generators())


def bloch_decomposition(rho, basis: GeneratorSet | None = None) -> BlochDecomposition:
    """Coefficients of rho in the generator basis.

    x_i = Tr(rho sigma_i x I3), y_j = 1.5 Tr(rho I2 x l_j),
    T_ij = 1.5 Tr(rho sigma_i x l_j); plugging them back into
    :func:`reconstruct_from_bloch` reproduces rho.
    """
    m = state_matrix(rho)
    if m.shape != (6, 6):
        raise DimensionMismatch(f"expected a 6x6 state, got {m.shape}")
    stack = _STANDARD_STACK if basis is None else _generator_stack(basis)
    traces = np.einsum("ij,kji->k", m, stack).real
    x = traces[:3]
    y = 1.5 * traces[3:11]
    t = 1.5 * traces[11:].reshape(3, 8)
    return BlochDecomposition(x=x, y=y, T=t)


def reconstruct_from_bloch(dec: BlochDecomposition, basis: GeneratorSet | None = None) -> np.ndarray:
    """Inverse of :func:`bloch_decomposition` (returns a plain matrix).

    rho = (I6 + sum_i x_i sigma_i x I3 + sum_j y_j I2 x l_j
           + sum_ij T_ij sigma_i x l_j) / 6.
    """
    stack = _STANDARD_STACK if basis is None else _generator_stack(basis)
    coeffs = np.concatenate([dec.x, dec.y, dec.T.ravel()])
    return (np.eye(6) + np.tensordot(coeffs, stack, axes=1)) / 6.0


def geometric_discord(rho, basis: GeneratorSet | None = None) -> float:
    """Squared Hilbert-Schmidt distance to the nearest classical-quantum state.

    Closed 2x3 form: ||x||^2/6 + ||T||^2/9 minus the largest eigenvalue of
    x x^T / 6 + T T^T / 9.  Equals 0.5 on maximally entangled states.
    """
    dec = bloch_decomposition(rho, basis)
    k = np.outer(dec.x, dec.x) / 6.0 + dec.T @ dec.T.T / 9.0
    k_max = float(np.linalg.eigvalsh(k)[-1])
    value = float(dec.x @ dec.x) / 6.0 + float(np.sum(dec.T**2)) / 9.0 - k_max
    return max(value, 0.0)


def geometric_discord_variational_oracle(rho) -> float:
    """Independent check of :func:`geometric_discord` by direct minimisation.

    Minimises ||rho - chi(theta, phi)||^2 over qubit measurement directions,
    where chi is the state after the projective measurement; uses the same
    grid-plus-refinement protocol as :func:`classical_correlation`.
    """
    m = state_matrix(rho)
    if m.shape != (6, 6):
        raise DimensionMismatch(f"expected a 6x6 state, got {m.shape}")
    blocks = _state_blocks(m)
    purity = hs_norm_sq(m)

    def values(theta, phi):
        b1, b2 = _measured_blocks(blocks, theta, phi)
        kept = np.sum(np.abs(b1) ** 2, axis=(-2, -1)) + np.sum(np.abs(b2) ** 2, axis=(-2, -1))
        return purity - kept

    value, _ = _grid_refine_minimum(values)
    return max(value, 0.0)


def correlation_record(rho) -> CorrelationRecord:
    """Evaluate every measure once and bundle the results."""
    mi = mutual_information(rho)
    classical, direction = classical_correlation(rho)
    geo = geometric_discord(rho)
    return CorrelationRecord(
        negativity=negativity(rho),
        mutual_info=mi,
        classical=classical,
        discord=mi - classical,
        geometric_discord=geo,
        geometric_discord_x2=2.0 * geo,
        optimal_direction=direction,
    )
