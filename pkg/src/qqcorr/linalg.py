"""Dense complex matrix primitives for small Hilbert spaces (dims 2, 3, 6).

Everything here operates on plain ``numpy`` arrays; :class:`DensityMatrix` is a
thin validated wrapper used at module boundaries.  All functions are pure and
the wrapped arrays are frozen, so values are safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidDensityMatrix,
    NoConvergence,
    NonHermitianInput,
)

HERM_TOL = 1e-10
PSD_TOL = 1e-9


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(getattr(m, "matrix", m), dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a


def hermiticity_defect(m) -> float:
    """Largest entrywise deviation of ``m`` from its conjugate transpose."""
    a = _as_matrix(m)
    return float(np.max(np.abs(a - a.conj().T)))


def hermitian_eigenvalues(m, herm_tol: float = HERM_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    Raises
    ------
    NonHermitianInput
        If the Hermiticity defect exceeds ``herm_tol``.
    NoConvergence
        If the underlying solver fails to converge.
    """
    a = _as_matrix(m)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > herm_tol:
        raise NonHermitianInput(f"Hermiticity defect {defect:.3e} exceeds {herm_tol:.3e}")
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails at dim <= 6
        raise NoConvergence(str(exc)) from exc


def hermitian_eigensystem(m, herm_tol: float = HERM_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""
    a = _as_matrix(m)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > herm_tol:
        raise NonHermitianInput(f"Hermiticity defect {defect:.3e} exceeds {herm_tol:.3e}")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(str(exc)) from exc
    return w, v


def kron(a, b) -> np.ndarray:
    """Kronecker product of two operators."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def hs_norm_sq(m) -> float:
    """Squared Hilbert-Schmidt norm ``Tr(M^dag M) = sum |M_ij|^2``."""
    a = np.asarray(getattr(m, "matrix", m), dtype=complex)
    return float(np.sum(np.abs(a) ** 2))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A Hermitian, unit-trace, positive-semidefinite operator.

    Invariants are checked at construction: Hermiticity defect and trace
    deviation within ``herm_tol``, smallest eigenvalue at least ``-psd_tol``
    (channel outputs legitimately carry rounding noise of that order).
    """

    matrix: np.ndarray
    herm_tol: float = HERM_TOL
    psd_tol: float = PSD_TOL

    def __post_init__(self):
        a = np.array(self.matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidDensityMatrix(f"state must be square, got shape {a.shape}")
        defect = float(np.max(np.abs(a - a.conj().T)))
        if defect > self.herm_tol:
            raise InvalidDensityMatrix(f"Hermiticity defect {defect:.3e} exceeds {self.herm_tol:.3e}")
        tr = complex(np.trace(a))
        if abs(tr - 1.0) > self.herm_tol:
            raise InvalidDensityMatrix(f"trace {tr} is not 1 within {self.herm_tol:.3e}")
        w_min = float(np.linalg.eigvalsh(a)[0])
        if w_min < -self.psd_tol:
            raise InvalidDensityMatrix(f"smallest eigenvalue {w_min:.3e} below -{self.psd_tol:.3e}")
        a.setflags(write=False)
        object.__setattr__(self, "matrix", a)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)


def state_matrix(rho) -> np.ndarray:
    """Return the validated matrix of ``rho`` (wraps raw arrays in DensityMatrix)."""
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return DensityMatrix(np.asarray(rho, dtype=complex)).matrix


def _require_6x6(rho) -> np.ndarray:
    a = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
    if a.shape != (6, 6):
        raise DimensionMismatch(f"expected a 6x6 qubit-qutrit operator, got shape {a.shape}")
    return a


def partial_trace(rho, keep: str) -> DensityMatrix:
    """Reduced state of one subsystem of a qubit-qutrit state.

    ``keep="A"`` returns the 2x2 qubit state, ``keep="B"`` the 3x3 qutrit
    state.  The input must be a valid 6x6 density matrix in the product basis
    ``|00>,|01>,|02>,|10>,|11>,|12>``.
    """
    a = _require_6x6(rho)
    r = a.reshape(2, 3, 2, 3)
    if keep == "A":
        reduced = np.einsum("abcb->ac", r)
    elif keep == "B":
        reduced = np.einsum("abad->bd", r)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return DensityMatrix(reduced)


def partial_transpose_qubit(rho) -> np.ndarray:
    """Partial transpose with respect to the qubit of a 6x6 operator.

    In 2x2 block form the two off-diagonal 3x3 blocks trade places, which
    preserves Hermiticity and the trace.  Applying it twice is the identity.
    """
    a = _require_6x6(rho)
    return np.transpose(a.reshape(2, 3, 2, 3), (2, 1, 0, 3)).reshape(6, 6)


def random_density(rng: np.random.Generator, dim: int = 6, rank: int | None = None) -> DensityMatrix:
    """Random full-rank density matrix from the Ginibre ensemble."""
    k = rank if rank is not None else dim
    g = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)
