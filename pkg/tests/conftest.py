import numpy as np
import pytest

from qqcorr import DensityMatrix, kron, random_density


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish random unitary via QR with phase-fixed R diagonal."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_qutrit_state(rng: np.random.Generator) -> np.ndarray:
    return random_density(rng, dim=3).matrix


def classical_quantum_state(rng: np.random.Generator) -> DensityMatrix:
    """Zero-discord state: probabilistic mixture of sigma_z projectors on A
    with arbitrary qutrit states attached."""
    p = rng.uniform(0.05, 0.95)
    up = np.diag([1.0, 0.0]).astype(complex)
    down = np.diag([0.0, 1.0]).astype(complex)
    chi = p * kron(up, random_qutrit_state(rng)) + (1 - p) * kron(down, random_qutrit_state(rng))
    return DensityMatrix(chi)
