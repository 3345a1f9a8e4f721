import numpy as np
import pytest

from qqcorr import (
    DensityMatrix,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    hs_norm_sq,
    kron,
    partial_trace,
    partial_transpose_qubit,
    random_density,
    rho_entangled,
)
from qqcorr.errors import (
    DimensionMismatch,
    InvalidDensityMatrix,
    NonHermitianInput,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)
CZ = np.diag([1.0, 0.0, -1.0]).astype(complex)


def random_hermitian(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return g + g.conj().T


def charpoly_coefficients(m):
    """Faddeev-LeVerrier recursion; pure matrix arithmetic, no eigensolver."""
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ (mk + coeffs[-1] * np.eye(n))
        coeffs.append(-np.trace(mk) / k)
    return np.array(coeffs)


def test_eigenvalues_identity():
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(6)), np.ones(6))


def test_eigenvalues_diagonal_sorted_ascending():
    np.testing.assert_allclose(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [1.0, 2.0, 3.0])


def test_partial_transpose_of_bell_like_state_has_single_negative_eigenvalue():
    # Independent oracle: characteristic polynomial of the partial transpose,
    # roots located without any Hermitian eigensolver.  The spectrum contains
    # a triple root, which caps root-finding accuracy near eps**(1/3) there;
    # the lone negative eigenvalue is a simple root and comes out sharp.
    pt = partial_transpose_qubit(rho_entangled(0.0))
    roots = np.roots(charpoly_coefficients(pt))
    assert np.max(np.abs(roots.imag)) < 1e-5
    real = np.sort(roots.real)
    negatives = real[real < -1e-6]
    assert negatives.shape == (1,)
    assert negatives[0] == pytest.approx(-0.5, abs=1e-9)
    np.testing.assert_allclose(np.sort(hermitian_eigenvalues(pt)), real, atol=1e-5)


def test_eigenvalue_reconstruction_invariants():
    rng = np.random.default_rng(11)
    for dim in (2, 3, 6):
        for _ in range(100):
            m = random_hermitian(rng, dim)
            w = hermitian_eigenvalues(m)
            assert abs(np.sum(w) - np.trace(m).real) < 1e-10
            assert abs(np.sum(w**2) - hs_norm_sq(m)) < 1e-9
            w2, v = hermitian_eigensystem(m)
            for i in range(dim):
                assert np.linalg.norm(m @ v[:, i] - w2[i] * v[:, i]) < 1e-10


def test_non_hermitian_input_rejected():
    with pytest.raises(NonHermitianInput):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_kron_identities():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(3)), np.eye(6))
    np.testing.assert_array_equal(kron(SZ, CZ), np.diag([1.0, 0, -1, -1, 0, 1]))


def test_kron_bit_flip_moves_qubit():
    flip = kron(SX, np.eye(3))
    for j in range(3):
        ket = np.zeros(6)
        ket[j] = 1.0  # |0j>
        np.testing.assert_array_equal(flip @ ket, np.eye(6)[3 + j])  # |1j>


def test_partial_trace_product_state(rng):
    rho_a = random_density(rng, dim=2).matrix
    rho_b = random_density(rng, dim=3).matrix
    product = DensityMatrix(kron(rho_a, rho_b))
    np.testing.assert_allclose(partial_trace(product, "A").matrix, rho_a, atol=1e-12)
    np.testing.assert_allclose(partial_trace(product, "B").matrix, rho_b, atol=1e-12)


def test_partial_trace_qubit_projector_times_mixed_qutrit():
    product = DensityMatrix(kron(np.diag([1.0, 0.0]), np.eye(3) / 3))
    np.testing.assert_allclose(partial_trace(product, "B").matrix, np.eye(3) / 3, atol=1e-14)


def test_partial_trace_of_bell_like_state():
    state = rho_entangled(0.0)
    np.testing.assert_allclose(partial_trace(state, "B").matrix, np.diag([0.5, 0.0, 0.5]), atol=1e-14)
    np.testing.assert_allclose(partial_trace(state, "A").matrix, np.eye(2) / 2, atol=1e-14)
    assert partial_trace(state, "A").dim == 2
    assert partial_trace(state, "B").dim == 3


def test_partial_trace_dimension_check():
    with pytest.raises(DimensionMismatch):
        partial_trace(np.eye(4) / 4, "A")


def test_partial_transpose_of_product_state_is_ppt(rng):
    rho_a = random_density(rng, dim=2).matrix
    rho_b = random_density(rng, dim=3).matrix
    pt = partial_transpose_qubit(kron(rho_a, rho_b))
    np.testing.assert_allclose(pt, kron(rho_a.T, rho_b), atol=1e-14)
    assert hermitian_eigenvalues(pt)[0] > -1e-12


def test_partial_transpose_involution_and_structure(rng):
    m = random_density(rng, dim=6).matrix
    pt = partial_transpose_qubit(m)
    np.testing.assert_array_equal(partial_transpose_qubit(pt), m)
    assert np.max(np.abs(pt - pt.conj().T)) < 1e-14
    assert abs(np.trace(pt) - 1.0) < 1e-14


def test_hs_norm_sq_values():
    assert hs_norm_sq(np.eye(6)) == pytest.approx(6.0)
    assert hs_norm_sq(np.zeros((4, 4))) == 0.0
    assert hs_norm_sq(rho_entangled(0.0)) == pytest.approx(1.0, abs=1e-14)


def test_density_matrix_validation():
    with pytest.raises(InvalidDensityMatrix):
        DensityMatrix(np.eye(3))  # trace 3
    with pytest.raises(InvalidDensityMatrix):
        DensityMatrix(np.array([[0.5, 0.5], [-0.5, 0.5]]))  # not Hermitian
    with pytest.raises(InvalidDensityMatrix):
        DensityMatrix(np.diag([1.5, -0.5]))  # negative eigenvalue
    dm = DensityMatrix(np.eye(6) / 6)
    assert dm.dim == 6
    assert not dm.matrix.flags.writeable
