"""The two one-parameter qubit-qutrit families and fixed operator constants.

Basis convention, fixed globally: product states ordered
``|00>, |01>, |02>, |10>, |11>, |12>`` (qubit index first).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange
from .linalg import DensityMatrix

ENTANGLED = "entangled"
SEPARABLE = "separable"
FAMILIES = (ENTANGLED, SEPARABLE)

BASIS_LABELS = ("00", "01", "02", "10", "11", "12")

# Spin-z eigenvalue of each basis state for the qubit (+1, -1) and the
# three-level z operator diag(1, 0, -1) for the qutrit.
QUBIT_Z_EIGENVALUES = np.array([1, 1, 1, -1, -1, -1])
QUTRIT_Z_EIGENVALUES = np.array([1, 0, -1, 1, 0, -1])


def _frozen(a) -> np.ndarray:
    m = np.array(a, dtype=complex)
    m.setflags(write=False)
    return m


PAULI_X = _frozen([[0, 1], [1, 0]])
PAULI_Y = _frozen([[0, -1j], [1j, 0]])
PAULI_Z = _frozen([[1, 0], [0, -1]])
PAULI = (PAULI_X, PAULI_Y, PAULI_Z)

# Standard Gell-Mann octet, conventional order, Tr(l_i l_j) = 2 delta_ij.
GELL_MANN = (
    _frozen([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    _frozen([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
    _frozen([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    _frozen([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    _frozen([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
    _frozen([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    _frozen([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    _frozen(np.diag([1, 1, -2]) / np.sqrt(3.0)),
)

C_Z = _frozen(np.diag([1, 0, -1]))


@dataclass(frozen=True)
class GeneratorSet:
    """Pauli triple, Gell-Mann octet and the three-level z operator."""

    pauli: tuple[np.ndarray, ...] = PAULI
    gellmann: tuple[np.ndarray, ...] = GELL_MANN
    c_z: np.ndarray = C_Z


_GENERATORS = GeneratorSet()


def generators() -> GeneratorSet:
    """The standard traceless Hermitian generator set used throughout."""
    return _GENERATORS


@dataclass(frozen=True)
class StateParameter:
    """Family tag plus its parameter, validated against the family's range."""

    family: str
    value: float

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterOutOfRange(f"unknown family {self.family!r}")
        hi = 0.5 if self.family == ENTANGLED else 1.0 / 3.0
        if not 0.0 <= self.value <= hi:
            raise ParameterOutOfRange(
                f"{self.family} parameter must lie in [0, {hi:.6g}], got {self.value}"
            )


def rho_entangled(p: float) -> DensityMatrix:
    """Entangled family, parameter p in [0, 1/2].

    Mixes weight p/2 over |00>, |01>, |11>, |12> with a |00><12| coherence and
    weight (1-2p)/2 over the Bell-like pair |02>, |10> with its coherence.
    Pure and maximally entangled at p = 0; PPT exactly at p = 1/3.
    """
    StateParameter(ENTANGLED, p)
    a = p / 2.0
    b = (1.0 - 2.0 * p) / 2.0
    m = np.zeros((6, 6), dtype=complex)
    m[0, 0] = m[1, 1] = m[4, 4] = m[5, 5] = a
    m[2, 2] = m[3, 3] = b
    m[0, 5] = m[5, 0] = a
    m[2, 3] = m[3, 2] = b
    return DensityMatrix(m)


def rho_separable(r: float) -> DensityMatrix:
    """Separable family, parameter r in [0, 1/3]; PPT for every r."""
    StateParameter(SEPARABLE, r)
    a = r / 2.0
    b = (1.0 - 2.0 * r) / 2.0
    m = np.zeros((6, 6), dtype=complex)
    m[0, 0] = m[1, 1] = m[4, 4] = m[5, 5] = a
    m[2, 2] = m[3, 3] = b
    m[0, 5] = m[5, 0] = a
    m[2, 3] = m[3, 2] = a
    return DensityMatrix(m)


def family_state(family: str, value: float) -> DensityMatrix:
    """Dispatch to the requested family constructor."""
    param = StateParameter(family, value)
    if param.family == ENTANGLED:
        return rho_entangled(param.value)
    return rho_separable(param.value)
