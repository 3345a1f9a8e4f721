"""Exception types shared across the package."""


class QQCorrError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(QQCorrError):
    """An operator does not have the dimensions an operation requires."""


class NonHermitianInput(QQCorrError):
    """A matrix that must be Hermitian fails the Hermiticity check."""


class NoConvergence(QQCorrError):
    """The eigensolver failed to converge."""


class InvalidDensityMatrix(QQCorrError):
    """A matrix violates the density-matrix invariants (Hermitian, unit trace, PSD)."""


class ParameterOutOfRange(QQCorrError):
    """A state-family parameter lies outside its admissible interval."""


class NegativeTime(QQCorrError):
    """A channel was asked to evolve for a negative time."""


class InvalidTrajectoryConfig(QQCorrError):
    """Monte Carlo trajectory settings violate their invariants."""


class InvalidDirection(QQCorrError):
    """Measurement angles lie outside [0, pi) x [0, 2*pi)."""


class UnsupportedFamily(QQCorrError):
    """A closed-form expression does not exist for the requested family."""


class InvalidConfig(QQCorrError):
    """A sweep/CLI configuration is inconsistent."""


class IoFailure(QQCorrError):
    """Reading or writing an output file failed."""


class ToleranceBreach(QQCorrError):
    """A verification run exceeded its tolerance; carries the worst offender."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InsufficientData(QQCorrError):
    """Not enough sweep rows to run transition detection."""
