"""Correlation dynamics of qubit-qutrit states under classical dephasing noise."""

from . import errors
from .closed_forms import (
    ClosedFormQuery,
    CriticalTime,
    closed_geometric_discord,
    closed_negativity,
    find_critical_times,
)
from .dephasing import (
    COLLECTIVE,
    COMBINED,
    MODES,
    MULTILOCAL,
    DephasingFactor,
    NoiseConfig,
    TrajectoryConfig,
    TrajectoryEstimate,
    apply_channel,
    dephasing_exponents,
    simulate_trajectories,
)
from .linalg import (
    DensityMatrix,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    hs_norm_sq,
    kron,
    partial_trace,
    partial_transpose_qubit,
    random_density,
)
from .measures import (
    BlochDecomposition,
    CorrelationRecord,
    MeasurementDirection,
    bloch_decomposition,
    classical_correlation,
    correlation_record,
    geometric_discord,
    geometric_discord_variational_oracle,
    measured_conditional_entropy,
    mutual_information,
    negativity,
    quantum_discord,
    reconstruct_from_bloch,
    von_neumann_entropy,
)
from .states import (
    ENTANGLED,
    FAMILIES,
    SEPARABLE,
    GeneratorSet,
    StateParameter,
    family_state,
    generators,
    rho_entangled,
    rho_separable,
)
from .sweep import (
    MEASURE_KEYS,
    MonteCarloReport,
    SweepConfig,
    SweepRow,
    Transition,
    VerifyReport,
    detect_transitions,
    run_montecarlo,
    run_sweep,
    run_verify,
    sweep_rows,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "ClosedFormQuery",
    "CriticalTime",
    "closed_geometric_discord",
    "closed_negativity",
    "find_critical_times",
    "COLLECTIVE",
    "COMBINED",
    "MODES",
    "MULTILOCAL",
    "DephasingFactor",
    "NoiseConfig",
    "TrajectoryConfig",
    "TrajectoryEstimate",
    "apply_channel",
    "dephasing_exponents",
    "simulate_trajectories",
    "DensityMatrix",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "hs_norm_sq",
    "kron",
    "partial_trace",
    "partial_transpose_qubit",
    "random_density",
    "BlochDecomposition",
    "CorrelationRecord",
    "MeasurementDirection",
    "bloch_decomposition",
    "classical_correlation",
    "correlation_record",
    "geometric_discord",
    "geometric_discord_variational_oracle",
    "measured_conditional_entropy",
    "mutual_information",
    "negativity",
    "quantum_discord",
    "reconstruct_from_bloch",
    "von_neumann_entropy",
    "ENTANGLED",
    "FAMILIES",
    "SEPARABLE",
    "GeneratorSet",
    "StateParameter",
    "family_state",
    "generators",
    "rho_entangled",
    "rho_separable",
    "MEASURE_KEYS",
    "MonteCarloReport",
    "SweepConfig",
    "SweepRow",
    "Transition",
    "VerifyReport",
    "detect_transitions",
    "run_montecarlo",
    "run_sweep",
    "run_verify",
    "sweep_rows",
]
