"""Interference phase and visibility of mixed internal quantum states.

The central object is the complex functional z = Tr(U rho) for a unitary
U acting in one interferometer arm on a beam with density matrix rho: |z|
is the fringe visibility and arg z the observable phase shift. The package
evaluates z for arbitrary matrices and for diagonal spin families, tracks
the continuous (unwrapped) phase along parameter paths, finds and
classifies the zero-visibility singularities where the phase becomes
indeterminate, and synthesizes the corresponding two-beam fringe patterns.
"""

from .errors import (
    BadSpinError,
    ComputationError,
    DimensionMismatchError,
    MixedPhaseError,
    NoConvergenceError,
    NotClosedError,
    NotHermitianError,
    NotPositiveError,
    NotUnitaryError,
    RadiusOutOfDomainError,
    RefinementExhaustedError,
    ResidualTooLargeError,
    ROutOfRangeError,
    SingularityOnPathError,
    TraceNotOneError,
    ValidationError,
    ZeroVectorError,
)
from .interferogram import (
    Channel,
    Interferogram,
    PeakShift,
    counter_moving_patterns,
    hermitian_eigen,
    peak_shift,
    synthesize_pattern,
)
from .phase import (
    DEFAULT_EPSILON,
    InterferencePhase,
    SpinHalfPoint,
    SpinSystem,
    interference_functional,
    linear_weight_family,
    pancharatnam_phase,
    spin_half_density,
    spin_half_functional,
    spin_half_unitary,
    spin_magnetic_numbers,
    spin_system_density,
    spin_system_functional,
    wrap_angle,
    zeeman_unitary,
)
from .qmatrix import (
    DEFAULT_TOL,
    DensityMatrix,
    UnitaryMatrix,
    complex_matrix,
    dump_matrix_file,
    load_matrix_file,
    mat_mul,
    matrix_from_json_dict,
    matrix_to_json_dict,
    pure_state_density,
    trace,
    validate_density,
    validate_unitary,
)
from .topology import (
    CallableFamily,
    ParameterPath,
    PathFamily,
    PhaseTrace,
    ProbeFailure,
    SingularityRecord,
    SpinHalfFamily,
    WeightRayFamily,
    WindingReport,
    circle_path,
    linear_spin_family,
    matrix_pair_family,
    phase_shift_curves,
    scan_singularities,
    sweep_path,
    track_phase,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "BadSpinError",
    "CallableFamily",
    "Channel",
    "ComputationError",
    "DEFAULT_EPSILON",
    "DEFAULT_TOL",
    "DensityMatrix",
    "DimensionMismatchError",
    "Interferogram",
    "InterferencePhase",
    "MixedPhaseError",
    "NoConvergenceError",
    "NotClosedError",
    "NotHermitianError",
    "NotPositiveError",
    "NotUnitaryError",
    "ParameterPath",
    "PathFamily",
    "PeakShift",
    "PhaseTrace",
    "ProbeFailure",
    "RadiusOutOfDomainError",
    "RefinementExhaustedError",
    "ResidualTooLargeError",
    "ROutOfRangeError",
    "SingularityOnPathError",
    "SingularityRecord",
    "SpinHalfFamily",
    "SpinHalfPoint",
    "SpinSystem",
    "TraceNotOneError",
    "UnitaryMatrix",
    "ValidationError",
    "WeightRayFamily",
    "WindingReport",
    "ZeroVectorError",
    "circle_path",
    "complex_matrix",
    "counter_moving_patterns",
    "dump_matrix_file",
    "hermitian_eigen",
    "interference_functional",
    "linear_spin_family",
    "linear_weight_family",
    "load_matrix_file",
    "mat_mul",
    "matrix_from_json_dict",
    "matrix_pair_family",
    "matrix_to_json_dict",
    "pancharatnam_phase",
    "peak_shift",
    "phase_shift_curves",
    "pure_state_density",
    "scan_singularities",
    "spin_half_density",
    "spin_half_functional",
    "spin_half_unitary",
    "spin_magnetic_numbers",
    "spin_system_density",
    "spin_system_functional",
    "sweep_path",
    "synthesize_pattern",
    "trace",
    "track_phase",
    "validate_density",
    "validate_unitary",
    "winding_number",
    "wrap_angle",
    "zeeman_unitary",
]
