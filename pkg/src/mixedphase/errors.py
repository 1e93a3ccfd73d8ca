"""Exception hierarchy shared by all modules.

Two branches matter to callers: ValidationError means the input itself was
rejected, ComputationError means a computation could not be completed on
input that passed validation (the CLI maps these to exit codes 2 and 3).
"""


class MixedPhaseError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(MixedPhaseError):
    """Input failed a structural or physical validation check."""


class ComputationError(MixedPhaseError):
    """A well-formed computation could not be carried to completion."""


class DimensionMismatchError(ValidationError):
    pass


class NotHermitianError(ValidationError):
    pass


class TraceNotOneError(ValidationError):
    pass


class NotPositiveError(ValidationError):
    pass


class NotUnitaryError(ValidationError):
    pass


class ZeroVectorError(ValidationError):
    pass


class ROutOfRangeError(ValidationError):
    pass


class BadSpinError(ValidationError):
    pass


class RadiusOutOfDomainError(ValidationError):
    pass


class NotClosedError(ValidationError):
    pass


class SingularityOnPathError(ComputationError):
    """The interference visibility fell below epsilon at a path sample,
    so the phase is indeterminate there and cannot be tracked across."""

    def __init__(self, r: float, delta: float, visibility: float, epsilon: float):
        self.r = r
        self.delta = delta
        self.visibility = visibility
        self.epsilon = epsilon
        super().__init__(
            f"visibility {visibility:.3e} <= epsilon {epsilon:.3e} "
            f"at (r={r!r}, delta={delta!r}); phase is indeterminate there"
        )


class RefinementExhaustedError(ComputationError):
    """Bisection reached maximum depth with a phase increment still >= pi/2."""

    def __init__(self, t0: float, t1: float, increment: float):
        self.t0 = t0
        self.t1 = t1
        self.increment = increment
        super().__init__(
            f"segment t in [{t0!r}, {t1!r}] still has |phase increment| "
            f"{abs(increment):.6f} >= pi/2 at maximum refinement depth"
        )


class ResidualTooLargeError(ComputationError):
    """Accumulated circuit phase is not close enough to an integer multiple
    of 2*pi; the circuit is undersampled or passes too near a zero."""

    def __init__(self, total_phase: float, residual: float):
        self.total_phase = total_phase
        self.residual = residual
        super().__init__(
            f"total phase {total_phase!r} has winding residual {residual:.3e} > 0.01"
        )


class NoConvergenceError(ComputationError):
    pass
