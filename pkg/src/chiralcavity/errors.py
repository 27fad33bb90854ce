"""Exception types shared across the package.

The CLI maps these onto process exit codes: validation failures exit 1,
numerical failures exit 2, I/O failures exit 3.
"""


class ChiralCavityError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(ChiralCavityError, ValueError):
    """A parameter, configuration value, or precondition is invalid."""


class ConfigError(ValidationError):
    """A configuration file could not be parsed or contains bad keys."""


class NumericalError(ChiralCavityError, RuntimeError):
    """A numerical procedure failed (singularity, non-convergence, ...)."""


class SingularSystemError(NumericalError):
    """The steady-state linear system is singular or too ill-conditioned."""

    def __init__(self, message: str, condition_estimate: float = float("inf")):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class ConvergenceError(NumericalError):
    """Time integration failed to reach the requested tolerance."""


class StepSizeError(ValidationError):
    """Requested integration step violates the stability guard."""


class InversionError(NumericalError):
    """A measured transmission could not be inverted to an excess value."""


class AmbiguousInversion(InversionError):
    """Non-monotone transmission: two excess values fit the measurement.

    `candidates` holds both estimates, each flagged ambiguous.
    """

    def __init__(self, message: str, candidates):
        super().__init__(message)
        self.candidates = tuple(candidates)


class UnboundedSampleSize(ChiralCavityError):
    """Phase mismatch is zero, so no sample-size bound applies."""
