"""Exception hierarchy for qqcorr."""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from qqcorr.schemas.state import ValidityReport


class QQCorrError(Exception):
    """Base class for all library errors."""


class DimensionError(QQCorrError, ValueError):
    """Operand shapes do not fit the requested operation."""


class ParameterRangeError(QQCorrError, ValueError):
    """A physical parameter lies outside its admissible range."""


class NonHermitianError(QQCorrError, ValueError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""

    def __init__(self, max_asymmetry: float, tolerance: float):
        self.max_asymmetry = max_asymmetry
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: max |M - M^dagger| = {max_asymmetry:.3e} "
            f"exceeds tolerance {tolerance:.1e}"
        )

    def __reduce__(self):
        return (type(self), (self.max_asymmetry, self.tolerance))


class ConvergenceError(QQCorrError):
    """Iterative eigensolver ran out of sweeps."""


class InvalidStateError(QQCorrError, ValueError):
    """Density-matrix hygiene check failed."""

    def __init__(self, message: str, report: Optional["ValidityReport"] = None):
        self.report = report
        super().__init__(message)

    def __reduce__(self):
        return (type(self), (str(self), self.report))


class OptimizerFailureError(QQCorrError):
    """Measurement optimization produced a clearly negative discord."""


class OracleDomainError(QQCorrError, ArithmeticError):
    """A printed closed-form expression is undefined at the requested point."""


class SweepPointError(QQCorrError):
    """Failure while evaluating one (p, t) point of a sweep."""

    def __init__(self, p: float, t_gamma_a: float, t_gamma_b: float, cause: Exception):
        self.p = p
        self.t_gamma_a = t_gamma_a
        self.t_gamma_b = t_gamma_b
        self.cause = cause
        super().__init__(
            f"evaluation failed at p={p:g}, t_gamma_A={t_gamma_a:g}, "
            f"t_gamma_B={t_gamma_b:g}: {cause}"
        )

    def __reduce__(self):
        return (type(self), (self.p, self.t_gamma_a, self.t_gamma_b, self.cause))
