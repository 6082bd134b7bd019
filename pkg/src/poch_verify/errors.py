"""Errors raised by the library. Messages are stable, the CLI and the reports rely on them."""


class VerificationError(Exception):
    """Base class of all poch-verify errors."""

    message = "verification error"

    def __init__(self, message: str = "") -> None:
        super().__init__(message or self.message)


class ZeroDenominator(VerificationError, ZeroDivisionError):
    message = "zero denominator"


class InvalidPrecisionContext(VerificationError, ValueError):
    message = "invalid precision context"


class SampleSpaceExhausted(VerificationError):
    message = "sample space exhausted"


class SingularParameters(VerificationError, ZeroDivisionError):
    """A denominator of a closed form vanishes at the given parameters."""

    message = "singular parameters"


class DivergentParameterDomain(VerificationError, ValueError):
    message = "divergent parameter domain"


class ConvergenceBudgetExceeded(VerificationError):
    message = "convergence budget exceeded"


class OutsideConvergenceDomain(VerificationError, ValueError):
    message = "outside convergence domain"


class OutsideSupport(VerificationError, ValueError):
    message = "outside support"


class UnsupportedParameterOffset(VerificationError, ValueError):
    message = "unsupported parameter offset"


class SeriesDidNotConverge(VerificationError):
    message = "series did not converge"


class InvalidShapeParameters(VerificationError, ValueError):
    message = "invalid shape parameters"


class KindMismatch(VerificationError, TypeError):
    message = "kind mismatch"


class UnknownIdentity(VerificationError, KeyError):
    message = "unknown identity"


class ExpressionError(VerificationError, ValueError):
    """A parse error in an eval expression. `position` is 1-based."""

    message = "parse error"

    def __init__(self, message: str = "", position: int = 0, detail: str = "") -> None:
        self.position = position
        if position:
            message = f"{message or self.message} at position {position}"
        if detail:
            message = f"{message or self.message}: {detail}"
        super().__init__(message)
