"""Exception hierarchy. Every domain failure derives from :class:`IsoringError`."""


class IsoringError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class FamilyMismatch(IsoringError, TypeError):
    """Operands live in different variable families."""


class ParseError(IsoringError, ValueError):
    pass


class NonInvertibleCore(IsoringError, ValueError):
    """The core has ``t_k = 0`` so the companion matrix has no inverse."""


class SymbolicNegativeIndex(IsoringError, ValueError):
    pass


class NonUnit(IsoringError, ZeroDivisionError):
    """A sequence or arithmetic function whose leading value is not invertible."""


class WeightMismatch(IsoringError, ValueError):
    pass


class InsufficientRows(IsoringError, ValueError):
    pass


class InconsistentResult(IsoringError, ArithmeticError):
    """An internal identity failed (e.g. a character value came out non-integral)."""


class InvalidPermutation(IsoringError, ValueError):
    pass


class NotAGroup(IsoringError, ValueError):
    pass
