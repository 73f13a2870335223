"""Exception hierarchy shared by every module of the kernel."""


class SurrealError(Exception):
    """Base class for all typed kernel errors."""

    code = "SurrealError"

    def __init__(self, message="", **info):
        super().__init__(message or self.code)
        self.info = info


class BeyondEpsilonZero(SurrealError):
    code = "BeyondEpsilonZero"


class NotSeparated(SurrealError):
    code = "NotSeparated"


class NonDyadic(SurrealError):
    code = "NonDyadic"


class DivisionByZero(SurrealError, ZeroDivisionError):
    code = "DivisionByZero"


class ZeroInput(SurrealError):
    code = "ZeroInput"


class CapExceeded(SurrealError):
    code = "CapExceeded"


class DepthExceeded(SurrealError):
    code = "DepthExceeded"


class UnsupportedOrdinal(SurrealError):
    code = "UnsupportedOrdinal"


class Undetermined(SurrealError):
    code = "Undetermined"


class Unconvertible(SurrealError):
    code = "Unconvertible"


class DomainError(SurrealError):
    code = "DomainError"


class NotPurelyInfinite(SurrealError):
    code = "NotPurelyInfinite"


class NonzeroRealPart(SurrealError):
    code = "NonzeroRealPart"


class BadLeadingCoefficient(SurrealError):
    code = "BadLeadingCoefficient"


class BadLogArgument(SurrealError):
    code = "BadLogArgument"


class InexactPower(SurrealError):
    code = "InexactPower"


class Unrepresentable(SurrealError):
    """A value exists but has no finite representation in the fragment."""

    code = "Unrepresentable"


class BranchCapExceeded(SurrealError):
    code = "BranchCapExceeded"


class UndeterminedPath(SurrealError):
    code = "UndeterminedPath"


class ParseError(SurrealError):
    code = "ParseError"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}", position=position)
        self.position = position


class EvalError(SurrealError):
    code = "EvalError"
