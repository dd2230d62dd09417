"""Exception hierarchy shared by every module of the package."""


class QuiverTropError(Exception):
    """Base class. ``code`` is the CLI exit status the error maps to."""

    code = 1

    @property
    def name(self) -> str:
        return type(self).__name__


class InputError(QuiverTropError):
    code = 2


class NonAdmissible(InputError):
    pass


class CycleWithoutRelations(InputError):
    pass


class NotAcyclic(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotSkewSymmetric(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class EmptyInput(InputError):
    pass


class VertexNotInP(InputError):
    pass


class NotUnimodular(InputError):
    pass


class NonRigidWeight(InputError):
    pass


class NotExchangePair(InputError):
    pass


class LedgerIncomplete(InputError):
    pass


class InvalidRepresentation(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BudgetExceeded(QuiverTropError):
    code = 3


class CheckFailed(QuiverTropError):
    """A computed invariant does not hold. These indicate bugs, never bad input."""

    code = 1


class IncomparableEdge(CheckFailed):
    pass


class UniquenessViolated(CheckFailed):
    pass


class SignCoherenceBroken(CheckFailed):
    pass


class NonIntegralResult(CheckFailed):
    pass


class OrientationUndecided(CheckFailed):
    pass


class SchofieldMismatch(CheckFailed):
    pass
