"""Exception hierarchy for leibsplit."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from leibsplit.identities import CheckReport


class LeibsplitError(Exception):
    """Base class for every error raised by the library."""


class DimensionMismatch(LeibsplitError):
    pass


class SingularMatrix(LeibsplitError):
    pass


class IndexOutOfRange(LeibsplitError):
    pass


class UnknownName(LeibsplitError):
    pass


class UnassignedVariable(LeibsplitError):
    pass


class UnknownSystem(LeibsplitError):
    pass


class UnknownFixture(LeibsplitError):
    pass


class UnknownSuite(LeibsplitError):
    pass


class ParseError(LeibsplitError):
    pass


class UsageError(LeibsplitError):
    """Bad command-line arguments."""


class DegenerateForm(LeibsplitError):
    pass


class NotSkew(LeibsplitError):
    pass


class PreconditionFailed(LeibsplitError):
    """A construction refused its input; ``report`` holds the failing check."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


class NotCocycle(PreconditionFailed):
    pass


class NotAntiO(PreconditionFailed):
    pass


class NotAntiPreLeibniz(PreconditionFailed):
    pass


class NotPreLeibniz(PreconditionFailed):
    pass


class NotPerm(PreconditionFailed):
    pass


class OperatorAxiomFails(PreconditionFailed):
    pass


class NotNovikovDialgebra(PreconditionFailed):
    pass


class NotGDAlgebra(PreconditionFailed):
    pass


class NotGDDialgebra(PreconditionFailed):
    pass
