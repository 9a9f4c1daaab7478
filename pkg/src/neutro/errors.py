"""Exception hierarchy shared by every module."""


class NeutroError(Exception):
    """Base class for all library errors."""


class UndefinedError(NeutroError):
    """An operation the algebra leaves undefined, such as I/I."""


class IndeterminateLawError(UndefinedError):
    """A partial law applied outside its domain of definition."""


class IntervalOperandError(NeutroError, TypeError):
    """Operators act on scalar triples only."""

    def __init__(self, msg="interval operands unsupported"):
        super().__init__(msg)


class AlphabetError(NeutroError, ValueError):
    """A literal outside the alphabet of an order, table or number."""


class SuborderViolation(NeutroError, ValueError):
    """A refined prevalence order that breaks the coarse T/I/F block order."""


class FamilyMismatch(NeutroError, TypeError):
    """Operands belong to different number families or dimensions."""


class MissingEdgeError(NeutroError, KeyError):
    """A path step between vertices with no edge."""
