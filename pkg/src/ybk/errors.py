"""Exception hierarchy shared by all ybk modules."""


class YbkError(Exception):
    """Base class for every error raised by this package."""


class NotABijection(YbkError):
    """A table that should describe a bijection repeats an output."""


class OutOfRange(YbkError):
    """A coordinate lies outside the declared ground set."""


class UnknownName(YbkError):
    """An unrecognized catalog key."""


class InvalidParams(YbkError):
    """Parameters violate a documented precondition."""


class PositionOutOfRange(YbkError):
    """A leg position does not fit the tuple it should act on."""


class NotAYbeSolution(YbkError):
    """The operation needs a map satisfying the braid relation."""


class Degenerate(YbkError):
    """The operation needs all coordinate maps to be invertible."""


class Overflow(YbkError):
    """An enumeration would exceed the configured encoding limit."""


class FamilyMismatch(YbkError):
    """Words from different commutation families cannot be combined."""


class InvalidLetter(YbkError):
    """A word contains a colour or letter outside its family."""


class DegreeOutOfRange(YbkError):
    """A requested degree vector does not fit inside the word's degree."""


class PropertyMissing(YbkError):
    """The family lacks the uniqueness property the operation relies on."""


class DegreesOverlap(YbkError):
    """Diamond completion needs words with disjoint degree support."""


class SizeTooLarge(YbkError):
    """Exhaustive enumeration is only feasible for very small sizes."""


class SizeMismatch(YbkError):
    """The operation needs solutions on ground sets of equal size."""


class NotDerivedType(YbkError):
    """The operation is only defined for derived-type solutions."""


class BadModulus(YbkError):
    """Modular coefficients need a modulus of at least 2."""


class ParseError(YbkError):
    """The input text is not well-formed JSON."""


class SchemaError(YbkError):
    """The JSON document does not match the expected schema."""


class PreconditionFailed(YbkError):
    """A stated precondition of the operation does not hold."""
