"""Exception hierarchy shared by every module of the package."""


class TwoFacedError(ValueError):
    """Base class for all input and precondition failures."""


class SizeError(TwoFacedError):
    """A size argument is out of range or two objects disagree on size."""


class DegreeError(TwoFacedError):
    """A word or polynomial exceeds the degree cap of a table."""


class LatticeError(TwoFacedError):
    """A partition is not a member of the lattice it was used with."""


class AlphabetError(TwoFacedError):
    """Undeclared symbol, side mismatch, or alphabet collision."""


class PreconditionError(TwoFacedError):
    """An operation's stated precondition does not hold."""


class MissingEntryError(TwoFacedError):
    """A required table entry is absent."""


class FormatError(TwoFacedError):
    """A distribution or sequence file could not be parsed."""
