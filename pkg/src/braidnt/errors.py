"""Exception hierarchy shared by every module."""


class BraidError(Exception):
    """Base class for all errors raised by braidnt."""


class InvalidStrandCount(BraidError, ValueError):
    pass


class InvalidGenerator(BraidError, ValueError):
    """A word token is not a valid Artin generator for the strand count."""


class StrandMismatch(BraidError, ValueError):
    pass


class PreconditionError(BraidError, ValueError):
    """An operation was called on an input outside its contract."""


class OracleCapacityError(BraidError, RuntimeError):
    """Super summit set enumeration exceeded its element cap."""
