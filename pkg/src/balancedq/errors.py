"""Exception hierarchy shared by all balancedq modules."""


class BalancedqError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(BalancedqError, ValueError):
    """A symbol or parameter is not valid for the requested alphabet."""


class InfeasibleParamsError(BalancedqError, ValueError):
    """No object with the requested (kind, n or k, q) combination exists."""


class WordParseError(BalancedqError, ValueError):
    """A word given in text form could not be parsed."""


class CapacityError(BalancedqError, RuntimeError):
    """The request exceeds a documented resource bound of this implementation."""


class InvalidIndexError(BalancedqError, ValueError):
    """An enumeration index or injected balancing index is out of range or invalid."""


class DecodeError(BalancedqError, ValueError):
    """A received codeword could not be decoded under the declared parameters."""


class BalancingInvariantError(BalancedqError, RuntimeError):
    """Internal invariant violation: a balancing index that must exist was not found.

    This is a panic-class error.  It indicates a bug, not bad input.
    """
