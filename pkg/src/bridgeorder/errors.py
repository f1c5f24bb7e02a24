"""Exception hierarchy shared by every module."""


class BridgeOrderError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotReducedError(BridgeOrderError, ValueError):
    pass


class NotExpandedError(BridgeOrderError, ValueError):
    """A word is not an expanded even vector."""


class DivisionByZero(BridgeOrderError, ZeroDivisionError):
    """A continued fraction tail evaluated to zero and had to be inverted."""


class NotAKnot(BridgeOrderError):
    pass


class NotALink(BridgeOrderError):
    pass


class LinkNotOrdered(BridgeOrderError):
    """The partial order is only defined on knots."""


class NoUpperBound(BridgeOrderError):
    pass


class NotADoubleParsing(BridgeOrderError):
    pass


class PathNotRepresentable(BridgeOrderError):
    """A double parsing that cannot be drawn as a corner-to-corner path."""


class UnsupportedFormat(BridgeOrderError):
    pass


class BudgetExhausted(Exception):
    """A search ran out of budget before its bound was provably covered (exit code 3)."""
