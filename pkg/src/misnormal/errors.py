"""Exception hierarchy.  Every error raised on purpose derives from MisNormalError."""


class MisNormalError(Exception):
    pass


class GraphError(MisNormalError, ValueError):
    pass


class LoopRejected(GraphError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class EmptySelection(GraphError):
    pass


class SizeOverflow(GraphError):
    pass


class BadAxis(GraphError):
    pass


class NotASquareProduct(GraphError):
    pass


class BadParameters(MisNormalError, ValueError):
    pass


class FormatError(MisNormalError, ValueError):
    """Malformed graph6 / edge-list input."""


class TooLarge(MisNormalError):
    pass


class NotTransitive(MisNormalError):
    pass


class OrbitTooLarge(MisNormalError):
    pass


class Timeout(MisNormalError):
    """A solver call ran past its wall-clock budget; no partial answer is returned."""


class CapExceeded(MisNormalError):
    pass


class IncompleteEnumeration(MisNormalError):
    pass
