"""Exception types raised across the package."""


class QGraphError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(QGraphError, IndexError):
    pass


class InvalidEdgeCount(QGraphError, ValueError):
    pass


class GraphFormatError(QGraphError, ValueError):
    """Malformed edge-list input or an invalid edge set."""


class Disconnected(QGraphError, ValueError):
    def __init__(self, msg: str = "graph not connected"):
        super().__init__(msg)


class TrivialGraph(QGraphError, ValueError):
    pass


class InvalidThreshold(QGraphError, ValueError):
    pass


class InvalidParam(QGraphError, ValueError):
    pass


class KindMismatch(QGraphError, ValueError):
    pass


class InvalidArgs(QGraphError, ValueError):
    pass
