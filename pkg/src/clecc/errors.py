"""Exception types shared across the package."""


class CleccError(Exception):
    """Base class for every error raised by this library."""


class SelfLoopError(CleccError):
    """An edge would connect a node to itself."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class DuplicateEdgeError(CleccError):
    """The ordered (source, target, layer) triple is already present."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class UnknownNodeError(CleccError):
    """A node label is not registered in the network."""


class UnknownLayerError(CleccError):
    """A layer label is not registered in the network."""


class AlphaOutOfRangeError(CleccError):
    """Alpha lies outside [1, number of layers]."""


class NotAdjacentError(CleccError):
    """The measure requires an edge between the two nodes."""


class InconsistentTableError(CleccError):
    """An incremental table update was asked for a pair with no entry."""


class EmptyTableError(CleccError):
    """A minimum was requested from a table with no entries."""


class EmptyNetworkError(CleccError):
    """Detection needs a network with at least one node."""


class InvalidParamsError(CleccError):
    """Generator parameters violate their constraints."""


class MalformedLineError(CleccError):
    """An edge-list line does not have exactly three non-empty fields."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class DomainMismatchError(CleccError):
    """Two partitions do not cover the same node set."""


class OracleMismatchError(CleccError):
    """The optimized path and the brute-force reference disagreed."""
