"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or unsatisfiable requests."""


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge {u}-{v}")
        self.u, self.v = u, v


class IndexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EmptyCollection(GraphError):
    pass


class AdjacentInGroup(GraphError):
    def __init__(self, u, v):
        super().__init__(f"vertices {u} and {v} are adjacent and cannot be identified")
        self.u, self.v = u, v


class OverlappingGroups(GraphError):
    pass


class BadParams(GraphError):
    pass


class TooSmall(BadParams):
    pass


class TrivialBlock(GraphError):
    pass


class BadTerminal(GraphError):
    pass


class NotAnEdge(BadTerminal):
    pass


class NotSymmetricBipartite(GraphError):
    pass


class PartTooSmall(GraphError):
    pass


class EmptyW(GraphError):
    pass


class TooLarge(RuntimeError):
    """The exact search would exceed the configured subset-check budget."""
