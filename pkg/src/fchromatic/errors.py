"""Exception hierarchy shared by every module of the package."""


class FChromaticError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(FChromaticError, ValueError):
    """An edge-colored graph failed validation."""


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class UnknownColorError(GraphError):
    pass


class EdgeNotInGraphError(GraphError):
    pass


class BudgetError(FChromaticError, ValueError):
    """A color budget is incomplete or holds a negative cap."""


class PreconditionError(FChromaticError, ValueError):
    """An operation was called outside its domain (w out of range, wrong shape, ...)."""


class CapacityError(FChromaticError):
    """An exhaustive procedure was asked to exceed its hard size cap."""


class ParseError(FChromaticError, ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
