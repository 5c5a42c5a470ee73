"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class RejectedEdge(ToolkitError):
    """Edge input contains a self-loop."""


class OutOfRange(ToolkitError):
    """Vertex index outside 0..n-1, or beyond the packed-word capacity."""


class InvalidFamily(ToolkitError):
    """Family parameters violate that family's constraints."""


class DomainTooLarge(ToolkitError):
    """Requested enumeration or sweep exceeds the supported budget."""


class OutOfDomain(ToolkitError):
    """Closed-form value requested outside its domain."""


class NotATree(ToolkitError):
    """Tree-only operation applied to a graph that is not a tree."""


class ResourceExhausted(ToolkitError):
    """Solver hit its node or time limit before proving optimality."""


class UndefinedValue(ToolkitError):
    """Requested quantity does not exist for this graph (isolated vertex)."""


class EdgeListFormatError(ToolkitError):
    """Edge-list text input is malformed."""

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message)
        self.line_no = line_no
