"""Exception hierarchy shared across the package."""


class TreeConvexError(Exception):
    """Base class for all errors raised by treeconvex."""


class EmptySetError(TreeConvexError, ValueError):
    """An input set (or bid) has no elements."""


class ParseError(TreeConvexError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownElementError(TreeConvexError, KeyError):
    """A set mentions an element that is not a node of the forest under test."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class NotAcyclicError(TreeConvexError):
    """Join forest requested for a hypergraph that MCS reported as cyclic."""


class UniverseTooLargeError(TreeConvexError, ValueError):
    """Brute-force enumeration requested beyond its size cap."""


class BadConfigError(TreeConvexError, ValueError):
    """Generator parameters violate 1 <= r1 <= r2 <= n, m >= 1."""
