"""Domain error types shared across the package.

The command line maps ``DomainError`` and its subclasses to exit status 1;
anything else escaping a handler is a genuine bug.
"""

from __future__ import annotations


class DomainError(Exception):
    """Invalid input or violated precondition in a graph-algebra operation."""

    code = "domain-error"

    def payload(self) -> dict:
        return {"code": self.code, "message": str(self)}


class GraphSyntaxError(DomainError):
    """Malformed graph description text."""

    code = "graph-syntax"

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

    def payload(self) -> dict:
        return {
            "code": self.code,
            "message": str(self),
            "line": self.line,
            "column": self.column,
        }


class BackendMismatchError(DomainError):
    """Operands built over different graphs or different backends."""

    code = "backend-mismatch"


class DepthError(DomainError):
    """A truncated path-space evaluation would need a longer basis.

    Raised instead of silently truncating; carries the depth that would
    have been enough.
    """

    code = "depth-insufficient"

    def __init__(self, required: int, depth: int):
        super().__init__(
            f"truncation depth {depth} insufficient, need at least {required}"
        )
        self.required = required
        self.depth = depth

    def payload(self) -> dict:
        return {
            "code": self.code,
            "message": str(self),
            "required": self.required,
            "depth": self.depth,
        }


class ArityBoundError(DomainError):
    """Requested bracket order exceeds the configured bound."""

    code = "arity-bound"
