"""Exception hierarchy shared by the graph, analyzer and document layers."""

from typing import Any, Optional


class LeavittRankError(Exception):
    """Base class for every error raised by the engine."""


class GraphValidationError(LeavittRankError, ValueError):
    """A graph violates one of its structural invariants."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code.replace('_', ' ')}: {message}")
        self.code = code


class NotHereditarySaturatedError(LeavittRankError, ValueError):
    """A vertex set was expected to be hereditary and saturated."""

    def __init__(self, message: str, witness: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}


class AdmissibilityError(LeavittRankError, ValueError):
    """B is not a subset of the breaking vertices of H."""


class ConstructionError(LeavittRankError, ValueError):
    """A construction was called outside its precondition."""


class SizeGuardError(LeavittRankError, RuntimeError):
    """An enumeration outgrew its configured bound."""

    def __init__(self, what: str, bound: int, reached: int):
        super().__init__(f"{what} exceeds the bound of {bound} (reached {reached})")
        self.bound = bound
        self.reached = reached


class LatticeSizeError(SizeGuardError):
    """The hereditary saturated lattice outgrew the configured bound."""

    def __init__(self, bound: int, reached: int):
        super().__init__("lattice", bound, reached)


class PathCountError(SizeGuardError):
    """More paths enter H than the ideal graph is allowed to hold."""

    def __init__(self, bound: int, reached: int):
        super().__init__("entry path count", bound, reached)


class DocumentParseError(LeavittRankError, ValueError):
    """A graph document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column
