from typing import Any, Optional, Tuple


class IdemspecError(Exception):
    pass


class FormatError(IdemspecError, ValueError):
    """Raised on malformed tables; ``row`` is the offending row index when known."""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        if row is not None:
            message = f"{message} (row {row})"
        super().__init__(message)


class ParseError(FormatError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class LawViolation(IdemspecError):
    def __init__(self, law: str, witness: Tuple[Any, ...] = (), message: Optional[str] = None):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(message or f"law '{law}' violated, witness {self.witness}")


class GlueError(LawViolation):
    pass


class PreconditionError(IdemspecError):
    pass


class GuardExceeded(IdemspecError):
    def __init__(self, guard: str, bound: int, requested: int):
        self.guard = guard
        self.bound = bound
        self.requested = requested
        super().__init__(f"guard '{guard}' exceeded: requested {requested}, bound is {bound}")


class UnknownSuite(IdemspecError):
    pass
