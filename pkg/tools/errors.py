"""
Exception hierarchy for MONOCLE
Every error carries the exit code the command line reports for it
"""

from typing import Any, Dict, List, Optional


class MonocleError(Exception):
    """Base class for all library errors"""

    exit_code = 3


class DomainError(MonocleError, ValueError):
    """Input outside the domain of a graph operation (e.g. fewer than 2 vertices)"""

    exit_code = 2


class ParameterError(MonocleError, ValueError):
    """Construction parameters or part sizes that violate a stated hypothesis"""

    exit_code = 2


class UnsupportedOrderError(ParameterError):
    """Requested field or plane order is not a prime power"""

    def __init__(self, q: int, name: Optional[str] = None):
        self.q = q
        label = f"{name} = {q}" if name else f"{q}"
        super().__init__(f"{label} is not a prime power")


class PreconditionError(MonocleError):
    """A theorem hypothesis does not hold for the given input"""

    exit_code = 2

    def __init__(self, hypothesis: str, vertex: Optional[int] = None):
        self.hypothesis = hypothesis
        self.vertex = vertex
        message = f"{hypothesis} violated"
        if vertex is not None:
            message += f" at vertex {vertex}"
        super().__init__(message)


class ResourceLimitError(MonocleError):
    """Exhaustive computation would exceed the configured size limit"""

    exit_code = 4


class FormatError(MonocleError, ValueError):
    """Malformed colouring file"""

    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantBreach(MonocleError, AssertionError):
    """An internal proof invariant failed; always a bug"""

    exit_code = 3

    def __init__(self, message: str, trace: Optional[List[Dict[str, Any]]] = None):
        self.trace = trace or []
        super().__init__(message)


def ensure(condition: bool, message: str, trace: Optional[List[Any]] = None) -> None:
    """Raise InvariantBreach unless condition holds"""
    if not condition:
        raise InvariantBreach(message, [getattr(step, "model_dump", lambda: step)() for step in (trace or [])])
