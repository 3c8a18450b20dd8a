"""exceptions.py - Error hierarchy shared by the library and the CLI"""

from typing import Any, Dict, Optional


class EDCNError(Exception):
    """Base class for every error raised by the library"""

    code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable payload printed by the CLI"""
        payload: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        payload.update(self.details)
        return payload


# =============================================================================
# GRAPH ERRORS
# =============================================================================

class GraphError(EDCNError):
    """Malformed graph input"""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"Self-loop at vertex {u}", vertex=u)


class VertexOutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"Vertex {u} outside [0, {n})", vertex=u, n=n)


class InvalidGraph(GraphError):
    def __init__(self, reason: str):
        super().__init__(reason)


# =============================================================================
# COLORING ERRORS
# =============================================================================

class ColoringError(EDCNError):
    """Malformed coloring input"""


class InvalidColoring(ColoringError):
    def __init__(self, reason: str):
        super().__init__(reason)


class SizeMismatch(ColoringError):
    def __init__(self, expected: int, got: int):
        super().__init__(
            f"Coloring covers {got} vertices, graph has {expected}",
            expected=expected, got=got,
        )


# =============================================================================
# FAMILY / SCHEME ERRORS
# =============================================================================

class InvalidParams(EDCNError):
    def __init__(self, family: str, reason: str):
        super().__init__(f"{family}: {reason}", family=family)


class OutOfTheoremRange(EDCNError):
    def __init__(self, family: str, params: Dict[str, int]):
        super().__init__(
            f"{family} {params} lies outside the theorem's range",
            family=family, params=params,
        )


class SchemeNotApplicable(EDCNError):
    def __init__(self, scheme: str, params: Dict[str, int], reason: str = ""):
        message = f"Scheme {scheme} does not apply to {params}"
        if reason:
            message += f": {reason}"
        super().__init__(message, scheme=scheme, params=params)


class SchemeAmbiguous(EDCNError):
    code = 4

    def __init__(self, location: str, note: Optional[str] = None):
        super().__init__(note or location, location=location)


# =============================================================================
# SEARCH ERRORS
# =============================================================================

class BudgetExceeded(EDCNError):
    code = 3

    def __init__(self, lower: int, upper: int, nodes: int = 0):
        super().__init__(
            f"Search budget exhausted; value lies in [{lower}, {upper}]",
            lower=lower, upper=upper, nodes=nodes,
        )
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
