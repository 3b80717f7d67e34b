"""
cubic-hc Exceptions - Custom exception classes for graph construction,
Hamilton-cycle search, transfer matrices and file formats.
"""

from typing import Any, Dict, Optional, Tuple


class HCError(Exception):
    """Base exception for all cubic-hc errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class ValidationError(HCError):
    """Raised when an input violates an operation's precondition."""

    def __init__(self, message: str, error_code: str = "VALIDATION_ERROR", **kwargs: Any):
        super().__init__(message, error_code=error_code, **kwargs)


# Graph construction


class DuplicateEdgeError(ValidationError):
    """Raised when an edge list repeats an unordered pair."""

    def __init__(self, edge: Tuple[int, int], **kwargs: Any):
        self.edge = edge
        super().__init__(
            f"Edge {edge} listed more than once", error_code="DUPLICATE_EDGE", **kwargs
        )


class LoopEdgeError(ValidationError):
    """Raised when an edge joins a vertex to itself."""

    def __init__(self, vertex: int, **kwargs: Any):
        self.vertex = vertex
        super().__init__(f"Loop at vertex {vertex}", error_code="LOOP_EDGE", **kwargs)


class VertexOutOfRangeError(ValidationError):
    """Raised when an endpoint is outside [0, n)."""

    def __init__(self, vertex: int, n: int, **kwargs: Any):
        self.vertex = vertex
        self.n = n
        super().__init__(
            f"Vertex {vertex} outside range [0, {n})", error_code="VERTEX_OUT_OF_RANGE", **kwargs
        )


class AcyclicGraphError(ValidationError):
    """Raised when a cycle-based query is asked of a forest."""

    def __init__(self, **kwargs: Any):
        super().__init__("Graph has no cycle", error_code="ACYCLIC_GRAPH", **kwargs)


class DisconnectedGraphError(ValidationError):
    """Raised when an operation requires a connected graph."""

    def __init__(self, components: int, **kwargs: Any):
        self.components = components
        super().__init__(
            f"Graph is disconnected ({components} components)", error_code="DISCONNECTED", **kwargs
        )


class KTooLargeError(ValidationError):
    """Raised when the cyclic-connectivity scan is asked for too large a k."""

    def __init__(self, k: int, limit: int, **kwargs: Any):
        self.k = k
        self.limit = limit
        super().__init__(
            f"Cyclic connectivity scan limited to k <= {limit}, got {k}",
            error_code="K_TOO_LARGE",
            **kwargs,
        )


class BadParametersError(ValidationError):
    """Raised when a generator or evaluator gets parameters outside its domain."""

    def __init__(self, message: str, **kwargs: Any):
        super().__init__(message, error_code="BAD_PARAMETERS", **kwargs)


class NotInducedFourCycleError(ValidationError):
    """Raised when a FourCycleHandle does not name an induced 4-cycle of cubic vertices."""

    def __init__(self, handle: Tuple[int, int, int, int], reason: str, **kwargs: Any):
        self.handle = handle
        super().__init__(
            f"{handle} is not an induced 4-cycle: {reason}",
            error_code="NOT_INDUCED_FOUR_CYCLE",
            **kwargs,
        )


class HypothesisViolatedError(ValidationError):
    """Raised when G minus the two extended edges is still Hamiltonian."""

    def __init__(self, handle: Tuple[int, int, int, int], **kwargs: Any):
        self.handle = handle
        super().__init__(
            f"Graph stays Hamiltonian without edges v1v2 and v3v4 of {handle}",
            error_code="HYPOTHESIS_VIOLATED",
            **kwargs,
        )


class UnknownFixtureError(ValidationError):
    """Raised when a fixture name is not registered."""

    def __init__(self, name: str, known: Tuple[str, ...], **kwargs: Any):
        self.name = name
        super().__init__(
            f"Unknown fixture '{name}' (known: {', '.join(known)})",
            error_code="UNKNOWN_FIXTURE",
            **kwargs,
        )


# Search


class CountOverflowError(HCError):
    """Raised when a Hamilton-cycle count leaves the signed 64-bit range."""

    def __init__(self, total: int, **kwargs: Any):
        self.total = total
        super().__init__(f"Count {total} exceeds 64-bit range", error_code="OVERFLOW", **kwargs)


class SearchTimeoutError(HCError):
    """Raised when a search exceeds its caller-supplied budget."""

    def __init__(self, budget: float, partial_total: int, **kwargs: Any):
        self.budget = budget
        self.partial_total = partial_total
        super().__init__(
            f"Search exceeded budget of {budget:.3f}s after {partial_total} cycles",
            error_code="TIMEOUT",
            **kwargs,
        )


class CutInvariantViolatedError(HCError):
    """Raised when a Hamilton cycle crosses the layer cuts of a nanotube unevenly."""

    def __init__(self, crossings: Tuple[int, ...], **kwargs: Any):
        self.crossings = crossings
        super().__init__(
            f"Hamilton cycle uses {crossings} edges on successive cuts",
            error_code="CUT_INVARIANT_VIOLATED",
            **kwargs,
        )


# Transfer matrices


class NotRotationClosedError(ValidationError):
    """Raised when a partition family is not closed under rotation."""

    def __init__(self, label: str, **kwargs: Any):
        super().__init__(
            f"Rotation of {label} is missing from the family",
            error_code="NOT_ROTATION_CLOSED",
            **kwargs,
        )


class WidthTooLargeError(ValidationError):
    """Raised when tile enumeration would exceed the width cap."""

    def __init__(self, width: int, limit: int, **kwargs: Any):
        self.width = width
        self.limit = limit
        super().__init__(
            f"Width {width} exceeds enumeration cap {limit}", error_code="WIDTH_TOO_LARGE", **kwargs
        )


class WidthMismatchError(ValidationError):
    """Raised when a partition and a tile disagree on width or type."""

    def __init__(self, message: str, **kwargs: Any):
        super().__init__(message, error_code="WIDTH_MISMATCH", **kwargs)


class NoRealDominantRootError(HCError):
    """Raised when the growth of a typed count is not governed by a real root."""

    def __init__(self, modulus: float, **kwargs: Any):
        self.modulus = modulus
        super().__init__(
            f"No real dominant root; largest complex modulus is {modulus:.9f}",
            error_code="NO_REAL_DOMINANT_ROOT",
            **kwargs,
        )


# File formats


class BadHeaderError(ValidationError):
    """Raised when a planar_code stream starts with an unexpected header."""

    def __init__(self, header: bytes, **kwargs: Any):
        self.header = header
        super().__init__(f"Unrecognised header {header!r}", error_code="BAD_HEADER", **kwargs)


class TruncatedStreamError(ValidationError):
    """Raised when a planar_code stream ends inside a graph."""

    def __init__(self, graph_index: int, **kwargs: Any):
        self.graph_index = graph_index
        super().__init__(
            f"Stream ended inside graph #{graph_index}", error_code="TRUNCATED_STREAM", **kwargs
        )


class AsymmetricAdjacencyError(ValidationError):
    """Raised when u lists v as a neighbour but v does not list u."""

    def __init__(self, u: int, v: int, graph_index: int, **kwargs: Any):
        super().__init__(
            f"Graph #{graph_index}: {u} lists {v} but not conversely",
            error_code="ASYMMETRIC_ADJACENCY",
            **kwargs,
        )


class UnsupportedSizeError(ValidationError):
    """Raised for planar_code graphs above 255 vertices."""

    def __init__(self, graph_index: int, **kwargs: Any):
        super().__init__(
            f"Graph #{graph_index} uses the 2-byte planar_code extension (n > 255)",
            error_code="UNSUPPORTED_SIZE",
            **kwargs,
        )


class ParseError(ValidationError):
    """Raised when an edge-list line cannot be parsed."""

    def __init__(
        self, line_number: int, line: str, reason: str = "expected two integers", **kwargs: Any
    ):
        self.line_number = line_number
        self.line = line
        super().__init__(
            f"Line {line_number}: {reason}: {line!r}", error_code="PARSE_ERROR", **kwargs
        )


class InconsistentCountsError(ValidationError):
    """Raised when an edge-list header disagrees with its body."""

    def __init__(self, declared: int, found: int, **kwargs: Any):
        super().__init__(
            f"Header declares {declared} edges, body has {found}",
            error_code="INCONSISTENT_COUNTS",
            **kwargs,
        )
