"""Exception types shared across the package.

Plain precondition violations (bad vertex ids, empty inputs, out-of-range
parameters) raise ValueError.  The classes here are the domain-significant
outcomes a caller may want to catch and act on.
"""

from __future__ import annotations


class MinorColorError(Exception):
    """Base class for all package-specific errors."""


class ParseError(MinorColorError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitExceeded(MinorColorError):
    """An exact search was asked to run above its configured size cap.

    Callers may retry with a larger cap.
    """

    def __init__(self, what: str, needed: int, cap: int):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: instance size {needed} exceeds cap {cap}")


class MinDegreeExceeded(MinorColorError):
    """The coloring recursion met a vertex of minimum degree above the
    assumed bound.  This is a finding, not a crash: the attached graph is
    a counterexample to the assumed degree bound.
    """

    def __init__(self, vertex: int, degree: int, graph):
        self.vertex = vertex
        self.degree = degree
        self.graph = graph
        super().__init__(
            f"minimum degree {degree} at vertex {vertex} exceeds assumed bound"
        )


class IndependenceShortfall(MinorColorError):
    """A neighborhood graph had a smaller maximum independent set than the
    assumed independence guarantee requires.  Also a finding: the attached
    subgraph witnesses the shortfall.
    """

    def __init__(self, subgraph, found: int, required: int):
        self.subgraph = subgraph
        self.found = found
        self.required = required
        super().__init__(
            f"independent set of size {found} found where {required} required"
        )


class PaletteExhausted(MinorColorError):
    """Every palette color appeared on a neighborhood at lift time.

    Cannot happen when the caller's degree/independence assumptions hold;
    raised only to surface an internal bug instead of mis-coloring.
    """


class MinorAuditFailed(MinorColorError):
    """Audit mode found a clique minor in a neighborhood subgraph, so the
    input violated its promised minor-freeness."""

    def __init__(self, model, subgraph):
        self.model = model
        self.subgraph = subgraph
        super().__init__("neighborhood subgraph contains the forbidden clique minor")
