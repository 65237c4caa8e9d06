"""Simple undirected graphs over small integer vertex ids.

Adjacency is stored as one bitmask per vertex, which keeps the exact
searches elsewhere in the package fast.  Graphs are value-semantic:
every operation returns a new graph, so recursive algorithms and
backtracking searches can keep cheap snapshots.  Vertex ids are stable:
induced subgraphs and contractions never relabel surviving vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_MAX_VERTICES = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph.

    Vertices are small non-negative integers, not necessarily contiguous
    (contraction leaves holes).  No self-loops, no parallel edges.
    """

    __slots__ = ("_vmask", "_adj", "n", "m")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        *,
        max_vertices: int | None = None,
    ):
        cap = DEFAULT_MAX_VERTICES if max_vertices is None else max_vertices
        vmask = 0
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
            if v >= cap:
                raise ValueError(f"vertex id {v} exceeds the size cap {cap}")
            vmask |= 1 << v
        adj = {v: 0 for v in _bits(vmask)}
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (vmask >> u) & 1 or not (vmask >> v) & 1:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")
            if not (adj[u] >> v) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        self._vmask = vmask
        self._adj = adj
        self.n = len(adj)
        self.m = m

    @classmethod
    def _from_adj(cls, adj: dict[int, int]) -> "Graph":
        """Internal fast path: adj maps every vertex to a neighbor mask that
        is already symmetric, irreflexive, and restricted to the vertex set."""
        g = object.__new__(cls)
        vmask = 0
        for v in adj:
            vmask |= 1 << v
        g._vmask = vmask
        g._adj = adj
        g.n = len(adj)
        g.m = sum(mask.bit_count() for mask in adj.values()) // 2
        return g

    # Constructors for common families used throughout the tests.

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(range(n))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(range(n), [(i, (i + 1) % n) for i in range(n)])

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    def has_vertex(self, v: int) -> bool:
        return bool((self._vmask >> v) & 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._adj[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        out = []
        for u, mask in self._adj.items():
            higher = mask >> (u + 1) << (u + 1)
            out.extend((u, w) for w in _bits(higher))
        out.sort()
        return out

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and v >= 0 and (self._vmask >> v) & 1):
            raise ValueError(f"unknown vertex id {v}")

    def _check_subset(self, s: Iterable[int]) -> int:
        mask = 0
        for v in s:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vmask == other._vmask and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vmask, tuple(self._adj.values())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class Coloring:
    """A total color assignment over a graph's vertices.

    assignment maps vertex id -> color index (0-based); palette_size is
    the number of colors the producer was permitted to use, so every
    assigned color must be < palette_size.
    """

    assignment: dict[int, int]
    palette_size: int

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by the vertex set s, ids preserved."""
    smask = g._check_subset(s)
    adj = {v: g._adj[v] & smask for v in _bits(smask)}
    return Graph._from_adj(adj)


def without_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, _bits(g._vmask & ~(1 << v)))


def contract_set(g: Graph, s: Iterable[int]) -> tuple[Graph, int]:
    """Merge the vertex set s into a single vertex.

    The merged vertex takes the smallest id in s and becomes adjacent to
    every outside neighbor of s; loops and parallel edges are dropped.
    Survivors keep their ids.  Returns (new graph, merged vertex id).
    """
    smask = g._check_subset(s)
    if smask == 0:
        raise ValueError("cannot contract an empty vertex set")
    z = (smask & -smask).bit_length() - 1
    zbit = 1 << z
    union_nbrs = 0
    for v in _bits(smask):
        union_nbrs |= g._adj[v]
    znbrs = union_nbrs & ~smask
    adj: dict[int, int] = {}
    for v in _bits(g._vmask & ~smask | zbit):
        if v == z:
            adj[v] = znbrs
        else:
            mask = g._adj[v]
            if mask & smask:
                adj[v] = (mask & ~smask) | zbit
            else:
                adj[v] = mask
    return Graph._from_adj(adj), z


def min_degree_vertex(g: Graph) -> tuple[int, int]:
    """A vertex of minimum degree and that degree; ties go to the smallest id."""
    if g.n == 0:
        raise ValueError("empty graph has no minimum-degree vertex")
    best_v = -1
    best_d = g.n
    for v, mask in g._adj.items():
        d = mask.bit_count()
        if d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g joins two members of s."""
    smask = g._check_subset(s)
    for v in _bits(smask):
        if g._adj[v] & smask:
            return False
    return True


def is_proper_coloring(g: Graph, c: Coloring) -> bool:
    """True iff c colors every vertex and no edge is monochromatic."""
    if set(c.assignment) != set(g._adj):
        raise ValueError("coloring domain does not match the graph's vertex set")
    for bad in c.assignment.values():
        if not 0 <= bad < c.palette_size:
            raise ValueError(f"color {bad} outside palette of size {c.palette_size}")
    for u, v in g.edges():
        if c.assignment[u] == c.assignment[v]:
            return False
    return True
