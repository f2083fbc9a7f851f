"""Undirected simple graphs with deterministic edge ordering.

Vertices are the integers ``0 .. vertex_count - 1``. Edges are stored
normalized (smaller endpoint first), so ``(u, v)`` and ``(v, u)`` name the
same edge and sorted edge lists are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidEdge, InvalidVertex, ParseError


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise InvalidEdge(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[Edge] = frozenset()
    _adj: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidVertex("vertex_count must be non-negative")
        normalized = frozenset(Edge.of(*e) for e in self.edges)
        object.__setattr__(self, "edges", normalized)
        adj = [0] * self.vertex_count
        for e in normalized:
            if not (0 <= e.u < e.v < self.vertex_count):
                raise InvalidEdge(f"edge {tuple(e)} out of range for {self.vertex_count} vertices")
            adj[e.u] |= 1 << e.v
            adj[e.v] |= 1 << e.u
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(vertex_count, frozenset(pairs))

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour sets as bitmasks, one int per vertex."""
        return self._adj

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        if a == b or not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
            return False
        return bool(self._adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        mask = self._adj[v]
        return [w for w in range(self.vertex_count) if mask >> w & 1]

    def add_edge(self, a: int, b: int) -> tuple["Graph", bool]:
        """Return ``(graph, added)``; ``added`` is False when the edge already existed."""
        for x in (a, b):
            if not (0 <= x < self.vertex_count):
                raise InvalidEdge(f"vertex {x} out of range")
        e = Edge.of(a, b)
        if e in self.edges:
            return self, False
        return Graph(self.vertex_count, self.edges | {e}), True

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self.vertex_count, self.edges | frozenset(extra))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise InvalidVertex(f"vertex {v} out of range for {self.vertex_count} vertices")


def new_graph(vertex_count: int) -> Graph:
    return Graph(vertex_count)


def add_edge(g: Graph, u: int, v: int) -> tuple[Graph, bool]:
    return g.add_edge(u, v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def leaves(g: Graph) -> set[int]:
    return {v for v, d in enumerate(g.degrees()) if d == 1}


def non_edges(g: Graph) -> list[Edge]:
    adj = g.adjacency
    return [Edge(a, b) for a, b in combinations(range(g.vertex_count), 2) if not adj[a] >> b & 1]


def count_components(adj: Sequence[int], n: int, removed: int = 0) -> int:
    """Components of the graph given by bitmask adjacency, minus the vertex set ``removed``."""
    remaining = ((1 << n) - 1) & ~removed
    count = 0
    while remaining:
        low = remaining & -remaining
        seen = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            nxt = adj[bit.bit_length() - 1] & remaining & ~seen
            seen |= nxt
            frontier |= nxt
        remaining &= ~seen
        count += 1
    return count


def components(g: Graph, removed: int = 0) -> int:
    """Number of connected components after deleting the vertex bitmask ``removed``."""
    return count_components(g.adjacency, g.vertex_count, removed)


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or components(g) == 1


def biconnected_adjacency(adj: Sequence[int], n: int) -> bool:
    if n < 3 or count_components(adj, n) != 1:
        return False
    return all(count_components(adj, n, 1 << v) == 1 for v in range(n))


def is_biconnected(g: Graph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    return biconnected_adjacency(g.adjacency, g.vertex_count)


# ---------------------------------------------------------------------------
# standard constructors


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidEdge("a simple cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaf_count: int) -> Graph:
    """Centre 0 joined to leaves 1..leaf_count."""
    return Graph.from_edges(leaf_count + 1, ((0, i) for i in range(1, leaf_count + 1)))


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header followed by m lines "u v"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge list")
    try:
        header = [int(t) for t in lines[0].split()]
    except ValueError as exc:
        raise ParseError(f"bad header line: {lines[0]!r}") from exc
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise ParseError("header must be 'n m' with non-negative integers")
    n, m = header
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex indices")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex") from exc
        if a == b:
            raise ParseError(f"line {lineno}: loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"line {lineno}: vertex out of range")
        e = Edge.of(a, b)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {a} {b}")
        seen.add(e)
    return Graph(n, frozenset(seen))


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.vertex_count} {len(g.edges)}"]
    rows.extend(f"{e.u} {e.v}" for e in g.sorted_edges())
    return "\n".join(rows) + "\n"
