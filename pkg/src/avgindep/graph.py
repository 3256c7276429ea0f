"""Bitmask graphs on at most 64 vertices.

Vertices are the integers ``0..n-1``.  Surgery (vertex / edge removal) keeps the
original labels and only clears bits of the ``present`` mask, so a subgraph can
be identified by its present mask alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Malformed graph input or an operation on an absent vertex/edge."""


class CapacityError(GraphError):
    """Vertex count beyond what an operation supports."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    present: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, (1 << n) - 1, tuple(adj))

    # basic queries

    def vertices(self) -> list[int]:
        return list(bits(self.present))

    def order(self) -> int:
        return self.present.bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in bits(self.present) for v in bits(self.adj[u]) if u < v]

    def size(self) -> int:
        return sum(self.adj[v].bit_count() for v in bits(self.present)) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def closed_nbhd(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.adj[u] >> v & 1) and bool(self.present >> u & 1)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n and self.present >> v & 1):
            raise GraphError(f"vertex {v} is not present")

    # surgery

    def induced(self, keep: int) -> "Graph":
        """Subgraph induced on ``keep & present``, labels unchanged."""
        keep &= self.present
        adj = tuple((a & keep) if keep >> v & 1 else 0 for v, a in enumerate(self.adj))
        return Graph(self.n, keep, adj)

    def remove_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(self.present & ~(1 << v))

    def remove_closed_nbhd(self, v: int) -> "Graph":
        return self.induced(self.present & ~self.closed_nbhd(v))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, self.present, tuple(adj))

    def compact(self) -> "Graph":
        """Relabel the present vertices to ``0..k-1`` preserving their order."""
        order = self.vertices()
        index = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(len(order), [(index[u], index[v]) for u, v in self.edges()])

    # structure

    def component_masks(self) -> list[int]:
        return component_masks(self.adj, self.present)

    def components(self) -> list["Graph"]:
        return [self.induced(m) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def is_tree(self) -> bool:
        return self.order() >= 1 and self.is_connected() and self.size() == self.order() - 1

    def is_forest(self) -> bool:
        return self.size() == self.order() - len(self.component_masks())

    def is_independent(self, s: int) -> bool:
        if s & ~self.present:
            raise GraphError("vertex set is not contained in the graph")
        for v in bits(s):
            if self.adj[v] & s:
                return False
        return True

    def __str__(self) -> str:
        return f"Graph(n={self.order()}, edges={self.edges()})"


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, ordered by lowest vertex."""
    comps = []
    rest = mask
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        rest &= ~seen
    return comps


# generators

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices; vertex 0 is the centre."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


GENERATORS = {"path": path, "star": star, "complete": complete, "empty": empty}


def make(kind: str, n: int) -> Graph:
    try:
        gen = GENERATORS[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return gen(n)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    total = sum(g.order() for g in graphs)
    if total > MAX_VERTICES:
        raise CapacityError(f"disjoint union has {total} vertices")
    edges = []
    offset = 0
    for g in graphs:
        c = g.compact()
        edges += [(u + offset, v + offset) for u, v in c.edges()]
        offset += c.n
    return Graph.from_edges(offset, edges)


# edge-list ingestion

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    An optional first data line ``n <count>`` fixes the vertex count; otherwise it
    is one more than the largest label.  Then one ``u v`` pair per line.  Blank
    lines and ``#`` comments are skipped.
    """
    n = None
    edges = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    c = g.compact()
    return "".join([f"n {c.n}\n"] + [f"{u} {v}\n" for u, v in c.edges()])


def load_edge_list(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def from_spec(spec: str) -> Graph:
    """Build a graph from ``kind:N`` (path/star/complete/empty) or ``file:PATH``."""
    kind, sep, arg = spec.partition(":")
    if not sep or not arg:
        raise GraphError(f"malformed graph spec {spec!r}; expected kind:N or file:PATH")
    if kind == "file":
        return load_edge_list(arg)
    if not arg.isdigit():
        raise GraphError(f"malformed vertex count in {spec!r}")
    return make(kind, int(arg))


FIGURE1_EDGES = [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)]


def figure1_tree() -> Graph:
    """Six-vertex tree: path 0-1-2-3 with two extra leaves 4, 5 on vertex 1."""
    return Graph.from_edges(6, FIGURE1_EDGES)
