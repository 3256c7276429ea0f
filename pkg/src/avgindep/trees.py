"""Free trees up to isomorphism.

Generation walks canonical level sequences in the order of Wright, Richmond,
Odlyzko and McKay: each free tree is represented once, rooted at its centre,
and successors are produced in constant amortised time.  ``canonical_form``
is an independent centre-rooted AHU encoding used to check uniqueness.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graph import Graph, bits

MAX_TREE_ORDER = 18


def _next_rooted(levels: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Successor of a rooted level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree.

    Returns the subtree's levels (rebased to 0) and the remainder rooted at 0.
    """
    m = len(levels)
    seen_one = False
    for i, lv in enumerate(levels):
        if lv == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [lv - 1 for lv in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(cand: list[int]) -> list[int]:
    """Smallest canonical free-tree sequence at or after ``cand``."""
    left, rest = _split(cand)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return cand
    p = len(left)
    nxt = _next_rooted(cand, p)
    if cand[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequence_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lv in enumerate(levels):
        while stack and levels[stack[-1]] >= lv:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        yield seq
        seq = _next_rooted(seq)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every free tree on ``n`` vertices exactly once, in a fixed order."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    for seq in level_sequences(n):
        yield level_sequence_to_graph(seq)


def count_trees(n: int) -> int:
    return sum(1 for _ in level_sequences(n))


# canonical forms

def _centres(g: Graph) -> list[int]:
    deg = {v: g.adj[v].bit_count() for v in g.vertices()}
    layer = [v for v, d in deg.items() if d <= 1]
    remaining = len(deg)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in bits(g.adj[v]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _encode(g: Graph, root: int, parent: int) -> str:
    kids = sorted(_encode(g, w, root) for w in bits(g.adj[root]) if w != parent)
    return "(" + "".join(kids) + ")"


def canonical_form(g: Graph) -> str:
    """Isomorphism invariant string for a tree; equal iff the trees are isomorphic."""
    if not g.is_tree():
        raise ValueError("canonical_form requires a tree")
    return min(_encode(g, c, -1) for c in _centres(g))


def is_path(g: Graph) -> bool:
    return g.is_tree() and all(g.adj[v].bit_count() <= 2 for v in g.vertices())


def is_star(g: Graph) -> bool:
    k = g.order()
    return g.is_tree() and (k <= 2 or any(g.adj[v].bit_count() == k - 1 for v in g.vertices()))
