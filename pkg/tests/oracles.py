"""Independent reference computations used only by the tests."""

from __future__ import annotations

import heapq
from decimal import Decimal, getcontext
from fractions import Fraction
from itertools import combinations, product

from avgindep.graph import Graph
from avgindep.quadfield import QuadNumber
from avgindep.trees import canonical_form


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def prufer_tree_classes(n: int) -> set[str]:
    """Canonical forms of all labelled trees on n vertices."""
    if n == 1:
        return {canonical_form(Graph.from_edges(1, []))}
    if n == 2:
        return {canonical_form(Graph.from_edges(2, [(0, 1)]))}
    return {canonical_form(prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)}


def independent_sets(edges: list[tuple[int, int]], n: int) -> list[tuple[int, ...]]:
    """Plain-tuple enumeration, no bitmasks."""
    es = {frozenset(e) for e in edges}
    out = []
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if all(frozenset(p) not in es for p in combinations(s, 2)):
                out.append(s)
    return out


def avi_from_sets(edges, n) -> Fraction:
    sets = independent_sets(edges, n)
    return Fraction(sum(len(s) for s in sets), len(sets))


def decimal_value(x: QuadNumber, prec: int = 80) -> Decimal:
    getcontext().prec = prec
    r, c = x.rat, x.coef5
    return Decimal(r.numerator) / Decimal(r.denominator) + Decimal(c.numerator) / Decimal(
        c.denominator
    ) * Decimal(5).sqrt()


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
