"""Independence polynomial and the average size of independent sets.

Two exact routes compute the same polynomial:

* a memoised vertex recursion ``I(G) = I(G-v) + x I(G-N[v])`` that splits into
  connected components first and pivots on a maximum-degree vertex;
* a rooted tree DP used for forests.

``brute_force_poly`` enumerates subsets and is kept as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import CapacityError, Graph, bits, component_masks, disjoint_union

BRUTE_FORCE_MAX = 25

Poly = tuple[int, ...]


# integer polynomial helpers (coefficient tuples, lowest degree first)

def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return tuple(out)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_shift(p: Sequence[int]) -> Poly:
    """Multiply by x."""
    return (0, *p)


@dataclass(frozen=True)
class IndependencePoly:
    coeffs: Poly

    @property
    def count(self) -> int:
        """I(G): number of independent sets."""
        return sum(self.coeffs)

    @property
    def total(self) -> int:
        """T(G): sum of the sizes of all independent sets."""
        return sum(k * c for k, c in enumerate(self.coeffs))

    @property
    def independence_number(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative_times_x(self, x: Fraction | int) -> Fraction:
        """Sum of k * i_k * x**k."""
        acc = Fraction(0)
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * x + k * self.coeffs[k]
        return acc * x

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            coef = str(c) if (c != 1 or k == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms)


@dataclass(frozen=True)
class InvariantSummary:
    count: int
    total: int
    avg: Fraction


# exact engine

def _recursive_poly(adj: Sequence[int], mask: int) -> Poly:
    memo: dict[int, Poly] = {0: (1,)}

    def component(m: int) -> Poly:
        hit = memo.get(m)
        if hit is not None:
            return hit
        if m & (m - 1) == 0:
            res: Poly = (1, 1)
        else:
            # max-degree pivot, smallest index on ties
            pivot, best = -1, -1
            for v in bits(m):
                d = (adj[v] & m).bit_count()
                if d > best:
                    pivot, best = v, d
            without = whole(m & ~(1 << pivot))
            closed = whole(m & ~(adj[pivot] | (1 << pivot)))
            res = poly_add(without, poly_shift(closed))
        memo[m] = res
        return res

    def whole(m: int) -> Poly:
        hit = memo.get(m)
        if hit is not None:
            return hit
        comps = component_masks(adj, m)
        if len(comps) == 1:
            return component(m)
        res: Poly = (1,)
        for c in comps:
            res = poly_mul(res, component(c))
        memo[m] = res
        return res

    return whole(mask)


def _forest_poly(g: Graph) -> Poly:
    """Rooted DP: per vertex the polynomials with the root excluded / included."""
    adj, result = g.adj, (1,)
    for comp in g.component_masks():
        root = (comp & -comp).bit_length() - 1
        order, parent = [root], {root: -1}
        for v in order:
            for w in bits(adj[v]):
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        excl: dict[int, Poly] = {}
        incl: dict[int, Poly] = {}
        for v in reversed(order):
            ex: Poly = (1,)
            inc: Poly = (0, 1)
            for w in bits(adj[v]):
                if w != parent[v]:
                    ex = poly_mul(ex, poly_add(excl[w], incl[w]))
                    inc = poly_mul(inc, excl[w])
            excl[v], incl[v] = ex, inc
        result = poly_mul(result, poly_add(excl[root], incl[root]))
    return result


def indep_poly(g: Graph, method: str = "auto") -> IndependencePoly:
    """Exact independence polynomial of ``g``.

    ``method`` is ``"auto"`` (tree DP for forests, recursion otherwise),
    ``"recursive"`` or ``"tree"``.
    """
    if method == "auto":
        method = "tree" if g.is_forest() else "recursive"
    if method == "tree":
        if not g.is_forest():
            raise ValueError("tree DP requires an acyclic graph")
        return IndependencePoly(_forest_poly(g))
    if method == "recursive":
        return IndependencePoly(_recursive_poly(g.adj, g.present))
    raise ValueError(f"unknown method {method!r}")


def brute_force_poly(g: Graph) -> IndependencePoly:
    """Oracle: test every vertex subset for independence."""
    if g.order() > BRUTE_FORCE_MAX:
        raise CapacityError(f"brute force is capped at {BRUTE_FORCE_MAX} vertices")
    verts = g.vertices()
    counts = [0] * (len(verts) + 1)
    for sub in range(1 << len(verts)):
        s = 0
        for i, v in enumerate(verts):
            if sub >> i & 1:
                s |= 1 << v
        if g.is_independent(s):
            counts[s.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return IndependencePoly(tuple(counts))


def summary(g: Graph) -> InvariantSummary:
    p = indep_poly(g)
    return InvariantSummary(p.count, p.total, Fraction(p.total, p.count))


def avi(g: Graph) -> Fraction:
    """Average size of an independent set of ``g``."""
    return summary(g).avg


def count(g: Graph) -> int:
    return indep_poly(g).count


def weighted_summary(g: Graph, alpha: Fraction | int) -> tuple[Fraction, Fraction, Fraction]:
    """``(I^alpha, T^alpha, avi^alpha)``: hard-core partition function, weighted size total, mean size."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("fugacity alpha must be positive")
    p = indep_poly(g)
    z = p.evaluate(alpha)
    t = p.derivative_times_x(alpha)
    return z, t, t / z


def avi_additive_check(graphs: Sequence[Graph]) -> Fraction:
    """avi of the disjoint union, checked against the sum over the parts."""
    union = disjoint_union(graphs)
    whole = avi(union)
    parts = sum((avi(g) for g in graphs), Fraction(0))
    if whole != parts:
        raise AssertionError(f"avi not additive: {whole} != {parts}")
    return whole
