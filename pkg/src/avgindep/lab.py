"""Exhaustive checks of the extremal statements on small graphs and trees."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import engine
from .graph import Graph, GraphError, complete, empty, path, star
from .paths import A, B
from .report import VERIFIED, VerificationReport, counterexample, merge
from .setsystem import find_decreasing_element, independent_family
from .trees import enumerate_trees, is_path, is_star

MAX_LABELLED = 7

INCREASE, DECREASE, EQUAL = "increase", "decrease", "equal"


def _direction(before: Fraction, after: Fraction) -> str:
    if after > before:
        return INCREASE
    if after < before:
        return DECREASE
    return EQUAL


def _check_range(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"{what}: n must be in {lo}..{hi}, got {n}")


# labelled graphs

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_code(n: int, code: int) -> Graph:
    """Labelled graph whose edge set is the bitmask ``code`` over the pairs of ``0..n-1``."""
    adj = [0] * n
    for idx, (i, j) in enumerate(_pairs(n)):
        if code >> idx & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, (1 << n) - 1, tuple(adj))


def enumerate_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labelled graphs on ``n`` vertices (optionally a slice of codes)."""
    _check_range(n, 1, MAX_LABELLED, "enumerate_graphs")
    total = 1 << len(_pairs(n))
    for code in range(start, total if stop is None else min(stop, total)):
        yield graph_from_code(n, code)


def _chunks(total: int, jobs: int) -> list[tuple[int, int]]:
    parts = max(1, jobs) * 4
    step = -(-total // parts)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def _bounds_chunk(n: int, start: int, stop: int) -> Optional[dict]:
    lo, hi = Fraction(n, n + 1), Fraction(n, 2)
    full = len(_pairs(n))
    for code in range(start, stop):
        if code == 0 or code == (1 << full) - 1:
            continue
        g = graph_from_code(n, code)
        value = engine.avi(g)
        if not lo < value < hi:
            return {"graph": g, "avi": value, "lower": lo, "upper": hi}
    return None


def _vertex_removal_chunk(n: int, start: int, stop: int) -> Optional[dict]:
    for code in range(start, stop):
        g = graph_from_code(n, code)
        before = engine.avi(g)
        x0 = find_decreasing_element(independent_family(g))
        after = engine.avi(g.remove_vertex(x0))
        if not after < before:
            return {"graph": g, "vertex": x0, "avi": before, "avi_after": after}
    return None


def _run_chunks(worker: Callable, n: int, jobs: int) -> tuple[Optional[dict], int]:
    total = 1 << len(_pairs(n))
    chunks = _chunks(total, jobs)
    if jobs <= 1:
        results = [worker(n, s, e) for s, e in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, [n] * len(chunks), *zip(*chunks)))
    # chunk order fixes which witness is reported
    witness = next((r for r in results if r is not None), None)
    return witness, total


def verify_bounds(n: int, jobs: int = 1) -> VerificationReport:
    """n/(n+1) < avi(G) < n/2 for every labelled graph other than E_n and K_n."""
    _check_range(n, 1, MAX_LABELLED, "verify_bounds")
    claim = "complete-empty-bounds"
    assert engine.avi(complete(n)) == Fraction(n, n + 1)
    assert engine.avi(empty(n)) == Fraction(n, 2)
    witness, total = _run_chunks(_bounds_chunk, n, jobs)
    if witness:
        return counterexample(claim, (n, n), witness)
    checked = total - (1 if n == 1 else 2)
    return VerificationReport(claim, (n, n), VERIFIED, None, {"graphs_checked": checked})


def verify_vertex_removal(n: int, jobs: int = 1) -> VerificationReport:
    """The set-family witness vertex lowers avi, for every labelled graph on n vertices."""
    _check_range(n, 1, MAX_LABELLED, "verify_vertex_removal")
    witness, total = _run_chunks(_vertex_removal_chunk, n, jobs)
    claim = "decreasing-vertex"
    if witness:
        return counterexample(claim, (n, n), witness)
    return VerificationReport(claim, (n, n), VERIFIED, None, {"graphs_checked": total})


# trees

def verify_star_max(n: int) -> VerificationReport:
    _check_range(n, 1, 16, "verify_star_max")
    claim = "star-maximal"
    top = engine.avi(star(n))
    trees = 0
    equal_elsewhere = False
    for t in enumerate_trees(n):
        trees += 1
        value = engine.avi(t)
        if value > top:
            return counterexample(claim, (n, n), {"tree": t, "avi": value, "avi_star": top})
        if value == top and not is_star(t):
            equal_elsewhere = True
    return VerificationReport(claim, (n, n), VERIFIED, None,
                              {"trees": trees, "avi_star": top,
                               "equality_only_at_star": not equal_elsewhere})


def verify_path_min(n: int) -> VerificationReport:
    """Every non-path tree has avi(T) >= a*n + b > avi(P_n)."""
    _check_range(n, 1, 16, "verify_path_min")
    claim = "path-minimal"
    bottom = engine.avi(path(n))
    line = A * n + B
    if n >= 4 and not bottom < line:
        return counterexample(claim, (n, n), {"tree": path(n), "avi": bottom, "an_plus_b": line})
    trees = 0
    for t in enumerate_trees(n):
        trees += 1
        if is_path(t):
            continue
        value = engine.avi(t)
        if value < line or not bottom < value:
            return counterexample(claim, (n, n), {"tree": t, "avi": value, "avi_path": bottom,
                                                  "an_plus_b": line})
    return VerificationReport(claim, (n, n), VERIFIED, None, {"trees": trees, "avi_path": bottom})


def verify_quotient(n: int) -> VerificationReport:
    """1/2 <= I(T-v)/I(T) < 1 for every tree on n vertices and every vertex."""
    _check_range(n, 1, 14, "verify_quotient")
    claim = "quotient-bounds"
    pairs = 0
    lo = None
    for t in enumerate_trees(n):
        whole = engine.count(t)
        for v in t.vertices():
            ratio = Fraction(engine.count(t.remove_vertex(v)), whole)
            pairs += 1
            if not Fraction(1, 2) <= ratio < 1:
                return counterexample(claim, (n, n), {"tree": t, "vertex": v, "ratio": ratio})
            lo = ratio if lo is None else min(lo, ratio)
    return VerificationReport(claim, (n, n), VERIFIED, None,
                              {"tree_vertex_pairs": pairs, "min_ratio": lo})


def verify_range(check: Callable[..., VerificationReport], max_n: int, min_n: int = 1,
                 jobs: int = 1, **kwargs) -> VerificationReport:
    """Run a per-n check for ``min_n..max_n`` and merge the reports."""
    extra = {"jobs": jobs} if check in (verify_bounds, verify_vertex_removal) else {}
    reports = [check(n, **extra, **kwargs) for n in range(min_n, max_n + 1)]
    return merge(reports[0].claim, reports)


# single-graph scans

def edge_scan(g: Graph) -> list[tuple[tuple[int, int], Fraction, Fraction, str]]:
    edges = g.edges()
    if not edges:
        raise GraphError("edge_scan needs at least one edge")
    before = engine.avi(g)
    out = []
    for u, v in edges:
        after = engine.avi(g.remove_edge(u, v))
        out.append(((u, v), before, after, _direction(before, after)))
    return out


def vertex_scan(g: Graph) -> list[tuple[int, Fraction, str]]:
    if g.order() == 0:
        raise GraphError("vertex_scan needs at least one vertex")
    before = engine.avi(g)
    out = []
    for v in g.vertices():
        after = engine.avi(g.remove_vertex(v))
        out.append((v, after, _direction(before, after)))
    if not any(d == DECREASE for _, _, d in out):
        raise AssertionError(f"no avi-decreasing vertex in {g}")
    return out


def weighted_extremal_scan(n: int, alpha: Fraction | int) -> VerificationReport:
    """Does P_n minimise the hard-core mean size at fugacity alpha among n-vertex trees?

    Exploratory: a non-path minimiser is reported as the witness.
    """
    _check_range(n, 2, 12, "weighted_extremal_scan")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("fugacity alpha must be positive")
    claim = "weighted-path-minimal"
    at_path = engine.weighted_summary(path(n), alpha)[2]
    best, best_value = None, None
    for t in enumerate_trees(n):
        value = engine.weighted_summary(t, alpha)[2]
        if best_value is None or value < best_value:
            best, best_value = t, value
    details = {"alpha": alpha, "avi_alpha_path": at_path, "min_avi_alpha": best_value}
    if best_value < at_path:
        return counterexample(claim, (n, n), {"tree": best, "avi_alpha": best_value,
                                              "avi_alpha_path": at_path}, **details)
    return VerificationReport(claim, (n, n), VERIFIED, None, details)
