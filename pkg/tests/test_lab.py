from fractions import Fraction

import pytest

from avgindep.engine import avi
from avgindep.graph import GraphError, complete, empty, figure1_tree, path, star
from avgindep.lab import (
    DECREASE,
    INCREASE,
    edge_scan,
    enumerate_graphs,
    verify_bounds,
    verify_path_min,
    verify_quotient,
    verify_range,
    verify_star_max,
    verify_vertex_removal,
    vertex_scan,
    weighted_extremal_scan,
)
from avgindep.report import VerificationReport


def test_enumerate_graphs_counts():
    assert len(list(enumerate_graphs(2))) == 2
    assert len(list(enumerate_graphs(3))) == 8
    assert len(list(enumerate_graphs(5))) == 1024
    with pytest.raises(ValueError):
        list(enumerate_graphs(8))


def test_verify_bounds():
    r = verify_bounds(1)
    assert r.ok and r.details["graphs_checked"] == 0
    assert Fraction(4, 5) < avi(star(4)) < 2
    r = verify_bounds(6)
    assert r.ok and r.details["graphs_checked"] == 2**15 - 2


def test_verify_bounds_parallel_same_result():
    assert verify_bounds(5, jobs=2).to_dict() == verify_bounds(5).to_dict()


def test_verify_star_max():
    assert avi(star(4)) > avi(path(4)) == Fraction(5, 4)
    assert verify_star_max(3).details["trees"] == 1
    r = verify_star_max(10)
    assert r.ok and r.details["trees"] == 106 and r.details["equality_only_at_star"]


def test_verify_path_min():
    assert avi(path(4)) < avi(star(4))
    for n in (1, 2, 3):
        assert verify_path_min(n).ok
    r = verify_path_min(14)
    assert r.ok and r.details["trees"] == 3159


def test_verify_quotient():
    # S_4 centre: I(E_3) / I(S_4)
    assert Fraction(8, 9) == Fraction(2**3, 2**3 + 1)
    r = verify_quotient(1)
    assert r.ok and r.details["min_ratio"] == Fraction(1, 2)
    r = verify_quotient(12)
    assert r.ok


def test_vertex_removal_small():
    assert verify_range(verify_vertex_removal, 5).ok


def test_edge_scan_figure1():
    rows = {e: (b, a, d) for e, b, a, d in edge_scan(figure1_tree())}
    assert rows[(1, 2)] == (Fraction(55, 26), Fraction(19, 9), DECREASE)
    assert rows[(2, 3)] == (Fraction(55, 26), Fraction(83, 34), INCREASE)


def test_edge_scan_stars():
    assert all(r[1:] == (Fraction(27, 11), Fraction(83, 34), DECREASE) for r in edge_scan(star(6)))
    assert all(r[1:] == (Fraction(13, 9), Fraction(3, 2), INCREASE) for r in edge_scan(star(4)))
    with pytest.raises(GraphError):
        edge_scan(empty(3))


def test_vertex_scan():
    rows = vertex_scan(star(4))
    assert rows[0] == (0, Fraction(3, 2), INCREASE)
    assert all(r[1:] == (1, DECREASE) for r in rows[1:])
    assert vertex_scan(complete(2)) == vertex_scan(path(2)) == [
        (0, Fraction(1, 2), DECREASE), (1, Fraction(1, 2), DECREASE)]
    with pytest.raises(GraphError):
        vertex_scan(empty(0))


def test_weighted_scan():
    assert weighted_extremal_scan(8, 1).ok
    r = weighted_extremal_scan(8, Fraction(1, 2))
    assert r.status in ("verified", "counterexample")
    found = [n for n in range(5, 13) if not weighted_extremal_scan(n, 10).ok]
    assert found
    w = weighted_extremal_scan(found[0], 10).witness
    assert w["avi_alpha"] < w["avi_alpha_path"]
    with pytest.raises(ValueError):
        weighted_extremal_scan(8, 0)
    with pytest.raises(ValueError):
        weighted_extremal_scan(13, 1)


def test_report_invariant_and_json():
    with pytest.raises(ValueError):
        VerificationReport("x", (1, 1), "verified", {"graph": None})
    with pytest.raises(ValueError):
        VerificationReport("x", (1, 1), "counterexample", None)
    r = weighted_extremal_scan(7, 10)
    d = r.to_dict()
    assert d["status"] == "counterexample"
    assert set(d["witness"]["tree"]) == {"n", "edges"}
    assert "/" in d["witness"]["avi_alpha"]
    assert isinstance(r.to_json(), str)


@pytest.mark.slow
def test_vertex_removal_n7():
    assert verify_vertex_removal(7).ok


@pytest.mark.slow
def test_bounds_n7():
    assert verify_bounds(7).ok
