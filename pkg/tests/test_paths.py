from fractions import Fraction

import pytest

from avgindep.engine import avi
from avgindep.graph import path
from avgindep.paths import (
    A,
    B,
    LIMIT_OFFSET,
    TABLE1,
    WORST_CASE,
    CaseSpec,
    case_lower_bound,
    enumerate_cases,
    margin_table_rows,
    path_avi,
    path_closed_form,
    path_counts,
    verify_auxiliary_inequalities,
    verify_error_term,
    verify_theorem45_cases,
)
from avgindep.quadfield import SQRT5, as_rational
from oracles import fib


@pytest.mark.parametrize(
    "n, value, c_n",
    [(1, Fraction(1, 2), SQRT5 / 10), (2, Fraction(2, 3), 1 / SQRT5 - Fraction(1, 3)),
     (5, Fraction(20, 13), SQRT5 / 2 - Fraction(25, 26))],
)
def test_closed_form_examples(n, value, c_n):
    v = path_closed_form(n)
    assert v.rational_value == value
    assert v.c_n == c_n
    assert as_rational(v.closed_form) == value


def test_recurrences():
    for n in range(1, 201):
        i, t = path_counts(n)
        assert i == fib(n + 2)
        assert path_closed_form(n).rational_value == Fraction(t, i)
    assert path_counts(1) == (2, 1) and path_counts(2) == (3, 2)


def test_engine_agreement():
    for n in range(1, 65):
        assert path_closed_form(n).rational_value == avi(path(n))


def test_limit():
    tol = Fraction(1, 10**6)
    for n in range(40, 120):
        assert abs(path_closed_form(n).c_n - LIMIT_OFFSET) < tol


def test_error_term():
    r = verify_error_term(5)
    assert r.ok and r.details["order_c1_to_c5"] == [2, 4, 5, 3, 1]
    r = verify_error_term(200)
    assert r.ok and r.details["argmin"] == 2 and r.details["argmin_excluding_2"] == 4
    with pytest.raises(ValueError):
        verify_error_term(4)


def test_case_enumeration():
    assert len(enumerate_cases(3)) == 35
    assert len(enumerate_cases(4)) == 70
    assert all(sum(s.counts()) == s.k for k in (3, 4) for s in enumerate_cases(k))
    with pytest.raises(ValueError):
        enumerate_cases(5)


def test_worst_case():
    b = case_lower_bound(WORST_CASE)
    assert b.rho_interval == (Fraction(3, 5), Fraction(6, 7))
    assert b.lower_bound == B == (79 * SQRT5 - 165) / 70
    assert b.margin == 0


def test_all_leaf_case():
    assert case_lower_bound(CaseSpec(3, 3, 0, 0, 0, 0)).lower_bound > B


def test_endpoint_linearity():
    for k in (3, 4):
        for s in enumerate_cases(k):
            b = case_lower_bound(s)
            lo, hi = b.rho_interval
            assert Fraction(1, 2) <= lo <= hi < 1
            if lo == hi:
                assert b.bound_at_endpoints[0] == b.bound_at_endpoints[1]


def test_case_report():
    r = verify_theorem45_cases()
    assert r.ok and r.details["cases"] == 105
    zeros = [row for row in r.details["table"] if row["margin"] == 0]
    assert [row["case"] for row in zeros] == [(0, 1, 0, 0, 2)]
    rows = margin_table_rows()
    assert len(rows) == 105 and rows[0].split()[0] == "3"


def test_auxiliary():
    r = verify_auxiliary_inequalities()
    assert r.ok and len(r.details["scalar"]) == 7


def test_table1():
    for n, c in TABLE1.items():
        assert path_avi(n) - A * n == c
