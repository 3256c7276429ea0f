"""Closed form for the average independent-set size of paths, and the finite
case analysis behind the lower bound ``avi(T) >= a*n + b`` for non-path trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from . import engine, graph
from .quadfield import ONE, SQRT5, QuadNumber, as_rational, golden_power, quad
from .report import VERIFIED, VerificationReport, counterexample

# slope of avi(P_n)
A = (5 - SQRT5) / 10
# intercept for non-path trees
B = (79 * SQRT5 - 165) / 70
LIMIT_OFFSET = (3 - SQRT5) / 5
# lower bounds of c_n overall and over n != 2
C_MIN = 1 / SQRT5 - Fraction(1, 3)
C_MIN_NOT2 = 2 / SQRT5 - Fraction(3, 4)
PATH_UPPER = SQRT5 / 2 - Fraction(25, 26)

TABLE1 = {
    1: 1 / (2 * SQRT5),
    2: 1 / SQRT5 - Fraction(1, 3),
    3: 3 / (2 * SQRT5) - Fraction(1, 2),
    4: 2 / SQRT5 - Fraction(3, 4),
    5: SQRT5 / 2 - Fraction(25, 26),
}

MAX_CLOSED_FORM_N = 500


def path_counts(n: int) -> tuple[int, int]:
    """(I(P_n), T(P_n)) from the integer recurrences."""
    if n == 0:
        return 1, 0
    i_prev, t_prev = 1, 0  # P_0
    i_cur, t_cur = 2, 1  # P_1
    for _ in range(n - 1):
        i_prev, i_cur, t_prev, t_cur = i_cur, i_cur + i_prev, t_cur, t_cur + t_prev + i_prev
    return i_cur, t_cur


def path_avi(n: int) -> Fraction:
    i, t = path_counts(n)
    return Fraction(t, i)


def closed_form_value(n: int) -> QuadNumber:
    """a*n + (3-sqrt5)/5 - (n+2) / (sqrt5 * ((-phi^2)^(n+2) - 1)), exactly."""
    m = n + 2
    power = golden_power(2 * m) * (-1) ** m
    return A * n + LIMIT_OFFSET - (n + 2) / (SQRT5 * (power - 1))


@dataclass(frozen=True)
class PathFormulaValue:
    n: int
    closed_form: QuadNumber
    rational_value: Fraction
    c_n: QuadNumber


def path_closed_form(n: int) -> PathFormulaValue:
    if not 1 <= n <= MAX_CLOSED_FORM_N:
        raise ValueError(f"n must be in 1..{MAX_CLOSED_FORM_N}")
    cf = closed_form_value(n)
    value = as_rational(cf)
    expected = engine.avi(graph.path(n)) if n <= graph.MAX_VERTICES else path_avi(n)
    if value != expected:
        raise AssertionError(f"closed form {value} disagrees with {expected} at n={n}")
    return PathFormulaValue(n, cf, value, cf - A * n)


def c_value(n: int) -> QuadNumber:
    """c_n = avi(P_n) - a*n via the rational recurrence."""
    return path_avi(n) - A * n


def verify_error_term(max_n: int) -> VerificationReport:
    """Monotone, alternating error term and the two minima of c_n for n <= max_n."""
    if max_n < 5:
        raise ValueError("max_n must be at least 5")
    rng = (1, max_n)
    claim = "path-error-term"
    cs = {n: path_closed_form(n).c_n for n in range(1, max_n + 1)}
    dev = {n: c - LIMIT_OFFSET for n, c in cs.items()}
    for n in range(2, max_n):
        if not abs(dev[n + 1]) < abs(dev[n]):
            return counterexample(claim, rng, {"n": n, "reason": "error term not decreasing"})
    for n in range(1, max_n):
        if dev[n].sign() == 0 or dev[n].sign() == dev[n + 1].sign():
            return counterexample(claim, rng, {"n": n, "reason": "sign does not alternate"})
    for n, c in cs.items():
        if c < C_MIN or (c == C_MIN) != (n == 2):
            return counterexample(claim, rng, {"n": n, "c_n": c, "reason": "global minimum"})
        if n != 2 and (c < C_MIN_NOT2 or (c == C_MIN_NOT2) != (n == 4)):
            return counterexample(claim, rng, {"n": n, "c_n": c, "reason": "minimum over n != 2"})
    small = sorted(range(1, 6), key=lambda n: cs[n])
    table_ok = all(cs[n] == TABLE1[n] for n in TABLE1)
    if not table_ok:
        return counterexample(claim, rng, {"reason": "table mismatch", "c": [cs[n] for n in TABLE1]})
    return VerificationReport(
        claim, rng, VERIFIED, None,
        {"order_c1_to_c5": small, "argmin": min(cs, key=cs.get),
         "argmin_excluding_2": min((n for n in cs if n != 2), key=cs.get)},
    )


# finite case analysis for branching vertices of degree 3 and 4

@dataclass(frozen=True)
class CaseSpec:
    """Branch multiset at a vertex of degree ``k``.

    x1, x2: branches with one / two vertices; x3, x4: three vertices with the
    neighbour as centre / leaf; x5: four or more vertices.
    """

    k: int
    x1: int
    x2: int
    x3: int
    x4: int
    x5: int

    def counts(self) -> tuple[int, int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.x4, self.x5)


@dataclass(frozen=True)
class CaseBound:
    spec: CaseSpec
    rho_interval: tuple[Fraction, Fraction]
    bound_at_endpoints: tuple[QuadNumber, QuadNumber]
    lower_bound: QuadNumber
    margin: QuadNumber


def enumerate_cases(k: int) -> list[CaseSpec]:
    """All weak compositions of ``k`` into five labelled parts, lexicographic."""
    if k not in (3, 4):
        raise ValueError("only branch counts 3 and 4 are handled by case analysis")
    out = [CaseSpec(k, *xs) for xs in product(range(k + 1), repeat=5) if sum(xs) == k]
    assert len(out) == comb(k + 4, 4)
    return out


# per branch type: constant in avi(T_j) - a|T_j|, constant in avi(T_j - v_j) - a(|T_j|-1),
# and the quotient I(T_j - v_j)/I(T_j) as an interval
_TAIL = C_MIN_NOT2
_BRANCH = (
    (Fraction(1, 2) - A, quad(0), (Fraction(1, 2), Fraction(1, 2))),
    (Fraction(2, 3) - 2 * A, Fraction(1, 2) - A, (Fraction(2, 3), Fraction(2, 3))),
    (1 - 3 * A, 1 - 2 * A, (Fraction(4, 5), Fraction(4, 5))),
    (1 - 3 * A, Fraction(2, 3) - 2 * A, (Fraction(3, 5), Fraction(3, 5))),
    (_TAIL, _TAIL, (Fraction(1, 2), Fraction(1))),
)


def case_lower_bound(spec: CaseSpec) -> CaseBound:
    """Lower bound on ``avi(T) - a|T|`` in one branch configuration.

    The representation ``rho*sum avi(T_j) + (1-rho)*(1 + sum avi(T_j - v_j))`` is
    linear in rho, so it is minimised at an endpoint of the feasible rho interval.
    """
    if sum(spec.counts()) != spec.k or min(spec.counts()) < 0:
        raise ValueError(f"invalid case {spec}")
    c_whole = quad(0)
    c_minus = quad(0)
    q_lo = q_hi = Fraction(1)
    for x, (cw, cm, (lo, hi)) in zip(spec.counts(), _BRANCH):
        c_whole = c_whole + x * QuadNumber.coerce(cw)
        c_minus = c_minus + x * QuadNumber.coerce(cm)
        q_lo *= lo**x
        q_hi *= hi**x
    rho_lo, rho_hi = 1 / (1 + q_hi), 1 / (1 + q_lo)

    def bound(rho: Fraction) -> QuadNumber:
        return rho * c_whole + (1 - rho) * (1 - A * spec.k + c_minus) - A

    ends = (bound(rho_lo), bound(rho_hi))
    low = min(ends)
    return CaseBound(spec, (rho_lo, rho_hi), ends, low, low - B)


WORST_CASE = CaseSpec(3, 0, 1, 0, 0, 2)


def verify_theorem45_cases() -> VerificationReport:
    claim = "tree-lower-bound-cases"
    bounds = [case_lower_bound(s) for k in (3, 4) for s in enumerate_cases(k)]
    table = [
        {"case": b.spec.counts(), "k": b.spec.k, "rho_lo": b.rho_interval[0],
         "rho_hi": b.rho_interval[1], "margin": b.margin}
        for b in bounds
    ]
    details = {"cases": len(bounds), "table": table}
    for b in bounds:
        if b.margin < 0:
            return counterexample(claim, "k=3,4", {"case": b.spec.counts(), "k": b.spec.k,
                                                   "margin": b.margin}, **details)
    zeros = [b.spec for b in bounds if b.margin == 0]
    if zeros != [WORST_CASE]:
        return counterexample(claim, "k=3,4", {"zero_margin_cases": [z.counts() for z in zeros]},
                              **details)
    return VerificationReport(claim, "k=3,4", VERIFIED, None, details)


def margin_table_rows() -> list[str]:
    """One line per case: ``k x1 x2 x3 x4 x5 rho_lo rho_hi margin``."""
    from .quadfield import format_rational

    rows = []
    for k in (3, 4):
        for s in enumerate_cases(k):
            b = case_lower_bound(s)
            lo, hi = b.rho_interval
            rows.append(" ".join([str(k), *map(str, s.counts()), format_rational(lo),
                                  format_rational(hi), str(b.margin)]))
    return rows


def auxiliary_inequalities() -> dict[str, tuple[QuadNumber, QuadNumber]]:
    """Named scalar inequalities ``lhs < rhs`` used around the case analysis."""
    return {
        "error-ratio 4(sqrt5-1)/9 < 1": (4 * (SQRT5 - 1) / 9, ONE),
        "0 < 2/sqrt5 - 3/4 - a/2": (quad(0), 2 / SQRT5 - Fraction(3, 4) - A / 2),
        "3a < 5/6": (3 * A, quad(Fraction(5, 6))),
        "2a < 7/12": (2 * A, quad(Fraction(7, 12))),
        "a < 1/3": (A, quad(Fraction(1, 3))),
        "b < 4(1/sqrt5 - 1/3) - a": (B, 4 * (1 / SQRT5 - Fraction(1, 3)) - A),
        "sqrt5/2 - 25/26 < b": (PATH_UPPER, B),
    }


def error_ratio_bound() -> QuadNumber:
    """phi^-2 * 4/3 * (phi^-6 + 1)/(1 - phi^-8), which simplifies to 4(sqrt5-1)/9."""
    return golden_power(-2) * Fraction(4, 3) * (golden_power(-6) + 1) / (1 - golden_power(-8))


def verify_auxiliary_inequalities(max_n: int = 200) -> VerificationReport:
    claim = "auxiliary-inequalities"
    rng = (4, max_n)
    checked = {}
    for name, (lhs, rhs) in auxiliary_inequalities().items():
        if not lhs < rhs:
            return counterexample(claim, rng, {"inequality": name, "lhs": lhs, "rhs": rhs})
        checked[name] = True
    if error_ratio_bound() != 4 * (SQRT5 - 1) / 9:
        return counterexample(claim, rng, {"inequality": "error-ratio simplification"})
    # the worst case written out: a|T| + 13/(2 sqrt5) - 5/2 + rho(1/6 - 1/sqrt5) at rho = 6/7
    worst = 13 / (2 * SQRT5) - Fraction(5, 2) + Fraction(6, 7) * (Fraction(1, 6) - 1 / SQRT5)
    if worst != B:
        return counterexample(claim, rng, {"inequality": "worst-case identity", "value": worst})
    for n in range(4, max_n + 1):
        if path_closed_form(n).c_n > PATH_UPPER:
            return counterexample(claim, rng, {"inequality": "path upper bound", "n": n})
    return VerificationReport(claim, rng, VERIFIED, None, {"scalar": checked})
