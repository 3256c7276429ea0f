"""Command-line front end.

Exit status: 0 verified / success, 1 counterexample found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import engine, lab, paths
from .graph import GraphError, format_edge_list, from_spec
from .quadfield import decimal_string, format_rational, parse_rational
from .report import VerificationReport, exact
from .trees import count_trees, enumerate_trees

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

# claim -> (check, smallest and largest admissible max-n)
_RANGE_CHECKS = {
    "bounds": (lab.verify_bounds, 1, lab.MAX_LABELLED),
    "vertex-removal": (lab.verify_vertex_removal, 1, lab.MAX_LABELLED),
    "star-max": (lab.verify_star_max, 1, 16),
    "path-min": (lab.verify_path_min, 1, 16),
    "quotient": (lab.verify_quotient, 1, 14),
}


class UsageError(Exception):
    pass


def _styled(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _alpha(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    if value <= 0:
        raise UsageError(f"alpha must be positive, got {text}")
    return value


def _emit(args: argparse.Namespace, human: str, structured: Any) -> None:
    if args.json:
        print(json.dumps(exact(structured), indent=2))
    else:
        print(human)


def _emit_report(args: argparse.Namespace, report: VerificationReport, lines: list[str]) -> int:
    if args.json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)
        print(f"{report.claim}: " + _styled(report.status, report.ok))
        if not report.ok:
            print(json.dumps(exact(report.witness), indent=2))
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


# subcommands

def cmd_poly(args: argparse.Namespace) -> int:
    g = from_spec(args.graph)
    p = engine.indep_poly(g)
    _emit(args, " ".join(map(str, p.coeffs)),
          {"coeffs": list(p.coeffs), "count": p.count, "total": p.total,
           "avg": Fraction(p.total, p.count)})
    return EXIT_OK


def cmd_avg(args: argparse.Namespace) -> int:
    g = from_spec(args.graph)
    if args.alpha is None:
        s = engine.summary(g)
        _emit(args, format_rational(s.avg), {"count": s.count, "total": s.total, "avg": s.avg})
    else:
        alpha = _alpha(args.alpha)
        z, t, mean = engine.weighted_summary(g, alpha)
        _emit(args, format_rational(mean),
              {"alpha": alpha, "weighted_count": z, "weighted_total": t, "avg": mean})
    return EXIT_OK


def cmd_vertex_scan(args: argparse.Namespace) -> int:
    g = from_spec(args.graph)
    before = engine.avi(g)
    rows = lab.vertex_scan(g)
    human = [f"avi(G) = {format_rational(before)}"]
    human += [f"{v}\t{format_rational(after)}\t{d}" for v, after, d in rows]
    _emit(args, "\n".join(human),
          {"avi": before,
           "rows": [{"vertex": v, "avi_after": a, "direction": d} for v, a, d in rows]})
    return EXIT_OK


def cmd_edge_scan(args: argparse.Namespace) -> int:
    g = from_spec(args.graph)
    rows = lab.edge_scan(g)
    human = [f"{u}-{v}\t{format_rational(b)}\t{format_rational(a)}\t{d}"
             for (u, v), b, a, d in rows]
    _emit(args, "\n".join(human),
          {"rows": [{"edge": list(e), "avi_before": b, "avi_after": a, "direction": d}
                    for e, b, a, d in rows]})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    what = args.what
    if what in _RANGE_CHECKS:
        check, lo, hi = _RANGE_CHECKS[what]
        if args.max_n is None:
            raise UsageError(f"verify {what} requires --max-n")
        if not lo <= args.max_n <= hi:
            raise UsageError(f"--max-n for {what} must be in {lo}..{hi}")
        report = lab.verify_range(check, args.max_n, jobs=args.jobs)
        lines = []
        for sub in report.details["per_n"]:
            extra = ", ".join(f"{k}={v}" for k, v in sub["details"].items())
            lines.append(f"n={sub['range'][0]}: {sub['status']} ({extra})")
        return _emit_report(args, report, lines)
    if what == "cases":
        report = paths.verify_theorem45_cases()
        lines = ["k x1 x2 x3 x4 x5 rho_lo rho_hi margin", *paths.margin_table_rows()]
        return _emit_report(args, report, lines)
    if what == "path-formula":
        max_n = 200 if args.max_n is None else args.max_n
        if not 5 <= max_n <= paths.MAX_CLOSED_FORM_N:
            raise UsageError(f"--max-n for path-formula must be in 5..{paths.MAX_CLOSED_FORM_N}")
        report = paths.verify_error_term(max_n)
        return _emit_report(args, report, [f"closed form exact for n=1..{max_n}"])
    if what == "aux":
        report = paths.verify_auxiliary_inequalities()
        lines = [f"{name}: ok" for name in report.details.get("scalar", {})]
        return _emit_report(args, report, lines)
    raise UsageError(f"unknown claim {what!r}")


def cmd_ctable(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= paths.MAX_CLOSED_FORM_N:
        raise UsageError(f"--max-n must be in 1..{paths.MAX_CLOSED_FORM_N}")
    rows = [paths.path_closed_form(n) for n in range(1, args.max_n + 1)]
    human = [f"{r.n}\t{format_rational(r.rational_value)}\t{r.c_n}\t{decimal_string(r.c_n, 10)}"
             for r in rows]
    _emit(args, "n\tavi(P_n)\tc_n\tapprox\n" + "\n".join(human),
          {"rows": [{"n": r.n, "avi": r.rational_value, "c_n": r.c_n,
                     "c_n_decimal": decimal_string(r.c_n, 30)} for r in rows]})
    return EXIT_OK


def cmd_trees(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= 18:
        raise UsageError("--n must be in 1..18")
    if args.count_only:
        c = count_trees(args.n)
        _emit(args, str(c), {"n": args.n, "count": c})
        return EXIT_OK
    trees = list(enumerate_trees(args.n))
    if args.json:
        print(json.dumps(exact({"n": args.n, "trees": trees}), indent=2))
    else:
        for t in trees:
            print(" ".join(f"{u}-{v}" for u, v in t.edges()))
    return EXIT_OK


def cmd_weighted_scan(args: argparse.Namespace) -> int:
    if not 2 <= args.n <= 12:
        raise UsageError("--n must be in 2..12")
    report = lab.weighted_extremal_scan(args.n, _alpha(args.alpha))
    if args.json:
        print(report.to_json())
    else:
        d = report.details
        print(f"alpha={format_rational(d['alpha'])} n={args.n}: "
              f"path {format_rational(d['avi_alpha_path'])}, "
              f"minimum {format_rational(d['min_avi_alpha'])}")
        if report.ok:
            print("path is a minimiser")
        else:
            print("non-path minimiser: " + format_edge_list(report.witness["tree"]).replace("\n", "; "))
    # exploratory: no claim to refute
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="avgindep", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="structured output")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for labelled enumerations")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in [
        ("poly", cmd_poly, "independence polynomial coefficients"),
        ("avg", cmd_avg, "average independent-set size"),
        ("vertex-scan", cmd_vertex_scan, "avi after each single-vertex removal"),
        ("edge-scan", cmd_edge_scan, "avi after each single-edge removal"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", required=True, metavar="SPEC",
                       help="path:N, star:N, complete:N, empty:N or file:PATH")
        if name == "avg":
            p.add_argument("--alpha", metavar="P/Q", help="fugacity for the weighted average")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run an exhaustive or exact check")
    p.add_argument("what", choices=[*_RANGE_CHECKS, "cases", "path-formula", "aux"])
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ctable", help="c_n = avi(P_n) - a n")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_ctable)

    p = sub.add_parser("trees", help="free trees on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("weighted-scan", help="is the path minimal at fugacity alpha?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, metavar="P/Q")
    p.set_defaults(func=cmd_weighted_scan)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.jobs < 1:
        print("avgindep: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, ZeroDivisionError) as exc:
        print(f"avgindep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
