"""Run every exhaustive/exact check and write one JSON report per claim.

Usage:
    python scripts/run_all_checks.py [--out reports/] [--full] [--jobs K]

--full extends the labelled-graph checks to n = 7 (about 2M graphs each).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from avgindep import lab, paths


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    labelled = 7 if args.full else 6
    jobs = [
        ("bounds", lambda: lab.verify_range(lab.verify_bounds, labelled, jobs=args.jobs)),
        ("vertex-removal", lambda: lab.verify_range(lab.verify_vertex_removal, labelled, jobs=args.jobs)),
        ("star-max", lambda: lab.verify_range(lab.verify_star_max, 16)),
        ("path-min", lambda: lab.verify_range(lab.verify_path_min, 16)),
        ("quotient", lambda: lab.verify_range(lab.verify_quotient, 14)),
        ("path-formula", lambda: paths.verify_error_term(500)),
        ("cases", paths.verify_theorem45_cases),
        ("aux", lambda: paths.verify_auxiliary_inequalities(500)),
    ]
    for name, job in jobs:
        t0 = time.perf_counter()
        report = job()
        (args.out / f"{name}.json").write_text(report.to_json())
        print(f"{name:15s} {report.status:15s} {time.perf_counter() - t0:7.1f}s")


if __name__ == "__main__":
    main()
