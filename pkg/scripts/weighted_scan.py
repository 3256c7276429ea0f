"""Where does the path stop minimising the hard-core mean size?

Scans fugacities alpha over a grid and n = 2..12, printing one row per alpha
with the orders n at which some other tree beats the path.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from avgindep.graph import format_edge_list
from avgindep.lab import weighted_extremal_scan

DEFAULT_ALPHAS = ["1/2", "1", "2", "3", "4", "5", "6", "8", "10", "20", "100"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--alpha", nargs="*", default=DEFAULT_ALPHAS)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--show-witness", action="store_true")
    args = ap.parse_args()

    for text in args.alpha:
        alpha = Fraction(text)
        losing = []
        for n in range(2, args.max_n + 1):
            r = weighted_extremal_scan(n, alpha)
            if not r.ok:
                losing.append(n)
                if args.show_witness:
                    edges = format_edge_list(r.witness["tree"]).replace("\n", " ")
                    print(f"  alpha={alpha} n={n}: {edges}")
        print(f"alpha={str(alpha):>6}  non-path minimiser at n = {losing or '-'}")


if __name__ == "__main__":
    main()
