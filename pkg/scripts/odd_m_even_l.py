#!/usr/bin/env python3
"""Automorphism data of the odd-m, even-l graphs X_b(m, n, 1, 4, n/2 + 2m - 2).

For each odd m and each admissible n (n/4 odd) the point-stabilizer order
should be 2 exactly when n = 4m.
"""

import argparse

from xbgraphs.analysis import eta_exception_check


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--max-n", type=int, default=60)
    args = ap.parse_args()
    print(f"{'tuple':<22}{'|Aut|':>7}{'stab':>6}{'C-inv':>7}{'n=4m':>6}")
    for m in args.m:
        for n in range(12, args.max_n + 1, 8):  # n/4 odd
            try:
                rep = eta_exception_check(m, n)
            except ValueError:
                continue
            flag = "*" if (rep.stabilizer_order == 2) != rep.branch_fires else ""
            print(
                f"{str(rep.params.as_tuple()):<22}{rep.aut_order:>7}{rep.stabilizer_order:>6}"
                f"{str(rep.c_invariant):>7}{str(rep.branch_fires):>6} {flag}"
            )


if __name__ == "__main__":
    main()
