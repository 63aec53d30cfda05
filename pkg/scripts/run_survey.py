#!/usr/bin/env python3
"""Run the biconditional survey and print a per-case summary.

Writes the JSON-lines records to --out (default survey.jsonl) and exits
non-zero if any record disagrees with the classification.
"""

import argparse
import json
import sys
import time
from collections import Counter

from xbgraphs.survey import SurveySpec, run_survey


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--n", type=int, nargs="+", default=[8, 12, 16, 20])
    ap.add_argument("--oracle-max-order", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="survey.jsonl")
    args = ap.parse_args()

    spec = SurveySpec(ms=args.m, ns=args.n, oracle_max_order=args.oracle_max_order, workers=args.workers)
    t0 = time.perf_counter()
    per_case: Counter = Counter()
    transitive: Counter = Counter()
    bad = []
    with open(args.out, "w") as fh:
        for rec in run_survey(spec):
            fh.write(json.dumps(rec) + "\n")
            per_case[rec["case"]] += 1
            transitive[rec["case"]] += bool(rec["oracle"] and rec["oracle"]["c_transitive"])
            if not rec["agree"]:
                bad.append(rec)
    print(f"{'case':<18}{'tuples':>8}{'C-transitive':>14}")
    for case in sorted(per_case):
        print(f"{case:<18}{per_case[case]:>8}{transitive[case]:>14}")
    print(f"{sum(per_case.values())} tuples in {time.perf_counter() - t0:.1f}s, {len(bad)} disagreements")
    for rec in bad:
        print("  disagreement:", {k: rec[k] for k in ("m", "n", "a", "b", "l", "case", "error")})
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
