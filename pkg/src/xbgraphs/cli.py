"""Command-line front end: ``xbgraphs construct|verify|survey|report``.

Exit codes: 0 success, 2 usage or parameter error, 3 a check contradicted the
classification (a finding), 4 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Sequence

import tomli

from .aut_search import ENV_LIMIT, LimitExceeded
from .constructions import parse_tuple
from .graph_core import export
from .perm_group import BoundExceeded
from .survey import FAMILIES, SurveySpec, build_family, run_survey, verify

EXIT_OK, EXIT_USAGE, EXIT_FINDING, EXIT_LIMIT = 0, 2, 3, 4

log = logging.getLogger("xbgraphs")


def _int_range(text: str) -> list[int]:
    """``3-6``, ``3,5,7`` or a mix like ``3-5,8``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _cmd_construct(args: argparse.Namespace) -> int:
    g = build_family(args.family, parse_tuple(args.params))
    data = export(g, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
        log.info("wrote %d vertices to %s", g.order, args.out)
    else:
        sys.stdout.buffer.write(data)
        if not data.endswith(b"\n"):
            sys.stdout.buffer.write(b"\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    rep = verify(
        args.family,
        parse_tuple(args.params),
        oracle=args.oracle,
        seed=args.seed,
        limit=args.limit,
        orbits=args.orbits,
    )
    print(rep.to_json())
    return EXIT_FINDING if rep.findings else EXIT_OK


def _cmd_survey(args: argparse.Namespace) -> int:
    spec = SurveySpec(
        ms=_int_range(args.m),
        ns=_int_range(args.n),
        cases=args.case or None,
        oracle=args.oracle,
        oracle_max_order=args.oracle_max_order,
        budget=args.budget,
        workers=args.workers,
    )
    out = open(args.out, "w") if args.out else sys.stdout
    bad = errors = total = 0
    try:
        for rec in run_survey(spec):
            total += 1
            bad += rec["agree"] is False
            errors += rec["error"] is not None
            out.write(json.dumps(rec) + "\n")
    finally:
        if args.out:
            out.close()
    log.info("%d tuples, %d disagreements, %d errors", total, bad, errors)
    return EXIT_FINDING if bad else EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    cases: Counter = Counter()
    vt: Counter = Counter()
    bad, errors = [], 0
    with open(args.input) as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            cases[rec["case"]] += 1
            vt[rec["case"]] += bool(rec.get("formula_transitive"))
            errors += rec.get("error") is not None
            if rec.get("agree") is False:
                bad.append(rec)
    summary = {
        "tuples": sum(cases.values()),
        "by_case": dict(sorted(cases.items())),
        "formula_transitive_by_case": dict(sorted(vt.items())),
        "disagreements": [[r[k] for k in "mnabl"] for r in bad],
        "errors": errors,
    }
    print(json.dumps(summary, indent=2))
    return EXIT_FINDING if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="xbgraphs", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="TOML file whose keys mirror the flags")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    c = sub.add_parser("construct", parents=[common], help="build a graph and export it")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("params", help="comma-separated integers, e.g. 5,12,1,8,7")
    c.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="run the check battery on one graph")
    v.add_argument("family", choices=FAMILIES)
    v.add_argument("params")
    v.add_argument("--oracle", action="store_true", help="also compute the full automorphism group")
    v.add_argument("--orbits", action="store_true", help="include the edge-orbit table (needs --oracle)")
    v.add_argument("--seed", type=int, default=0, help="seed of the relabeling consistency check")
    v.add_argument("--limit", type=int, default=None, help=f"oracle vertex limit (default ${ENV_LIMIT} or 512)")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("survey", parents=[common], help="run the biconditional survey, one JSON line per tuple")
    s.add_argument("--m", default="3-6", help="ring counts, e.g. 3-6 or 3,5")
    s.add_argument("--n", default="8,12,16,20", help="ring lengths (multiples of 4)")
    s.add_argument("--case", action="append", help="keep only this theorem case (repeatable)")
    s.add_argument("--no-oracle", dest="oracle", action="store_false")
    s.add_argument("--oracle-max-order", type=int, default=200, help="oracle only when mn is at most this")
    s.add_argument("--budget", type=int, default=100_000, help="maximum number of tuples")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_survey)

    r = sub.add_parser("report", parents=[common], help="summarize a survey JSON-lines file")
    r.add_argument("input")
    r.set_defaults(func=_cmd_report)
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    pre, _ = parser.parse_known_args(argv)
    if not pre.config:
        return parser.parse_args(argv)
    with open(pre.config, "rb") as fh:
        cfg = tomli.load(fh)
    flat = {k.replace("-", "_"): v for k, v in cfg.items() if not isinstance(v, dict)}
    flat.update({k.replace("-", "_"): v for k, v in cfg.get(pre.command, {}).items()})
    for key in ("m", "n"):
        if isinstance(flat.get(key), list):
            flat[key] = ",".join(map(str, flat[key]))
    if isinstance(flat.get("case"), str):
        flat["case"] = [flat["case"]]
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    subparsers.choices[pre.command].set_defaults(**flat)
    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    except (OSError, tomli.TOMLDecodeError) as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LimitExceeded, BoundExceeded) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
