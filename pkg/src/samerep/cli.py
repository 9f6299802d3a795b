"""Command-line front end.

Exit codes: 0 success / solution found, 1 infeasible or a lemma violation,
2 usage error, 3 capacity or budget error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from importlib import metadata
from pathlib import Path
from typing import Optional, Sequence

from .cache import ScanCache
from .intset import CapacityError, DEFAULT_UNIVERSE_CAP, parse_set, universe_cap
from .repfn import rep_fn_table
from .scanner import KINDS, BudgetError, default_jobs, scan, summarize
from .solver import EnumerationGuardError, Infeasible, PositionProfile, enumerate_all, solve_forced
from .theorems import (
    check_lemma3,
    check_lemma4,
    check_lemma5,
    construct_lemma6,
    construct_problem2,
    construct_theorem1,
    find_lemma7_witness,
    is_mersenne,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass
class RunConfig:
    universe_cap: int = DEFAULT_UNIVERSE_CAP
    jobs: int = 1
    output_format: str = "table"
    cache_path: Optional[Path] = None

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="samerep",
        description="Representation functions and equal-representation partitions of integer intervals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    parser.add_argument("--universe-cap", type=int, default=DEFAULT_UNIVERSE_CAP,
                        help="largest integer any set may contain (default 2^20)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repfn", help="print R_S(n) for a set")
    p.add_argument("--set", dest="set_literal", required=True,
                   help='set literal: "0,3,6,7", "" or a 0x bitmask')
    p.add_argument("--upto", type=int, help="largest n to print (default 2*max(S))")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    p = sub.add_parser(
        "solve",
        help="find the partition of a constrained interval",
        description="Decide whether [0, m] minus the removed points splits into C (holding 0) and D "
                    "with R_C = R_D, where shared points lie in both classes. A split with empty D "
                    "is reported as infeasible. Exit 0 if a partition exists, 1 if not.",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--removed", type=_int_list, default=[], help="comma-separated removed points")
    p.add_argument("--shared", type=_int_list, default=[], help="comma-separated shared points")
    p.add_argument("--enumerate", action="store_true",
                   help="cross-check against exhaustive enumeration")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="classify a whole family of instances")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--max", dest="m_max", type=int, required=True)
    p.add_argument("--jobs", type=int, help="worker processes (default $REPFN_JOBS or 1)")
    p.add_argument("--jsonl", type=Path, help="write one JSON record per instance")
    p.add_argument("--cache", type=Path, help="JSONL cache for resumable scans")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from records")
    p.add_argument("--format", choices=("table", "json", "csv", "jsonl"), default="table")

    p = sub.add_parser("construct", help="print a closed-form construction")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem1", type=int, metavar="L")
    g.add_argument("--lemma6", type=int, metavar="L")
    g.add_argument("--problem2", type=int, metavar="L")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lemmas", help="check a digit lemma or the witness lemma over a range")
    p.add_argument("--check", choices=("3", "4", "5", "7"), required=True)
    p.add_argument("--max", dest="m_max", type=int, required=True)
    return parser


def _cmd_repfn(args, out) -> int:
    s = parse_set(args.set_literal)
    top = s.max() if s else 0
    upto = 2 * top if args.upto is None else args.upto
    if upto < 0:
        raise UsageError("--upto must be nonnegative")
    table = rep_fn_table(s, max(top, (upto + 1) // 2))
    rows = [(n, table[n]) for n in range(upto + 1)]
    if args.json:
        json.dump([{"n": n, "R": c} for n, c in rows], out)
        out.write("\n")
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "R"])
        w.writerows(rows)
    else:
        for n, c in rows:
            out.write(f"{n}\t{c}\n")
    return EXIT_OK


def _cmd_solve(args, out) -> int:
    try:
        profile = PositionProfile.build(args.m, args.removed, args.shared)
    except CapacityError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {"m": args.m, "removed": list(profile.removed), "shared": list(profile.shared)}
    try:
        sol = solve_forced(profile)
    except Infeasible as exc:
        sol, failure = None, exc
    else:
        failure = None
    if args.enumerate:
        found = enumerate_all(profile)
        agrees = (len(found) == 0) if sol is None else (
            len(found) == 1 and (found[0].C, found[0].D) == (sol.C, sol.D))
        if not agrees:
            out.write("enumeration disagrees with forcing\n")
            return EXIT_NEGATIVE
    if sol is None:
        result.update(C=None, D=None, status="infeasible")
    else:
        result.update(C=sol.C.to_literal(), D=sol.D.to_literal(), status="solution")
    if args.json:
        out.write(json.dumps(result, sort_keys=True) + "\n")
    elif sol is None:
        out.write(f"infeasible: {failure}\n")
    else:
        out.write(f"C = {result['C']}\nD = {result['D']}\n")
    return EXIT_OK if sol is not None else EXIT_NEGATIVE


def _cmd_scan(args, out, config: RunConfig) -> int:
    if config.universe_cap < 2 * args.m_max:
        raise CapacityError(f"universe cap {config.universe_cap} is below 2*max = {2 * args.m_max}")
    cache = ScanCache(config.cache_path) if config.cache_path is not None else None
    records = scan(args.m_max, args.kind, jobs=config.jobs, cache=cache)
    timing = not args.no_timing
    dicts = [rec.to_dict(timing=timing) for rec in records]
    if args.jsonl is not None:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            for d in dicts:
                fh.write(json.dumps(d, sort_keys=True) + "\n")
    summary = summarize(records)
    fmt = config.output_format
    if fmt == "jsonl":
        for d in dicts:
            out.write(json.dumps(d, sort_keys=True) + "\n")
    elif fmt == "json":
        json.dump({"kind": args.kind, "max": args.m_max, "summary": summary, "records": dicts},
                  out, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        if dicts:
            w = csv.DictWriter(out, fieldnames=list(dicts[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(dicts)
    else:
        out.write(f"{args.kind} scan up to m={args.m_max}: {summary['instances']} instances\n")
        for rec in records:
            if rec.status == "solution":
                flag = " [anomaly]" if rec.anomaly else ""
                where = f"m={rec.m}" if rec.r is None else f"m={rec.m} r={rec.r}"
                out.write(f"  solution {where}: C={rec.C} D={rec.D}{flag}\n")
        out.write(f"  disagreements with theorem: {len(summary['disagreements'])}\n")
        for m, r in summary["disagreements"]:
            out.write(f"    m={m} r={r}\n")
    return EXIT_OK if not summary["disagreements"] else EXIT_NEGATIVE


def _cmd_construct(args, out) -> int:
    if args.theorem1 is not None:
        name, con = "theorem1", construct_theorem1(args.theorem1)
    elif args.lemma6 is not None:
        name, con = "lemma6", construct_lemma6(args.lemma6)
    else:
        name, con = "problem2", construct_problem2(args.problem2)
    d = {"construction": name, "m": con.m, "r": con.r, "C": con.C.to_literal(), "D": con.D.to_literal()}
    if args.json:
        out.write(json.dumps(d, sort_keys=True) + "\n")
    else:
        head = f"m = {con.m}" + ("" if con.r is None else f", r = {con.r}")
        out.write(f"{head}\nC = {d['C']}\nD = {d['D']}\n")
    return EXIT_OK


def _cmd_lemmas(args, out) -> int:
    if args.m_max < 1:
        raise UsageError("--max must be positive")
    if args.check == "7":
        bad = [m for m in range(1, args.m_max + 1)
               if (find_lemma7_witness(m) is None) != is_mersenne(m)]
        checked = args.m_max
    else:
        check = {"3": check_lemma3, "4": check_lemma4, "5": check_lemma5}[args.check]
        step = 2 if args.check == "5" else 1
        values = range(2, args.m_max + 1, step)
        bad = [M for M in values if not check(M)]
        checked = len(values)
    if bad:
        shown = ", ".join(map(str, bad[:20]))
        out.write(f"lemma {args.check}: {len(bad)} violation(s) among {checked} values: {shown}\n")
        return EXIT_NEGATIVE
    out.write(f"lemma {args.check}: holds for all {checked} values up to {args.m_max}\n")
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = RunConfig(
            universe_cap=args.universe_cap,
            jobs=(getattr(args, "jobs", None) or default_jobs()),
            output_format=getattr(args, "format", "table"),
            cache_path=getattr(args, "cache", None),
        )
        with universe_cap(config.universe_cap):
            if args.command == "repfn":
                return _cmd_repfn(args, out)
            if args.command == "solve":
                return _cmd_solve(args, out)
            if args.command == "scan":
                return _cmd_scan(args, out, config)
            if args.command == "construct":
                return _cmd_construct(args, out)
            return _cmd_lemmas(args, out)
    except (CapacityError, BudgetError, EnumerationGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
