#!/usr/bin/env python3
"""Search intervals with two removed points for equal-representation partitions.

No closed-form answer is known for more than one removed point; this lists
every feasible (m, r1, r2) up to --max so the pattern can be inspected.

    python scripts/explore_removed_pairs.py --max 64 --jsonl pairs.jsonl
"""

import argparse
import json
import time

from samerep.solver import Infeasible, PositionProfile, solve_forced


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=48)
    parser.add_argument("--jsonl", help="write one record per feasible instance")
    args = parser.parse_args()

    start = time.perf_counter()
    found = []
    checked = 0
    for m in range(3, args.max + 1):
        for r1 in range(1, m + 1):
            for r2 in range(r1 + 1, m + 1):
                checked += 1
                try:
                    sol = solve_forced(PositionProfile.build(m, removed=[r1, r2]))
                except Infeasible:
                    continue
                found.append({"m": m, "removed": [r1, r2], "C": sol.C.to_literal(), "D": sol.D.to_literal()})

    for rec in found:
        print(f"m={rec['m']:4d} removed={rec['removed']}  C={rec['C']}  D={rec['D']}")
    print(f"{len(found)} feasible among {checked} instances ({time.perf_counter() - start:.1f}s)")
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for rec in found:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
