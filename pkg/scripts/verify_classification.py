#!/usr/bin/env python3
"""Run every scan family and lemma check and write a JSON summary.

    python scripts/verify_classification.py --punctured 256 --full 1023 --shared 256 --out results/
"""

import argparse
import json
import time
from pathlib import Path

from samerep.cache import ScanCache
from samerep.scanner import scan, summarize
from samerep.theorems import check_lemma3, check_lemma4, check_lemma5, find_lemma7_witness, is_mersenne


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, round(time.perf_counter() - start, 3)


def lemma_violations(M_max, m7_max):
    return {
        "lemma3": [M for M in range(2, M_max + 1) if not check_lemma3(M)],
        "lemma4": [M for M in range(2, M_max + 1) if not check_lemma4(M)],
        "lemma5": [M for M in range(2, M_max + 1, 2) if not check_lemma5(M)],
        "lemma7": [m for m in range(1, m7_max + 1) if (find_lemma7_witness(m) is None) != is_mersenne(m)],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--punctured", type=int, default=64)
    parser.add_argument("--full", type=int, default=127)
    parser.add_argument("--shared", type=int, default=64)
    parser.add_argument("--lemma-max", type=int, default=65536)
    parser.add_argument("--witness-max", type=int, default=512)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--out", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for kind, m_max in (("punctured", args.punctured), ("full", args.full), ("shared", args.shared)):
        cache = ScanCache(args.out / f"{kind}.cache.jsonl")
        records, seconds = timed(scan, m_max, kind, jobs=args.jobs, cache=cache)
        with open(args.out / f"{kind}_{m_max}.jsonl", "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict(timing=False), sort_keys=True) + "\n")
        summary[kind] = {"max": m_max, "seconds": seconds, **summarize(records)}
        s = summary[kind]
        print(f"{kind:9s} m<={m_max:<5d} {s['instances']:7d} instances, "
              f"{len(s['solutions'])} solutions, {len(s['disagreements'])} disagreements ({seconds}s)")

    violations, seconds = timed(lemma_violations, args.lemma_max, args.witness_max)
    summary["lemmas"] = {"seconds": seconds, "violations": violations}
    for name, bad in violations.items():
        print(f"{name}: {'no violations' if not bad else 'violations at ' + str(bad[:10])}")

    with open(args.out / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
