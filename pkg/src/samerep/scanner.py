"""Grid scans that classify every small instance against the known answers.

Three profile families are scanned:

* ``punctured``: ``[0, m]`` minus one point ``r`` (``0 < r < m``). Known answer:
  a partition exists iff ``m = 2^l``, ``r = 2^(l-1)`` with ``l >= 2``. The
  instance ``(2, 1)`` falls outside that statement but the forcing solver
  finds ``C = {0}, D = {2}``; it is flagged ``anomaly`` instead of being
  counted as a disagreement.
* ``full``: the whole interval ``[0, m]``. Known answer: ``m = 2^l - 1``.
* ``shared``: ``[0, m]`` with one point ``r`` in both classes. Known answer:
  ``r = 2^(2l) - 1``, ``m = 2^(2l+1) - 2``.

Each ``(m, r)`` instance is an independent work unit; results are sorted on
``(m, r)`` before they are returned, so the report does not depend on the
worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .intset import get_universe_cap, set_universe_cap
from .solver import Infeasible, PositionProfile, solve_forced
from .theorems import is_mersenne

KINDS = ("punctured", "full", "shared")

SCAN_BUDGET = {"punctured": 1024, "shared": 1024, "full": 4096}

TIMING_FIELDS = ("solve_micros",)


class BudgetError(ValueError):
    """Requested scan exceeds the configured size guard."""


@dataclass
class ScanRecord:
    m: int
    profile_kind: str
    r: Optional[int]
    status: str
    matches_theorem: bool
    anomaly: bool = False
    C: Optional[str] = None
    D: Optional[str] = None
    failed_at: Optional[int] = None
    solve_micros: int = field(default=0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            for key in TIMING_FIELDS:
                d.pop(key)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ScanRecord":
        return cls(**{k: d[k] for k in cls.__dataclass_fields__ if k in d})

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.m, -1 if self.r is None else self.r)


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def expected_solution(kind: str, m: int, r: Optional[int]) -> bool:
    """Whether the known theorem predicts a partition for this instance."""
    if kind == "punctured":
        return m >= 4 and _is_power_of_two(m) and r == m // 2
    if kind == "full":
        return is_mersenne(m)
    if kind == "shared":
        # r + 1 = 4^l with l >= 1, m = 2r
        return r is not None and r >= 3 and _is_power_of_two(r + 1) and (r + 1).bit_length() % 2 == 1 and m == 2 * r
    raise ValueError(f"unknown profile kind {kind!r}")


def make_profile(kind: str, m: int, r: Optional[int]) -> PositionProfile:
    if kind == "punctured":
        return PositionProfile.punctured(m, r)
    if kind == "full":
        return PositionProfile.full(m)
    if kind == "shared":
        return PositionProfile.shared_point(m, r)
    raise ValueError(f"unknown profile kind {kind!r}")


def instances(kind: str, m_max: int) -> list[tuple[int, Optional[int]]]:
    """All ``(m, r)`` work units of a family, in report order."""
    if kind == "punctured":
        return [(m, r) for m in range(2, m_max + 1) for r in range(1, m)]
    if kind == "full":
        return [(m, None) for m in range(1, m_max + 1)]
    if kind == "shared":
        return [(m, r) for m in range(2, m_max + 1) for r in range(1, m + 1)]
    raise ValueError(f"unknown profile kind {kind!r}")


def solve_instance(kind: str, m: int, r: Optional[int]) -> ScanRecord:
    profile = make_profile(kind, m, r)
    start = time.perf_counter_ns()
    try:
        sol = solve_forced(profile)
    except Infeasible as exc:
        sol, failed_at = None, exc.index
    else:
        failed_at = None
    micros = (time.perf_counter_ns() - start) // 1000
    found = sol is not None
    return ScanRecord(
        m=m,
        profile_kind=kind,
        r=r,
        status="solution" if found else "infeasible",
        matches_theorem=found == expected_solution(kind, m, r),
        anomaly=kind == "punctured" and (m, r) == (2, 1),
        C=sol.C.to_literal() if found else None,
        D=sol.D.to_literal() if found else None,
        failed_at=failed_at,
        solve_micros=micros,
    )


def _solve_unit(args: tuple) -> ScanRecord:
    return solve_instance(*args)


def _init_worker(cap: int) -> None:
    set_universe_cap(cap)


def default_jobs() -> int:
    env = os.environ.get("REPFN_JOBS")
    if env:
        jobs = int(env)
        if jobs < 1:
            raise ValueError(f"REPFN_JOBS must be >= 1, got {env!r}")
        return jobs
    return 1


def scan(m_max: int, kind: str, jobs: Optional[int] = None, cache=None) -> list[ScanRecord]:
    """Classify every instance of ``kind`` up to ``m_max``.

    ``cache`` is an optional :class:`samerep.cache.ScanCache`; instances found
    there are not re-solved and fresh results are appended to it.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown profile kind {kind!r}; expected one of {KINDS}")
    if m_max > SCAN_BUDGET[kind]:
        raise BudgetError(f"m_max={m_max} exceeds the {kind} scan budget {SCAN_BUDGET[kind]}")
    if jobs is None:
        jobs = default_jobs()
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    units = instances(kind, m_max)
    records: list[ScanRecord] = []
    todo = []
    for m, r in units:
        hit = cache.get(kind, make_profile(kind, m, r)) if cache is not None else None
        if hit is not None:
            records.append(hit)
        else:
            todo.append((kind, m, r))

    if jobs == 1 or len(todo) < 2:
        fresh: Iterable[ScanRecord] = map(_solve_unit, todo)
    else:
        pool = ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(get_universe_cap(),)
        )
        with pool:
            chunk = max(1, len(todo) // (jobs * 8))
            fresh = list(pool.map(_solve_unit, todo, chunksize=chunk))

    for rec in fresh:
        if cache is not None:
            cache.put(make_profile(kind, rec.m, rec.r), rec)
        records.append(rec)

    records.sort(key=lambda rec: rec.sort_key)
    return records


def summarize(records: Iterable[ScanRecord]) -> dict:
    records = list(records)
    return {
        "instances": len(records),
        "solutions": [(rec.m, rec.r) for rec in records if rec.status == "solution"],
        "disagreements": [
            (rec.m, rec.r) for rec in records if not rec.matches_theorem and not rec.anomaly
        ],
        "anomalies": [(rec.m, rec.r, rec.status) for rec in records if rec.anomaly],
    }
