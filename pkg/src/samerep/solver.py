"""Equal-representation partitions of an interval with per-position constraints.

A :class:`PositionProfile` labels every position of ``[0, m]`` as ``FREE``
(goes to exactly one of ``C``, ``D``), ``NEITHER`` (a removed point) or
``BOTH`` (a shared point). Position 0 is always free and pinned to ``C``.

Because ``0 in C``, the value ``R_C(v)`` is the pair count inside
``C ∩ [0, v-1]`` plus one exactly when ``v in C``, while ``0 not in D`` means
``R_D(v)`` does not depend on whether ``v in D``. So requiring
``R_C(v) == R_D(v)`` decides the class of ``v`` from the prefix alone, and at
most one partition exists. :func:`solve_forced` walks that chain;
:func:`enumerate_all` is the brute-force cross-check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .intset import IntSet, _check_cap
from .repfn import rep_fn_table, rep_tables_equal


class Label(enum.Enum):
    FREE = "free"
    NEITHER = "neither"
    BOTH = "both"


class Provenance(enum.Enum):
    FORCED = "forced"
    ENUMERATED = "enumerated"


class Infeasible(Exception):
    """No valid partition exists; ``index`` is the first ``n`` where forcing failed."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"infeasible at n={index}: {reason}")
        self.index = index
        self.reason = reason


class EnumerationGuardError(ValueError):
    pass


MAX_ENUMERATION_FREE = 28


@dataclass(frozen=True)
class PositionProfile:
    m: int
    labels: tuple[Label, ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if len(self.labels) != self.m + 1:
            raise ValueError(f"need {self.m + 1} labels, got {len(self.labels)}")
        if self.labels[0] is not Label.FREE:
            raise ValueError("position 0 must be FREE (it is pinned to C)")
        _check_cap(2 * self.m)

    @classmethod
    def build(cls, m: int, removed: Iterable[int] = (), shared: Iterable[int] = ()) -> "PositionProfile":
        labels = [Label.FREE] * (m + 1)
        removed, shared = sorted(set(removed)), sorted(set(shared))
        for r in removed + shared:
            if not 0 < r <= m:
                raise ValueError(f"constrained point {r} must lie in [1, {m}]")
        if set(removed) & set(shared):
            raise ValueError("a point cannot be both removed and shared")
        for r in removed:
            labels[r] = Label.NEITHER
        for r in shared:
            labels[r] = Label.BOTH
        return cls(m, tuple(labels))

    @classmethod
    def full(cls, m: int) -> "PositionProfile":
        return cls.build(m)

    @classmethod
    def punctured(cls, m: int, r: int) -> "PositionProfile":
        return cls.build(m, removed=[r])

    @classmethod
    def shared_point(cls, m: int, r: int) -> "PositionProfile":
        return cls.build(m, shared=[r])

    @property
    def removed(self) -> tuple[int, ...]:
        return tuple(i for i, lab in enumerate(self.labels) if lab is Label.NEITHER)

    @property
    def shared(self) -> tuple[int, ...]:
        return tuple(i for i, lab in enumerate(self.labels) if lab is Label.BOTH)

    @property
    def free_positions(self) -> tuple[int, ...]:
        return tuple(i for i, lab in enumerate(self.labels) if lab is Label.FREE)

    def reflected(self) -> "PositionProfile":
        """Labels reversed (position ``i`` takes the label of ``m - i``)."""
        return PositionProfile(self.m, tuple(reversed(self.labels)))

    def key(self) -> str:
        """Stable text form, e.g. ``"8:FFFFNFFFF"``."""
        code = {Label.FREE: "F", Label.NEITHER: "N", Label.BOTH: "B"}
        return f"{self.m}:" + "".join(code[lab] for lab in self.labels)


@dataclass(frozen=True)
class PartitionSolution:
    C: IntSet
    D: IntSet
    verified_upto: int
    provenance: Provenance


def _pair_count(bits: int, rev: int, top: int, v: int) -> int:
    """Pairs ``a < b`` in the set with ``a + b = v``.

    ``rev`` holds bit ``top - x`` for every member ``x``; shifting it right by
    ``top - v`` lines up the partner ``v - x`` of every member.
    """
    hits = (bits & (rev >> (top - v))).bit_count()
    if v % 2 == 0 and bits >> (v // 2) & 1:
        hits -= 1
    return hits // 2


def solve_forced(profile: PositionProfile) -> PartitionSolution:
    """Build the unique candidate partition position by position, then verify it.

    Raises :class:`Infeasible` naming the first ``n`` at which no assignment
    keeps ``R_C(n) == R_D(n)``, or at which the finished pair disagrees.
    """
    m = profile.m
    labels = profile.labels
    c_bits, d_bits = 1, 0
    top = m
    c_rev, d_rev = 1 << top, 0
    for v in range(1, m + 1):
        pc = _pair_count(c_bits, c_rev, top, v)
        pd = _pair_count(d_bits, d_rev, top, v)
        label = labels[v]
        if label is Label.FREE:
            # v in C adds the pair (0, v) to R_C; v in D adds nothing to R_D
            if pc + 1 == pd:
                to_c = True
            elif pc == pd:
                to_c = False
            else:
                raise Infeasible(v, f"R_C={pc}, R_D={pd} before placing {v}")
            if to_c:
                c_bits |= 1 << v
                c_rev |= 1 << (top - v)
            else:
                d_bits |= 1 << v
                d_rev |= 1 << (top - v)
        elif label is Label.NEITHER:
            if pc != pd:
                raise Infeasible(v, f"R_C={pc} != R_D={pd} at removed point")
        else:
            if pc + 1 != pd:
                raise Infeasible(v, f"R_C={pc + 1} != R_D={pd} at shared point")
            c_bits |= 1 << v
            c_rev |= 1 << (top - v)
            d_bits |= 1 << v
            d_rev |= 1 << (top - v)

    c = IntSet(c_bits, m)
    d = IntSet(d_bits, m)
    if not d:
        raise Infeasible(m, "D is empty")
    tc = rep_fn_table(c, m).counts
    td = rep_fn_table(d, m).counts
    diff = np.nonzero(tc[m + 1 :] != td[m + 1 :])[0]
    if len(diff):
        n = m + 1 + int(diff[0])
        raise Infeasible(n, f"R_C={int(tc[n])} != R_D={int(td[n])} in the tail")
    return PartitionSolution(c, d, 2 * m, Provenance.FORCED)


def _pairs_by_sum(m: int) -> list[list[tuple[int, int]]]:
    return [[(a, n - a) for a in range(max(0, n - m), (n + 1) // 2)] for n in range(2 * m + 1)]


def enumerate_all(profile: PositionProfile, chunk_bits: int = 16) -> list[PartitionSolution]:
    """Every valid partition, found by trying all assignments of the free positions.

    Assignments are evaluated in blocks: a block is a 0/1 matrix with one row
    per assignment, and rows are discarded at the first ``n`` where the two
    pair counts differ.
    """
    m = profile.m
    free = profile.free_positions[1:]
    if len(free) + 1 > MAX_ENUMERATION_FREE:
        raise EnumerationGuardError(
            f"{len(free) + 1} free positions exceeds the enumeration limit {MAX_ENUMERATION_FREE}"
        )
    shared = profile.shared
    pairs = _pairs_by_sum(m)
    total = 1 << len(free)
    step = 1 << min(chunk_bits, len(free))
    free_idx = np.array(free, dtype=np.int64)
    solutions = []
    for start in range(0, total, step):
        codes = np.arange(start, min(start + step, total), dtype=np.int64)
        x = np.zeros((len(codes), m + 1), dtype=np.int8)
        y = np.zeros_like(x)
        x[:, 0] = 1
        if len(free):
            bits = ((codes[:, None] >> np.arange(len(free))) & 1).astype(np.int8)
            x[:, free_idx] = bits
            y[:, free_idx] = 1 - bits
        for s in shared:
            x[:, s] = 1
            y[:, s] = 1
        for n in range(1, 2 * m + 1):
            if not len(x):
                break
            diff = np.zeros(len(x), dtype=np.int64)
            for a, b in pairs[n]:
                diff += x[:, a] * x[:, b]
                diff -= y[:, a] * y[:, b]
            keep = diff == 0
            x, y = x[keep], y[keep]
        for row_c, row_d in zip(x, y):
            c = IntSet.from_iterable(np.flatnonzero(row_c).tolist(), m)
            d = IntSet.from_iterable(np.flatnonzero(row_d).tolist(), m)
            if d:
                solutions.append(PartitionSolution(c, d, 2 * m, Provenance.ENUMERATED))
    return solutions


def verify_pair(c: IntSet, d: IntSet, profile: PositionProfile) -> bool:
    """True iff ``(C, D)`` respects every label, ``0 in C``, and ``R_C == R_D`` on ``[1, 2m]``."""
    m = profile.m
    if 0 not in c:
        return False
    if (c and c.max() > m) or (d and d.max() > m):
        return False
    for i, label in enumerate(profile.labels):
        inc, ind = i in c, i in d
        if label is Label.FREE and inc == ind:
            return False
        if label is Label.NEITHER and (inc or ind):
            return False
        if label is Label.BOTH and not (inc and ind):
            return False
    return rep_tables_equal(c, d, 2 * m)


def normalize(c: IntSet, d: IntSet) -> tuple[IntSet, IntSet]:
    """Swap so that 0 lies in the first set."""
    return (c, d) if 0 in c else (d, c)

