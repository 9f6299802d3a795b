"""Unordered representation functions.

``R_S(n)`` counts pairs ``s1 < s2`` in ``S`` with ``s1 + s2 = n``. The fast
path squares the indicator vector by packing it into one big integer (one
fixed-width field per position) and letting CPython's multiplication do the
convolution; every field holds an exact ordered pair count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .intset import IntSet


@dataclass(frozen=True, eq=False)
class RepTable:
    """``counts[n] = R_S(n)`` for ``n`` in ``0..2*source_universe``."""

    counts: np.ndarray
    source_universe: int

    def __getitem__(self, n: int) -> int:
        if 0 <= n < len(self.counts):
            return int(self.counts[n])
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepTable):
            return NotImplemented
        return np.array_equal(self.counts, other.counts)

    def tolist(self) -> list[int]:
        return [int(c) for c in self.counts]


@dataclass(frozen=True, eq=False)
class IndicatorPoly:
    """Coefficients of ``sum_i chi_S(i) x**i`` over degrees ``0..m``."""

    coefficients: np.ndarray

    @classmethod
    def from_set(cls, s: IntSet, m: int) -> "IndicatorPoly":
        return cls(indicator_vector(s, m).astype(np.int64))

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients) - 1


def indicator_vector(s: IntSet, m: int) -> np.ndarray:
    """0/1 ``uint8`` vector of length ``m + 1``."""
    if s and s.max() > m:
        raise ValueError(f"set member {s.max()} exceeds {m}")
    nbytes = (m + 8) // 8
    raw = np.frombuffer(s.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[: m + 1]


_FIELD_DTYPES = ((1, np.uint8), (2, np.uint16), (4, np.uint32), (8, np.uint64))


def ordered_self_convolution(s: IntSet) -> np.ndarray:
    """``conv[n] = #{(a, b) in S x S : a + b = n}``, length ``2*max(S) + 1``."""
    if not s:
        return np.zeros(1, dtype=np.int64)
    top = s.max()
    size = len(s)
    # a field must hold values up to |S|
    width, dtype = next((w, d) for w, d in _FIELD_DTYPES if size < (1 << (8 * w)))
    spread = np.zeros(top + 1, dtype=dtype)
    spread[indicator_vector(s, top).astype(bool)] = 1
    packed = int.from_bytes(spread.tobytes(), "little")
    square = packed * packed
    length = 2 * top + 1
    out = np.frombuffer(square.to_bytes(length * width, "little"), dtype=dtype)
    return out.astype(np.int64)


def rep_fn_naive(s: IntSet, n: int) -> int:
    """Count pairs by direct enumeration."""
    bits = s.bits
    count = 0
    for a in s.members:
        b = n - a
        if b <= a:
            break
        count += bits >> b & 1
    return count


def rep_fn_table(s: IntSet, m: int | None = None) -> RepTable:
    """Full table of ``R_S`` over ``[0, 2m]`` (``m`` defaults to the universe bound)."""
    if m is None:
        m = s.universe_bound
    if s and s.max() > m:
        raise ValueError(f"set member {s.max()} exceeds {m}")
    counts = np.zeros(2 * m + 1, dtype=np.int64)
    if s:
        conv = ordered_self_convolution(s)
        diag = np.zeros_like(conv)
        diag[0::2] = indicator_vector(s, s.max())
        counts[: len(conv)] = (conv - diag) // 2
    return RepTable(counts, m)


def rep_tables_equal(s: IntSet, t: IntSet, n_max: int) -> bool:
    """True iff ``R_S(n) == R_T(n)`` for every ``n`` in ``[1, n_max]``."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    m = max(s.max() if s else 0, t.max() if t else 0, (n_max + 1) // 2)
    a = rep_fn_table(s, m).counts[1 : n_max + 1]
    b = rep_fn_table(t, m).counts[1 : n_max + 1]
    return bool(np.array_equal(a, b))


def _shifted(poly: np.ndarray, by: int, length: int) -> np.ndarray:
    out = np.zeros(length, dtype=np.int64)
    n = min(len(poly), length - by)
    if n > 0:
        out[by : by + n] = poly[:n]
    return out


def eq10_sides(c: IntSet, m: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient arrays (degrees ``0..2m+2``) of both sides of the master identity.

    Left: ``2 p_C(x^2)``. Right: ``G2 + 2 p_C G - G^2 + 2 x^r G - 2 p_C x^r - 2 x^{2r}``
    where ``G = 1 + x + ... + x^m`` and ``G2 = 1 + x^2 + ... + x^{2m}``.
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    if c and c.max() > m:
        raise ValueError(f"C has member {c.max()} outside [0, {m}]")
    if r in c:
        raise ValueError(f"removed point {r} must not lie in C")
    if 0 not in c:
        raise ValueError("C must contain 0")
    length = 2 * m + 3
    p = IndicatorPoly.from_set(c, m).coefficients
    g = np.ones(m + 1, dtype=np.int64)

    lhs = np.zeros(length, dtype=np.int64)
    lhs[0 : 2 * m + 1 : 2] = 2 * p

    g2 = np.zeros(length, dtype=np.int64)
    g2[0 : 2 * m + 1 : 2] = 1
    rhs = g2
    rhs = rhs + _shifted(2 * np.convolve(p, g), 0, length)
    rhs = rhs - _shifted(np.convolve(g, g), 0, length)
    rhs = rhs + _shifted(2 * g, r, length)
    rhs = rhs - _shifted(2 * p, r, length)
    rhs[2 * r] -= 2
    return lhs, rhs


def check_eq10_identity(c: IntSet, m: int, r: int) -> bool:
    """Coefficient-exact check of the generating-function identity for ``(C, m, r)``.

    Holds iff ``R_C == R_D`` where ``D = [0, m] \\ ({r} | C)``.
    """
    lhs, rhs = eq10_sides(c, m, r)
    return bool(np.array_equal(lhs, rhs))
