"""Closed-form Thue-Morse constructions and binary-digit lemma checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .intset import IntSet, evil_parity, shift, thue_morse_set
from .repfn import rep_fn_table


@dataclass(frozen=True)
class Construction:
    m: int
    r: Optional[int]
    C: IntSet
    D: IntSet


def construct_theorem1(l: int) -> Construction:
    """Punctured-interval partition of ``[0, 2^l] minus {2^(l-1)}``.

    ``C = A_{l-1} | (2^(l-1) + 1 + B_{l-1})`` and symmetrically for ``D``.
    ``l = 1`` is accepted and yields ``({0}, {2})`` on ``[0, 2] minus {1}``.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    half = 1 << (l - 1)
    a, b = thue_morse_set(l - 1, "A"), thue_morse_set(l - 1, "B")
    m = 1 << l
    c = IntSet((a | shift(b, half + 1)).bits, m)
    d = IntSet((b | shift(a, half + 1)).bits, m)
    return Construction(m, half, c, d)


def construct_lemma6(l: int) -> Construction:
    """The Thue-Morse split ``(A_l, B_l)`` of ``[0, 2^l - 1]``."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return Construction((1 << l) - 1, None, thue_morse_set(l, "A"), thue_morse_set(l, "B"))


def construct_problem2(l: int) -> Construction:
    """Shared-point partition of ``[0, 2^(2l+1) - 2]`` meeting in ``{2^(2l) - 1}``."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    r = (1 << (2 * l)) - 1
    m = 2 * r
    a, b = thue_morse_set(2 * l, "A"), thue_morse_set(2 * l, "B")
    c = IntSet((a | shift(b, r)).bits, m)
    d = IntSet((b | shift(a, r)).bits, m)
    return Construction(m, r, c, d)


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def _chain_all(values, parity: int) -> bool:
    return all(evil_parity(v) == parity for v in values)


def check_lemma3(M: int) -> bool:
    """If ``M - 2^i`` is evil for every ``0 <= i < ceil(log2 M)`` then
    ``ceil(log2 M)`` is odd and ``M = 2^ceil(log2 M) - 1``."""
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    k = ceil_log2(M)
    if not _chain_all((M - (1 << i) for i in range(k)), 0):
        return True
    return k % 2 == 1 and M == (1 << k) - 1


def check_lemma4(M: int) -> bool:
    """Odious version of :func:`check_lemma3`: the exponent must be even.

    ``M = 2`` violates the literal statement (chain ``{1}`` is odious,
    ``ceil(log2 2) = 1``) and returns False.
    """
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    k = ceil_log2(M)
    if not _chain_all((M - (1 << i) for i in range(k)), 1):
        return True
    return k % 2 == 0 and M == (1 << k) - 1


def check_lemma5(M: int) -> bool:
    """Even ``M``: if ``M - 2, M - 4, ..., M - 2^(k-1)`` are evil then ``M = 2^k - 2``.

    For ``M = 2`` the chain is empty and the implication is not triggered,
    matching the reduction to :func:`check_lemma3` at ``M / 2 = 1``.
    """
    if M < 2 or M % 2:
        raise ValueError(f"M must be even and >= 2, got {M}")
    k = ceil_log2(M)
    chain = [M - (1 << i) for i in range(1, k)]
    if not chain or not _chain_all(chain, 0):
        return True
    return M == (1 << k) - 2


def find_lemma7_witness(m: int) -> Optional[int]:
    """Least ``n`` in ``(m, 2m)`` with ``R_{A∩[0,m]}(n) != R_{B∩[0,m]}(n)``, else None."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    l = m.bit_length()
    c = thue_morse_set(l, "A").truncate(m)
    d = thue_morse_set(l, "B").truncate(m)
    tc = rep_fn_table(IntSet(c.bits, m), m).counts
    td = rep_fn_table(IntSet(d.bits, m), m).counts
    hits = np.flatnonzero(tc[m + 1 : 2 * m] != td[m + 1 : 2 * m])
    return m + 1 + int(hits[0]) if len(hits) else None


def is_mersenne(m: int) -> bool:
    """``m = 2^l - 1`` for some ``l >= 1``."""
    return m >= 1 and (m + 1) & m == 0
