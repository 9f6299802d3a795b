"""Finite sets of nonnegative integers backed by a Python int bitmask.

Bit ``i`` of ``IntSet.bits`` is set exactly when ``i`` is a member. Sets are
immutable; every transform returns a new set. A process-wide universe cap
bounds how large a set may grow so that long scans fail loudly instead of
allocating without limit.
"""

from __future__ import annotations

import contextlib
from typing import Iterable, Iterator

DEFAULT_UNIVERSE_CAP = 1 << 20

_universe_cap = DEFAULT_UNIVERSE_CAP


class CapacityError(ValueError):
    """Raised when a set would exceed the configured universe cap."""


def get_universe_cap() -> int:
    return _universe_cap


def set_universe_cap(cap: int) -> None:
    global _universe_cap
    if cap < 0:
        raise ValueError(f"universe cap must be nonnegative, got {cap}")
    _universe_cap = cap


@contextlib.contextmanager
def universe_cap(cap: int) -> Iterator[int]:
    """Temporarily override the universe cap."""
    previous = _universe_cap
    set_universe_cap(cap)
    try:
        yield cap
    finally:
        set_universe_cap(previous)


def _check_cap(bound: int) -> None:
    if bound > _universe_cap:
        raise CapacityError(
            f"universe bound {bound} exceeds universe cap {_universe_cap}"
        )


class IntSet:
    """Immutable finite set of nonnegative integers.

    ``universe_bound`` is the largest integer the set is declared to live in
    (inclusive). Equality and hashing look only at the members.
    """

    __slots__ = ("_bits", "_bound", "_members")

    def __init__(self, bits: int = 0, universe_bound: int | None = None):
        if bits < 0:
            raise ValueError("bitmask must be nonnegative")
        top = bits.bit_length() - 1
        if universe_bound is None:
            universe_bound = max(top, 0)
        if universe_bound < 0:
            raise ValueError("universe bound must be nonnegative")
        if top > universe_bound:
            raise ValueError(f"member {top} exceeds universe bound {universe_bound}")
        _check_cap(universe_bound)
        self._bits = bits
        self._bound = universe_bound
        self._members: tuple[int, ...] | None = None

    @classmethod
    def from_iterable(cls, items: Iterable[int], universe_bound: int | None = None) -> "IntSet":
        bits = 0
        for x in items:
            x = int(x)
            if x < 0:
                raise ValueError(f"negative member {x}")
            if universe_bound is not None and x > universe_bound:
                raise ValueError(f"member {x} exceeds universe bound {universe_bound}")
            _check_cap(x)
            bits |= 1 << x
        return cls(bits, universe_bound)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IntSet":
        """The integers ``lo..hi`` inclusive (empty if ``hi < lo``)."""
        if hi < lo:
            return cls(0, max(hi, 0))
        _check_cap(hi)
        return cls(((1 << (hi - lo + 1)) - 1) << lo, hi)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def universe_bound(self) -> int:
        return self._bound

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            out = []
            b = self._bits
            while b:
                low = b & -b
                out.append(low.bit_length() - 1)
                b ^= low
            self._members = tuple(out)
        return self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __bool__(self) -> bool:
        return self._bits != 0

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        return bool(self._bits >> x & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self._bits == other._bits
        if isinstance(other, (set, frozenset)):
            return self == IntSet.from_iterable(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        return f"IntSet({{{', '.join(map(str, self))}}})"

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet(self._bits | other._bits, max(self._bound, other._bound))

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet(self._bits & other._bits, max(self._bound, other._bound))

    def __sub__(self, other: "IntSet") -> "IntSet":
        return IntSet(self._bits & ~other._bits, self._bound)

    def max(self) -> int:
        if not self._bits:
            raise ValueError("max() of empty IntSet")
        return self._bits.bit_length() - 1

    def min(self) -> int:
        if not self._bits:
            raise ValueError("min() of empty IntSet")
        return (self._bits & -self._bits).bit_length() - 1

    def truncate(self, hi: int) -> "IntSet":
        """Members ``<= hi``."""
        if hi < 0:
            return IntSet(0, self._bound)
        return IntSet(self._bits & ((1 << (hi + 1)) - 1), self._bound)

    def to_literal(self) -> str:
        return format_set(self)


EMPTY = IntSet()


def evil_parity(n: int) -> int:
    """0 if ``n`` has an even number of 1-bits (evil), 1 otherwise (odious)."""
    if n < 0:
        raise ValueError(f"evil_parity needs n >= 0, got {n}")
    return n.bit_count() & 1


def thue_morse_set(l: int, side: str) -> IntSet:
    """``A_l`` (side ``"A"``, evil numbers) or ``B_l`` (side ``"B"``) in ``[0, 2**l - 1]``."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    side = side.upper()
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    bound = (1 << l) - 1
    _check_cap(bound)
    # doubling: A_{k+1} = A_k | (B_k << 2^k), B_{k+1} = B_k | (A_k << 2^k)
    a, b = 1, 0
    for k in range(l):
        a, b = a | (b << (1 << k)), b | (a << (1 << k))
    return IntSet(a if side == "A" else b, bound)


def shift(s: IntSet, t: int) -> IntSet:
    """Translate every member by ``t >= 0``."""
    if t < 0:
        raise ValueError(f"shift amount must be nonnegative, got {t}")
    return IntSet(s.bits << t, s.universe_bound + t)


def reflect(s: IntSet, m: int) -> IntSet:
    """``{m - x : x in s}``; requires ``s`` inside ``[0, m]``."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if s and s.max() > m:
        raise ValueError(f"member {s.max()} exceeds reflection point {m}")
    return IntSet.from_iterable((m - x for x in s), universe_bound=m)


def format_set(s: Iterable[int]) -> str:
    return ",".join(str(x) for x in s)


def parse_set(text: str, universe_bound: int | None = None) -> IntSet:
    """Parse ``"0,3,6,7"`` (strictly increasing decimals), ``""`` or a ``0x`` bitmask."""
    text = text.strip()
    if not text:
        return IntSet(0, universe_bound)
    if text.lower().startswith("0x"):
        try:
            bits = int(text, 16)
        except ValueError:
            raise ValueError(f"bad hex set literal {text!r}") from None
        return IntSet(bits, universe_bound)
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise ValueError(f"bad set element {part!r} in {text!r}")
        values.append(int(part))
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"set literal must be strictly increasing: {text!r}")
    return IntSet.from_iterable(values, universe_bound)
