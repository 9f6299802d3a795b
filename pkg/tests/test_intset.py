import pytest
from hypothesis import given, strategies as st

from oracles import popcount_parity
from samerep.intset import (
    CapacityError,
    IntSet,
    evil_parity,
    format_set,
    parse_set,
    reflect,
    shift,
    thue_morse_set,
    universe_cap,
)

small_sets = st.frozensets(st.integers(0, 200), max_size=40)


@pytest.mark.parametrize("n, expected", [(0, 0), (3, 0), (4, 1)])
def test_evil_parity_examples(n, expected):
    assert evil_parity(n) == expected


def test_evil_parity_matches_popcount():
    assert all(evil_parity(n) == popcount_parity(n) for n in range(5000))


def test_evil_parity_rejects_negative():
    with pytest.raises(ValueError):
        evil_parity(-1)


@pytest.mark.parametrize(
    "l, side, expected",
    [(2, "A", {0, 3}), (3, "B", {1, 2, 4, 7}), (0, "A", {0}), (0, "B", set())],
)
def test_thue_morse_examples(l, side, expected):
    s = thue_morse_set(l, side)
    assert s == IntSet.from_iterable(expected)
    assert s.universe_bound == (1 << l) - 1


@pytest.mark.parametrize("l", range(1, 17))
def test_thue_morse_partition_of_interval(l):
    a, b = thue_morse_set(l, "A"), thue_morse_set(l, "B")
    assert a | b == IntSet.interval(0, (1 << l) - 1)
    assert not (a & b)
    assert len(a) == len(b) == 1 << (l - 1)


@pytest.mark.parametrize("l", range(0, 16))
def test_thue_morse_doubling(l):
    a, b = thue_morse_set(l, "A"), thue_morse_set(l, "B")
    assert thue_morse_set(l + 1, "A") == a | shift(b, 1 << l)
    assert thue_morse_set(l + 1, "B") == b | shift(a, 1 << l)


def test_thue_morse_matches_filter():
    l = 9
    expected = {n for n in range(1 << l) if popcount_parity(n) == 1}
    assert set(thue_morse_set(l, "B")) == expected


def test_thue_morse_capacity():
    with universe_cap(1000):
        with pytest.raises(CapacityError):
            thue_morse_set(10, "A")


@pytest.mark.parametrize(
    "s, t, expected", [({1, 2}, 5, {6, 7}), (set(), 9, set()), ({0}, 0, {0})]
)
def test_shift_examples(s, t, expected):
    assert shift(IntSet.from_iterable(s), t) == IntSet.from_iterable(expected)


def test_shift_overflow():
    with universe_cap(100):
        with pytest.raises(CapacityError):
            shift(IntSet.from_iterable([90]), 20)


@pytest.mark.parametrize(
    "s, m, expected",
    [({0, 3, 6, 7}, 8, {1, 2, 5, 8}), (set(), 5, set()), ({4}, 8, {4})],
)
def test_reflect_examples(s, m, expected):
    assert reflect(IntSet.from_iterable(s), m) == IntSet.from_iterable(expected)


def test_reflect_rejects_out_of_range():
    with pytest.raises(ValueError):
        reflect(IntSet.from_iterable([9]), 8)


@given(small_sets, st.integers(200, 400))
def test_reflect_involution(s, m):
    x = IntSet.from_iterable(s)
    assert reflect(reflect(x, m), m) == x


@given(small_sets, st.integers(0, 100), st.integers(0, 100))
def test_shift_composes(s, a, b):
    x = IntSet.from_iterable(s)
    assert shift(shift(x, a), b) == shift(x, a + b)


@given(small_sets)
def test_intset_invariants(s):
    x = IntSet.from_iterable(s)
    members = list(x)
    assert members == sorted(s)
    assert len(x) == len(s)
    assert all(v <= x.universe_bound for v in members)


def test_equality_is_extensional():
    assert IntSet.from_iterable([1, 2], universe_bound=10) == IntSet.from_iterable([2, 1])
    assert hash(IntSet.from_iterable([1, 2], 10)) == hash(IntSet.from_iterable([1, 2]))


def test_member_beyond_bound_rejected():
    with pytest.raises(ValueError):
        IntSet.from_iterable([5], universe_bound=4)


@given(small_sets)
def test_literal_roundtrip(s):
    x = IntSet.from_iterable(s)
    assert parse_set(format_set(x)) == x
    assert parse_set(hex(x.bits)) == x


def test_literal_forms():
    assert format_set(IntSet.from_iterable([0, 3, 6, 7])) == "0,3,6,7"
    assert parse_set("") == IntSet()
    assert parse_set("0x9") == IntSet.from_iterable([0, 3])


@pytest.mark.parametrize("bad", ["3,1", "1,1", "a,2", "0xzz", "-1"])
def test_literal_rejects(bad):
    with pytest.raises(ValueError):
        parse_set(bad)
