import pytest

from oracles import brute_rep, popcount_parity
from samerep.intset import CapacityError, IntSet, universe_cap
from samerep.repfn import rep_tables_equal
from samerep.solver import PositionProfile, verify_pair
from samerep.theorems import (
    ceil_log2,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    construct_lemma6,
    construct_problem2,
    construct_theorem1,
    find_lemma7_witness,
    is_mersenne,
)


def S(*xs):
    return IntSet.from_iterable(xs)


def test_theorem1_small():
    con = construct_theorem1(3)
    assert (con.m, con.r, con.C, con.D) == (8, 4, S(0, 3, 6, 7), S(1, 2, 5, 8))
    con = construct_theorem1(2)
    assert (con.m, con.r, con.C, con.D) == (4, 2, S(0, 4), S(1, 3))


def test_theorem1_l4_by_formula():
    con = construct_theorem1(4)
    a3 = {n for n in range(8) if popcount_parity(n) == 0}
    b3 = {n for n in range(8) if popcount_parity(n) == 1}
    assert set(con.C) == a3 | {9 + b for b in b3}
    assert set(con.D) == b3 | {9 + a for a in a3}
    assert verify_pair(con.C, con.D, PositionProfile.punctured(16, 8))


@pytest.mark.parametrize("l", range(2, 9))
def test_theorem1_sufficiency(l):
    con = construct_theorem1(l)
    assert verify_pair(con.C, con.D, PositionProfile.punctured(con.m, con.r))


def test_theorem1_capacity():
    with universe_cap(100):
        with pytest.raises(CapacityError):
            construct_theorem1(7)


@pytest.mark.parametrize(
    "l, c, d", [(1, {0}, {1}), (2, {0, 3}, {1, 2}), (3, {0, 3, 5, 6}, {1, 2, 4, 7})]
)
def test_lemma6_examples(l, c, d):
    con = construct_lemma6(l)
    assert con.m == (1 << l) - 1
    assert (set(con.C), set(con.D)) == (c, d)
    assert rep_tables_equal(con.C, con.D, 2 * con.m)


def test_problem2_l1():
    con = construct_problem2(1)
    assert (con.m, con.r) == (6, 3)
    assert (con.C, con.D) == (S(0, 3, 4, 5), S(1, 2, 3, 6))
    assert con.C & con.D == S(3)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_problem2_structure(l):
    con = construct_problem2(l)
    assert 0 in con.C and con.m in con.D
    assert con.C & con.D == S(con.r)
    assert con.C | con.D == IntSet.interval(0, con.m)
    c, d = set(con.C), set(con.D)
    if l == 1:
        assert all(brute_rep(c, n) == brute_rep(d, n) for n in range(2 * con.m + 1))
    assert rep_tables_equal(con.C, con.D, 2 * con.m)


def test_ceil_log2():
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("M", [7, 6, 2])
def test_lemma3_examples(M):
    assert check_lemma3(M)


def test_lemma3_antecedents():
    # 6, 5, 3 evil and 7 = 2^3 - 1
    assert all(popcount_parity(x) == 0 for x in (6, 5, 3))
    # M = 6: 4 is odious so the chain breaks
    assert popcount_parity(4) == 1


def test_lemma4_example():
    assert check_lemma4(3)


def test_lemma4_fails_at_two():
    # chain {1} is odious, ceil(log2 2) = 1 is odd and 2 != 2^1 - 1
    assert not check_lemma4(2)


@pytest.mark.parametrize("M", [14, 6])
def test_lemma5_examples(M):
    assert check_lemma5(M)


def test_lemma5_empty_chain_not_triggered():
    assert check_lemma5(2)


def test_lemma5_rejects_odd():
    with pytest.raises(ValueError):
        check_lemma5(7)


def test_digit_lemmas_above_two():
    assert all(check_lemma3(M) and check_lemma4(M) for M in range(3, 5000))
    assert all(check_lemma5(M) for M in range(4, 5000, 2))


def _brute_witness(m):
    c = {n for n in range(m + 1) if popcount_parity(n) == 0}
    d = {n for n in range(m + 1) if popcount_parity(n) == 1}
    for n in range(m + 1, 2 * m):
        if brute_rep(c, n) != brute_rep(d, n):
            return n
    return None


def test_lemma7_examples():
    assert find_lemma7_witness(4) == 5
    assert find_lemma7_witness(7) is None
    w = find_lemma7_witness(5)
    assert w is not None and 5 < w < 10


@pytest.mark.parametrize("m", range(1, 70))
def test_lemma7_matches_brute(m):
    assert find_lemma7_witness(m) == _brute_witness(m)


def test_is_mersenne():
    assert [m for m in range(1, 70) if is_mersenne(m)] == [1, 3, 7, 15, 31, 63]
