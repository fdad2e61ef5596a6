import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twofaced.errors import LatticeError, SizeError
from twofaced.partitions import (
    ChiMap,
    SetPartition,
    enumerate_bi,
    enumerate_bnc,
    enumerate_interval,
    enumerate_noncrossing,
    enumerate_set_partitions,
    is_bi_interval,
    is_bnc,
    is_interval,
    is_noncrossing,
    join,
    kreweras,
    mobius,
    pairing_join_is_full,
    s_chi,
)


def P(*blocks):
    return SetPartition(blocks)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def crossing_oracle(pi):
    # direct four-point definition
    for a, b, c, d in itertools.combinations(range(1, pi.n + 1), 4):
        if pi.same_block(a, c) and pi.same_block(b, d) and not pi.same_block(a, b):
            return True
    return False


def chis(n):
    return st.lists(st.sampled_from("LR"), min_size=n, max_size=n).map(ChiMap)


def test_enumeration_small_cases():
    assert enumerate_set_partitions(1) == [P((1,))]
    assert len(enumerate_set_partitions(3)) == 5
    assert len(enumerate_set_partitions(4)) == 15


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts_are_bell_and_distinct(n):
    parts = enumerate_set_partitions(n)
    assert len(parts) == len(set(parts)) == bell(n)


def test_enumeration_refuses_large_n():
    with pytest.raises(SizeError):
        enumerate_set_partitions(40)


@pytest.mark.parametrize("labels,expected", [("LRL", (1, 3, 2)), ("LLL", (1, 2, 3)), ("RR", (2, 1))])
def test_s_chi(labels, expected):
    assert s_chi(ChiMap(labels)) == expected


def test_noncrossing_examples():
    assert not is_noncrossing(P((1, 3), (2, 4)))
    assert is_noncrossing(P((1, 4), (2, 3)))
    assert sum(map(is_noncrossing, enumerate_set_partitions(4))) == 14


@pytest.mark.parametrize("n", range(1, 8))
def test_noncrossing_matches_four_point_definition(n):
    for pi in enumerate_set_partitions(n):
        assert is_noncrossing(pi) == (not crossing_oracle(pi))


def test_interval_examples():
    assert is_interval(P((1, 2), (3,)))
    assert not is_interval(P((1, 3), (2,)))


@pytest.mark.parametrize("n", range(1, 9))
def test_lattice_sizes(n):
    assert len(enumerate_noncrossing(n)) == catalan(n)
    assert len(enumerate_interval(n)) == 2 ** (n - 1)
    if n <= 7:
        assert sum(map(is_interval, enumerate_set_partitions(n))) == 2 ** (n - 1)


def test_bnc_examples():
    chi = ChiMap("LRLR")
    assert s_chi(chi) == (1, 3, 4, 2)
    assert is_bnc(P((1, 3), (2, 4)), chi)
    all_left = ChiMap("LLLL")
    for pi in enumerate_set_partitions(4):
        assert is_bnc(pi, all_left) == is_noncrossing(pi)
        assert is_bi_interval(pi, all_left) == is_interval(pi)
    assert is_bi_interval(P((1, 2)), ChiMap("LR"))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(chis))
def test_bi_lattices_are_images_under_s(chi):
    parts = enumerate_set_partitions(chi.n)
    bnc = [p for p in parts if is_bnc(p, chi)]
    bi = [p for p in parts if is_bi_interval(p, chi)]
    assert len(bnc) == catalan(chi.n)
    assert len(bi) == 2 ** (chi.n - 1)
    assert sorted(map(repr, bnc)) == sorted(map(repr, enumerate_bnc(chi)))
    assert sorted(map(repr, bi)) == sorted(map(repr, enumerate_bi(chi)))
    for p in bnc:
        assert is_noncrossing(p.preimage(chi.s))


def test_join_examples():
    pi = P((1, 2), (3, 4))
    assert join(pi, pi) == pi
    assert join(pi, P((2, 3), (1,), (4,))) == SetPartition.top(4)
    assert join(SetPartition.bottom(4), pi) == pi


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_set_partitions(n)), st.sampled_from(enumerate_set_partitions(n)))))
def test_join_is_least_upper_bound(ab):
    a, b = ab
    j = join(a, b)
    assert a <= j and b <= j
    uppers = [c for c in enumerate_set_partitions(a.n) if a <= c and b <= c]
    assert all(j <= c for c in uppers)


def test_pairing_join():
    all_left = ChiMap("LLLL")
    assert pairing_join_is_full(P((1, 4), (2, 3)), all_left)
    assert not pairing_join_is_full(P((1, 2), (3, 4)), all_left)
    assert pairing_join_is_full(SetPartition.top(4), all_left)


def test_mobius_values():
    assert mobius("NC", SetPartition.top(3), SetPartition.top(3)) == 1
    assert mobius("NC", SetPartition.bottom(2), SetPartition.top(2)) == -1
    assert mobius("NC", SetPartition.bottom(4), SetPartition.top(4)) == -5


def brute_mobius(elements, lo, hi):
    # recursive definition over the interval [lo, hi]
    memo = {}

    def mu(a):
        if a in memo:
            return memo[a]
        if a == hi:
            val = 1
        else:
            val = -sum(mu(c) for c in elements if a <= c and c <= hi and c != a)
        memo[a] = val
        return val

    return mu(lo)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_mobius_against_recursive_definition(n):
    nc = enumerate_noncrossing(n)
    rng = random.Random(n)
    for _ in range(15):
        a, b = rng.sample(nc, 2)
        lo, hi = (a, join(a, b))
        if not is_noncrossing(hi):
            continue
        assert mobius("NC", lo, hi) == brute_mobius(nc, lo, hi)
    ins = enumerate_interval(n)
    for lo in ins:
        top = SetPartition.top(n)
        assert mobius("IN", lo, top) == brute_mobius(ins, lo, top) == (-1) ** (len(lo) - 1)


def test_bnc_mobius_uses_preimage():
    chi = ChiMap("LRLR")
    top = SetPartition.top(4)
    for pi in enumerate_bnc(chi):
        assert mobius("BNC", pi, top, chi) == mobius("NC", pi.preimage(chi.s), top)


def test_mobius_rejects_non_members():
    with pytest.raises(LatticeError):
        mobius("NC", P((1, 3), (2, 4)), SetPartition.top(4))


def test_kreweras_examples():
    assert kreweras(SetPartition.top(5)) == SetPartition.bottom(5)
    assert kreweras(SetPartition.bottom(5)) == SetPartition.top(5)
    assert kreweras(P((1, 2), (3, 4))) == P((1,), (2, 4), (3,))


@pytest.mark.parametrize("n", range(1, 8))
def test_kreweras_block_count_and_order_reversal(n):
    nc = enumerate_noncrossing(n)
    for pi in nc:
        k = kreweras(pi)
        assert is_noncrossing(k)
        assert len(pi) + len(k) == n + 1
    rng = random.Random(n)
    for _ in range(20):
        a, b = rng.choice(nc), rng.choice(nc)
        if a <= b:
            assert kreweras(b) <= kreweras(a)


def test_kreweras_rejects_crossing():
    with pytest.raises(LatticeError):
        kreweras(P((1, 3), (2, 4)))


def test_chimap_validation():
    with pytest.raises(ValueError):
        ChiMap("LX")
    with pytest.raises(SizeError):
        ChiMap("")
    assert ChiMap("LR").doubled() == ChiMap("LLRR")
