import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gr
from oracles import brute_cumulant
from twofaced.cumulants import (
    cumulant_table,
    moments_from_cumulants,
    moments_to_biboolean,
    moments_to_bifree,
    moments_to_boolean,
    moments_to_free,
    multiplicative_eval,
)
from twofaced.cumulants import test_biboolean_independence as biboolean_independence
from twofaced.cumulants import test_bifree_independence as bifree_independence
from twofaced.distribution import CumulantTable, MomentTable, bi_haar, bifree_join, cumulants_to_moments
from twofaced.errors import LatticeError
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet
from twofaced.partitions import SetPartition
from twofaced.products import theorem_2_7_table, squares_table
from twofaced.random_tables import random_moment_table

A = Alphabet([("x", "L"), ("y", "R")])
KINDS = ["bifree", "biboolean", "free", "boolean"]


def test_low_order_formulas():
    mu = random_moment_table(A, 3, 5)
    x, y = A.letter("x"), A.letter("y")
    for fn in (moments_to_bifree, moments_to_biboolean, moments_to_free, moments_to_boolean):
        assert fn(mu, (y,)) == mu((y,))
    assert moments_to_bifree(mu, (x, y)) == mu((x, y)) - mu((x,)) * mu((y,))
    assert moments_to_biboolean(mu, (x, x)) == mu((x, x)) - mu((x,)) ** 2
    assert moments_to_free(mu, (x, x)) == mu((x, x)) - mu((x,)) ** 2


def test_bi_haar_order_two():
    mu = bi_haar(4)
    assert moments_to_bifree(mu, "u_l u_r*") == ONE


@pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (3, 2)])
def test_haar_alternating_free_cumulants(n, expected):
    mu = bi_haar(6)
    u = mu.alphabet.letter("u_l")
    w = (u, u.star) * n
    assert moments_to_free(mu, w) == expected


def test_boolean_of_constant_moments():
    a = Alphabet([("a", None)])
    mu = MomentTable(a, 6, source=lambda w: ONE)
    la = a.letter("a")
    assert moments_to_boolean(mu, (la,)) == ONE
    for n in range(2, 7):
        assert moments_to_boolean(mu, (la,) * n) == ZERO


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(KINDS))
def test_engine_matches_defining_recursion(seed, kind):
    mu = random_moment_table(A, 4, seed)
    for w in mu.words(4):
        if w:
            assert mu.cumulant(kind, w) == brute_cumulant(kind, mu, w)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(KINDS))
def test_round_trip(seed, kind):
    mu = random_moment_table(A, 5, seed)
    back = moments_from_cumulants(cumulant_table(mu, kind, 5), 5)
    assert mu.first_difference(back, 5) is None


def test_multiplicative_eval():
    mu = random_moment_table(A, 4, 9)
    w = A.parse("x y x* y*")
    kappa = cumulant_table(mu, "bifree", 4)
    assert multiplicative_eval("bifree", SetPartition.top(4), w, kappa) == kappa(w)
    prod = ONE
    for let in w:
        prod = prod * kappa((let,))
    assert multiplicative_eval("bifree", SetPartition.bottom(4), w, kappa) == prod
    pi = SetPartition([(1, 3), (2, 4)])
    direct = mu((w[0], w[2])) * mu((w[1], w[3]))
    assert multiplicative_eval("bifree", pi, w, mu) == direct
    with pytest.raises(LatticeError):
        multiplicative_eval("free", pi, w, mu)


def test_bifree_independence_checks():
    m1 = random_moment_table(Alphabet([("a", "L"), ("b", "R")]), 4, 1)
    m2 = random_moment_table(Alphabet([("c", "L"), ("d", "R")]), 4, 2)
    joint = bifree_join(m1, m2, 4)
    assert bifree_independence(joint, {"a": 1, "b": 1, "c": 2, "d": 2}).passed
    assert bifree_independence(joint, {"a": 1, "b": 1, "c": 1, "d": 1}).passed
    assert bifree_independence(joint, {"a": 1, "b": 2, "c": 1, "d": 2}).failed


def test_bifree_independence_of_cross_pair_squares():
    sq = squares_table(theorem_2_7_table(4), 2)
    v = bifree_independence(sq, {"(xx*)": 1, "(yy*)": 1, "(x*x)": 2, "(y*y)": 2}, 2)
    assert v.failed
    assert [str(l) for l in v.witness] == ["(xx*)", "(y*y)"]
    assert v.value == ONE


def test_biboolean_independence_checks():
    b = Alphabet([("a", "L"), ("b", "R"), ("c", "L"), ("d", "R")])
    entries = {"a": 1, "a b": gr(1, 1), "c d*": 2, "d": -1}
    table = CumulantTable("biboolean", b, 4, entries, sparse=True)
    mu = cumulants_to_moments(table, 4)
    assert biboolean_independence(mu, {"a": 1, "b": 1, "c": 2, "d": 2}).passed
    assert biboolean_independence(mu, {"a": 1, "b": 1, "c": 1, "d": 1}).passed
    v = biboolean_independence(mu, {"a": 1, "b": 2, "c": 1, "d": 2})
    assert v.failed and v.value == gr(1, 1)
