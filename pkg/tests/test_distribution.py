import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gr
from oracles import brute_moment
from twofaced.cumulants import cumulant_table
from twofaced.distribution import (
    BiCircularSpec,
    CumulantTable,
    MomentTable,
    bi_circular,
    bi_haar,
    bifree_join,
    from_bifree_cumulants,
    haar_unitary,
    lr_pair,
    multiply_free_haar,
)
from twofaced.errors import DegreeError, MissingEntryError, PreconditionError
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet
from twofaced.random_tables import random_moment_table, random_tracial_table

A = Alphabet([("x", "L"), ("y", "R")])
SINGLE = Alphabet([("x", None), ("y", None)])


def catalan(k):
    from math import comb
    return comb(2 * k, k) // (k + 1)


def test_explicit_tables_must_be_complete():
    with pytest.raises(MissingEntryError):
        MomentTable(A, 1, {"x": 1})
    mu = MomentTable(A, 1, {"x": 1}, sparse=True)
    assert mu(A.parse("y")) == ZERO
    with pytest.raises(PreconditionError):
        MomentTable(A, 1, {"": 2}, sparse=True)
    with pytest.raises(DegreeError):
        MomentTable(A, 1, {"x x": 1}, sparse=True)


def test_flags_are_validated():
    with pytest.raises(PreconditionError):
        MomentTable(SINGLE, 2, {"x y": 1}, sparse=True, tracial=True)


def test_single_left_cumulant_gives_unit_moments():
    kappa = CumulantTable("bifree", A, 6, {"x": 1}, sparse=True)
    mu = from_bifree_cumulants(kappa, 6)
    x = A.letter("x")
    for n in range(1, 7):
        assert mu((x,) * n) == ONE


def test_zero_cumulants_give_zero_moments():
    mu = from_bifree_cumulants(CumulantTable("bifree", A, 4, {}, sparse=True), 4)
    assert all(mu(w) == ZERO for w in mu.words(4) if w)


def test_semicircle_moments_are_catalan():
    kappa = CumulantTable("bifree", A, 8, {"x x": 1}, sparse=True)
    mu = from_bifree_cumulants(kappa, 8)
    x = A.letter("x")
    for k in range(1, 5):
        assert mu((x,) * (2 * k)) == catalan(k)
        assert mu((x,) * (2 * k - 1)) == ZERO


def test_bi_circular_values():
    spec = BiCircularSpec(2, gr(1, 1), 3)
    mu = bi_circular(spec, 4)
    assert mu.value("c_l c_l*") == 2
    assert mu.value("c_l") == ZERO and mu.value("c_l c_l") == ZERO
    assert mu.value("c_l c_l* c_l c_l*") == 2 * 2 ** 2
    assert mu.value("c_l c_r*") == gr(1, 1)


def test_bi_circular_rejects_bad_covariance():
    with pytest.raises(PreconditionError):
        BiCircularSpec(1, 2, 1)
    with pytest.raises(PreconditionError):
        BiCircularSpec(1, 0, 1, c_rl=1)


def test_bi_haar_values():
    mu = bi_haar(4)
    assert mu.value("u_l u_r") == ZERO
    assert mu.value("u_l u_r*") == ONE
    assert mu.value("u_l u_l*") == ONE
    assert mu.value("u_l u_l u_r* u_r*") == ONE


def test_lr_pair_reads_words_in_colouring_order():
    single = random_tracial_table(SINGLE, 4, seed=3)
    pair = lr_pair(single, 4)
    x, y = pair.alphabet.letter("x"), pair.alphabet.letter("y")
    sx, sy = SINGLE.letter("x"), SINGLE.letter("y")
    assert pair((x, x)) == single((sx, sx))
    assert pair((x, y)) == single((sx, sy))
    assert pair((y, x)) == single((sx, sy))
    # two rights are read in reverse
    ys = pair.alphabet.letter("y", True)
    assert pair((y, ys)) == single((SINGLE.letter("y", True), sy))


def test_bifree_join_marginals_and_factorisation():
    m1 = random_moment_table(Alphabet([("a", "L"), ("b", "R")]), 4, 1)
    m2 = random_moment_table(Alphabet([("c", "L"), ("d", "R")]), 4, 2)
    joint = bifree_join(m1, m2, 4)
    for w in m1.words(4):
        assert joint(w) == m1(w)
    a, c = joint.alphabet.letter("a"), joint.alphabet.letter("c")
    assert joint((a, c)) == m1((a,)) * m2((c,))
    kappa = cumulant_table(joint, "bifree", 4)
    fam1 = set(m1.alphabet.letters)
    for w in joint.words(4):
        if w and not (set(w) <= fam1 or not set(w) & fam1):
            assert kappa(w) == ZERO


def test_free_haar_product():
    single = random_tracial_table(SINGLE, 4, seed=11)
    out = multiply_free_haar(single, 4)
    assert out.value("(ux) (ux)*") == single.value("x x*")
    assert out.value("(ux)") == ZERO
    haar_xy = MomentTable(SINGLE, 4, source=lambda w: ONE if not w else (
        ONE if sum(-1 if l.starred else 1 for l in w) == 0 and all(l.symbol == "x" for l in w)
        else ZERO), tracial=True)
    prod = multiply_free_haar(haar_xy, 3)
    ux = prod.alphabet.letter("(ux)")
    for n in range(1, 4):
        assert prod((ux,) * n) == ZERO


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["bifree", "biboolean", "free", "boolean"]))
def test_moments_from_cumulants_match_lattice_sum(seed, kind):
    mu = random_moment_table(A, 4, seed)
    table = cumulant_table(mu, kind, 4)
    for w in mu.words(4):
        if w:
            assert brute_moment(kind, table, w) == mu(w)


def test_haar_unitary_is_tracial_and_star_symmetric():
    mu = haar_unitary(4, "u")
    assert mu.tracial_violation() is None
    assert mu.star_violation() is None
