import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gr
from twofaced.errors import AlphabetError
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet, Letter, NcPolynomial, center, chi_word, reorder, star, word_str
from twofaced.random_tables import random_moment_table

A = Alphabet([("x", "L"), ("y", "R")])
letters = st.sampled_from(A.letters)
words = st.lists(letters, max_size=5).map(tuple)
coeffs = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(lambda t: gr(*t))
polys = st.dictionaries(words, coeffs, max_size=4).map(NcPolynomial)


def test_star_examples():
    assert word_str(star(A.parse("x y"))) == "y* x*"
    assert star(()) == ()
    assert word_str(star(A.parse("x x* y"))) == "y* x x*"


def test_letters_are_interned_and_paired():
    x = A.letter("x")
    assert x is Letter("x", False, "L")
    assert x.star.star is x and x.star.starred


def test_parse_and_errors():
    assert [str(l) for l in A.parse("x* y")] == ["x*", "y"]
    with pytest.raises(AlphabetError):
        A.parse("z")
    with pytest.raises(AlphabetError):
        Alphabet([("x", "L"), ("x", "R")])


def test_reorder_follows_colouring():
    w = A.parse("y x")
    assert chi_word(w) == "RL"
    assert word_str(reorder(w)) == "x y"


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == NcPolynomial.zero()
    assert (p * q).star() == q.star() * p.star()
    assert p.star().star() == p


@settings(max_examples=50, deadline=None)
@given(polys, st.integers(0, 1000))
def test_centering_kills_expectation(p, seed):
    mu = random_moment_table(A, 5, seed)
    assert center(p, mu).evaluate(mu) == ZERO


def test_center_examples():
    mu = random_moment_table(A, 3, 7)
    assert center(NcPolynomial.one(), mu) == NcPolynomial.zero()
    x = NcPolynomial.word(A.parse("x"))
    assert center(x, mu) == x - mu(A.parse("x"))


def test_degree_and_scalars():
    p = NcPolynomial.word(A.parse("x y*"), 2) + 3
    assert p.degree() == 2
    assert p.scalar_part() == 3
    assert not p.is_scalar()
    assert NcPolynomial.const(ONE).is_scalar()
    assert NcPolynomial.zero().degree() == -1
