import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gr
from twofaced.amalgam import (
    INCONCLUSIVE,
    UNEQUAL,
    Diag2,
    Mat2,
    XLetters,
    ab_chain,
    boolean_amalg_check,
    f2,
    in_scalar_nonscalar,
    in_Z,
    in_Z_nonscalar,
    scalar_project,
    theorem_5_2_witness,
    witness_chains,
)
from twofaced.distribution import MomentTable, haar_unitary
from twofaced.errors import PreconditionError
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet, NcPolynomial
from twofaced.random_tables import WITNESS_FAMILIES, star_symmetric_single, witness_family_table

X = Alphabet([("x", None)])
L = XLetters(X)
G = Mat2([[0, NcPolynomial.word((L.x,))], [NcPolynomial.word((L.xs,)), 0]])
small = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(lambda t: gr(*t))


def z_element(draw_coeffs, k=3):
    """Polynomial in the generator and the scalar diagonals."""
    e11, e22 = Mat2([[1, 0], [0, 0]]), Mat2([[0, 0], [0, 1]])
    out = Mat2([[0, 0], [0, 0]])
    for i, c in enumerate(draw_coeffs):
        term = (e11 if i % 2 else e22) * (G ** (i % k))
        out = out + term * c
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_generated_algebra_is_closed(a, b):
    za, zb = z_element(a), z_element(b)
    assert in_Z(za, L) and in_Z(zb, L)
    assert in_Z(za * zb, L)
    assert in_Z(za.star(), L)


def test_membership_examples():
    assert in_Z(G)
    assert in_Z_nonscalar(G, L)
    assert not in_Z(Mat2([[NcPolynomial.word((L.x,)), 0], [0, 0]]), L)
    assert not in_Z_nonscalar(Mat2.identity() * 3, L)
    assert in_scalar_nonscalar(Mat2([[1, 0], [0, 2]]))
    assert not in_scalar_nonscalar(Mat2.identity())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), small, small, small, small)
def test_diagonal_expectation_is_a_bimodule_map(seed, a, b, c, d):
    mu = star_symmetric_single(6, seed)
    m = G ** 3 + G * Mat2([[1, 0], [0, 2]]) * G
    left, right = Diag2(a, b), Diag2(c, d)
    got = f2(left.as_mat() * m * right.as_mat(), mu)
    assert got == left * f2(m, mu) * right


def test_scalar_projection():
    assert scalar_project(Mat2([[2, 1], [0, gr(0, 1)]])) == Diag2(gr(2), gr(0, 1))
    with pytest.raises(PreconditionError):
        scalar_project(G)


def test_witness_chain_products():
    m = 1
    mu = star_symmetric_single(8, 3)
    first, second = witness_chains(L, m, 0, 0)
    res = boolean_amalg_check(first, mu)
    xx = L.power(L.x, m + 1).evaluate(mu)
    assert res.product == Diag2(xx, ZERO)
    assert res.factored == Diag2(ZERO, ZERO)
    res = boolean_amalg_check(second, mu)
    assert res.product == Diag2(ZERO, L.power(L.xs, m + 1).evaluate(mu))
    for n in (1, 2, 3):
        res = boolean_amalg_check(ab_chain(L, n), mu)
        assert res.product == Diag2(mu((L.x,) * n), mu((L.xs,) * n))


def test_chains_must_alternate():
    with pytest.raises(PreconditionError):
        boolean_amalg_check([G, G], star_symmetric_single(4, 0))


def test_haar_unitary_has_a_witness():
    rep = theorem_5_2_witness(haar_unitary(8, "x"))
    assert rep.status == UNEQUAL
    assert rep.chain == "Z1A1Z2A2Z3" and rep.params == (0, 0, 0)
    assert rep.verdict.failed


def test_zero_table_is_inconclusive():
    mu = MomentTable(X, 8, source=lambda w: ZERO if w else ONE, star_symmetric=True)
    rep = theorem_5_2_witness(mu)
    assert rep.status == INCONCLUSIVE and rep.tested > 0


@pytest.mark.parametrize("family", sorted(WITNESS_FAMILIES))
@pytest.mark.parametrize("seed", [0, 1])
def test_each_witness_family_finds_its_chain(family, seed):
    mu, expected = witness_family_table(8, seed, family)
    rep = theorem_5_2_witness(mu)
    assert rep.status == UNEQUAL and rep.chain == expected


def test_non_star_symmetric_tables_are_rejected():
    mu = MomentTable(X, 2, {"x": 1}, sparse=True)
    with pytest.raises(PreconditionError):
        theorem_5_2_witness(mu)
