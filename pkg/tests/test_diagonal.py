import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gr
from twofaced.diagonal import (
    ALTERNATING_W1,
    ALTERNATING_W2,
    MIXED_ALTERNATING,
    OTHER,
    DeterminingSequences,
    alpha_recursion,
    classify_word,
    condition_3_6,
    determining_sequences,
    eta_moment_characterization,
    eta_series_of_squares,
    from_determining_sequences,
    haar_invariance_check,
    is_alternating,
    is_eta_diagonal,
    is_r_diagonal,
    pattern_word,
    product_cumulants,
    unitary_catalogue,
    unitary_invariance_check,
)
from twofaced.distribution import (
    BiCircularSpec,
    CumulantTable,
    MomentTable,
    bi_circular,
    bi_haar,
    cumulants_to_moments,
    lr_pair,
)
from twofaced.errors import PreconditionError
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet, reorder
from twofaced.partitions import ChiMap
from twofaced.random_tables import (
    eta_diagonal_table,
    haar_single,
    random_r_diagonal_single,
    random_sequences,
    random_tracial_table,
)

A = Alphabet([("x", "L"), ("y", "R")])
SINGLE = Alphabet([("x", None), ("y", None)])


def zero_pair(degree):
    return MomentTable(A, degree, source=lambda w: ZERO if w else ONE)


def test_classify_word_examples():
    assert classify_word(A.parse("x x*")).kind == ALTERNATING_W1
    assert classify_word(A.parse("x* y")).kind == ALTERNATING_W2
    four = classify_word(A.parse("x x* x x*"))
    assert four.kind == ALTERNATING_W1 and four.factorization == ((1, 2, 3, 4),)
    mixed = classify_word(A.parse("x x* x* x"))
    assert mixed.kind == MIXED_ALTERNATING
    assert mixed.factorization == ((1, 2), (3, 4))
    assert classify_word(A.parse("x x")).kind == OTHER
    assert classify_word(A.parse("x")).kind == OTHER


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(A.letters), min_size=1, max_size=8).map(tuple))
def test_classification_blocks_cover_the_word(w):
    cls = classify_word(w)
    assert (cls.kind in (ALTERNATING_W1, ALTERNATING_W2)) == is_alternating(w)
    if cls.kind != OTHER:
        pts = sorted(p for b in cls.factorization for p in b)
        assert pts == list(range(1, len(w) + 1))
        for block in cls.factorization:
            assert is_alternating(tuple(w[i - 1] for i in block))


def test_pattern_words_reorder_to_alternating():
    for labels in ("LR", "RL", "LLRR", "RLRL"):
        chi = ChiMap(labels)
        for first in (False, True):
            w = pattern_word(chi, first, A)
            stars = [l.starred for l in reorder(w)]
            assert stars[0] == first
            assert all(a != b for a, b in zip(stars, stars[1:]))


def test_bi_circular_is_r_diagonal_with_closed_form():
    spec = BiCircularSpec(2, gr(1, -1), 5)
    mu = bi_circular(spec, 6)
    assert is_r_diagonal(mu, 6).passed
    seq = determining_sequences(mu, 6)
    assert seq.alpha["LR"] == gr(1, -1)
    assert seq.alpha["LL"] == 2 and seq.beta["RR"] == 5
    assert all(v == ZERO for k, v in seq.alpha.items() if len(k) > 2)


def test_bi_haar_is_r_diagonal():
    mu = bi_haar(6)
    assert is_r_diagonal(mu, 6).passed
    seq = determining_sequences(bi_haar(4).rename({"u_l": "x", "u_r": "y"}), 4)
    assert seq.alpha["LL"] == 1


def test_odd_cumulant_breaks_r_diagonality():
    mu = cumulants_to_moments(CumulantTable("bifree", A, 4, {"x": 1}, sparse=True), 4)
    v = is_r_diagonal(mu, 4)
    assert v.failed and v.witness == A.parse("x")
    with pytest.raises(PreconditionError):
        determining_sequences(mu, 4)


def test_zero_table_sequences_vanish():
    assert determining_sequences(zero_pair(4), 4) == DeterminingSequences.zeros(4)


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_sequences_round_trip(seed):
    seq = random_sequences(4, seed)
    mu = from_determining_sequences(seq, A, 4)
    assert determining_sequences(mu, 4).first_difference(seq) is None


def test_eta_checks():
    b = CumulantTable("biboolean", A, 4, {"x x* y* y": 1}, sparse=True)
    mu = cumulants_to_moments(b, 4)
    assert is_eta_diagonal(mu, 4).passed
    assert eta_moment_characterization(mu, 4).passed
    assert is_eta_diagonal(zero_pair(4), 4).passed
    bad = cumulants_to_moments(CumulantTable("biboolean", A, 4, {"x x": 1}, sparse=True), 4)
    assert is_eta_diagonal(bad, 4).failed


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_eta_checks_agree_under_perturbation(seed, data):
    mu = eta_diagonal_table(4, seed)
    assert is_eta_diagonal(mu, 4).passed and eta_moment_characterization(mu, 4).passed
    words = [w for w in mu.words(4) if w and not is_alternating(w)]
    w = data.draw(st.sampled_from(words))
    pert = mu.with_overrides({w: mu(w) + ONE})
    a, b = is_eta_diagonal(pert, 4), eta_moment_characterization(pert, 4)
    assert a.failed and b.failed and a.witness == b.witness == w


def test_eta_series_of_squares():
    b = CumulantTable("biboolean", A, 4, {"x x* y* y": 1}, sparse=True)
    res = eta_series_of_squares(cumulants_to_moments(b, 4), 4)
    assert res.verdict.passed
    lower = res.direct["((x*x), (y*y))"]
    assert lower.coefficient("(x*x) (y*y)") == 0
    upper = res.direct["((xx*), (yy*))"]
    assert upper.coefficient("(xx*) (yy*)") == 0
    zero = eta_series_of_squares(zero_pair(4), 4)
    assert all(not s.support() for s in zero.direct.values())


def test_eta_series_of_squares_on_random_tables():
    for seed in range(3):
        assert eta_series_of_squares(eta_diagonal_table(6, seed), 6).verdict.passed


def test_alpha_recursion_reproduces_sequences():
    for seed in range(2):
        mu = random_r_diagonal_single(6, seed)
        _, seq = alpha_recursion(product_cumulants(mu, 6), 6)
        assert seq.first_difference(determining_sequences(lr_pair(mu, 6), 6)) is None


def test_alpha_recursion_order_one_and_zero():
    mu = random_r_diagonal_single(2, 4)
    pc = product_cumulants(mu, 2)
    raw, _ = alpha_recursion(pc, 2)
    assert all(raw[k] == pc[k] for k in raw)
    zeros = {k: ZERO for k in product_cumulants(random_r_diagonal_single(4, 4), 4)}
    raw, seq = alpha_recursion(zeros, 4)
    assert all(v == ZERO for v in raw.values())


def test_chain_condition_examples():
    assert condition_3_6(haar_single(4), 4).passed
    x = SINGLE.letter("x")
    shifted = MomentTable(SINGLE, 4, source=lambda w: ONE if w in ((), (x,)) else ZERO,
                          tracial=True)
    v = condition_3_6(shifted, 4)
    assert v.failed and v.witness == "p22[x]" and v.value == ONE


def test_haar_invariance_examples():
    assert haar_invariance_check(random_r_diagonal_single(4, 1), 4).passed
    one_x = MomentTable(SINGLE, 2, source=lambda w: ONE if len(w) < 2 and all(
        l.symbol == "x" and not l.starred for l in w) else ZERO, tracial=True)
    assert haar_invariance_check(one_x, 2).failed
    zero = MomentTable(SINGLE, 4, source=lambda w: ZERO if w else ONE, tracial=True)
    assert haar_invariance_check(zero, 4).passed


def test_three_characterisations_agree():
    cases = [random_r_diagonal_single(4, s) for s in range(2)]
    cases += [random_tracial_table(SINGLE, 4, s) for s in range(2)]
    for mu in cases:
        statuses = {is_r_diagonal(lr_pair(mu, 4), 4).status, condition_3_6(mu, 4).status,
                    haar_invariance_check(mu, 4).status}
        assert len(statuses) == 1


def test_unitary_catalogue():
    good = random_r_diagonal_single(4, 2)
    bad = random_tracial_table(SINGLE, 4, 2)
    for u in unitary_catalogue(4).values():
        assert unitary_invariance_check(good, u, 4).passed
    assert any(unitary_invariance_check(bad, u, 4).failed for u in unitary_catalogue(4).values())
