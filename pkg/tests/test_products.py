import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twofaced.diagonal import all_chis
from twofaced.distribution import BiCircularSpec, bi_circular, bifree_join
from twofaced.kernels import ONE, ZERO
from twofaced.partitions import ChiMap, s_chi
from twofaced.products import (
    REVERSED,
    SAME,
    ProductPattern,
    chi_hat,
    compare_formula,
    corollary_2_6,
    corollary_4_10_witness,
    joined_partition_sum,
    joint_from_sequences,
    product_cumulant_direct,
    product_cumulant_oracle,
    theorem_2_5,
    theorem_2_7_witness,
)
from twofaced.random_tables import random_sequences


def test_chi_hat():
    assert chi_hat(ChiMap("L")) == ChiMap("LL")
    assert chi_hat(ChiMap("LR")) == ChiMap("LLRR")
    assert s_chi(chi_hat(ChiMap("LR"))) == (1, 2, 4, 3)


def test_circular_product_order_two():
    spec = BiCircularSpec(1, 0, 1)
    joint = bifree_join(bi_circular(spec, 4, ("x1", "y1")), bi_circular(spec, 4, ("x2", "y2")), 4)
    pat = ProductPattern(REVERSED, ChiMap("LL"), "alpha")
    assert product_cumulant_oracle(joint, pat) == ONE
    assert product_cumulant_direct(joint, pat) == ONE


def test_odd_family_count_vanishes():
    joint = joint_from_sequences(random_sequences(4, 1), random_sequences(4, 2), 4)
    a = joint.alphabet
    w = (a.letter("x1"), a.letter("x1", True), a.letter("x2"), a.letter("y2", True))
    assert joined_partition_sum(joint, w, ChiMap("LLLR")) == ZERO


@pytest.mark.parametrize("orientation", [REVERSED, SAME])
def test_partition_sum_matches_product_moments(orientation):
    # two independent routes to the product pair's cumulants
    joint = joint_from_sequences(random_sequences(4, 3), random_sequences(4, 4), 4)
    for chi in all_chis(2):
        for which in ("alpha", "beta"):
            pat = ProductPattern(orientation, chi, which)
            assert product_cumulant_oracle(joint, pat) == product_cumulant_direct(joint, pat)


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([REVERSED, SAME]))
def test_formulas_match_partition_sum(seed, orientation):
    seq1, seq2 = random_sequences(8, seed), random_sequences(8, seed + 1)
    v = compare_formula(seq1, seq2, orientation, (2, 4))
    assert v.passed, v


def test_same_orientation_vanishes_on_mixed_colourings():
    seq1, seq2 = random_sequences(8, 5), random_sequences(8, 6)
    for n in (2, 4, 6):
        for chi in all_chis(n):
            for which in ("alpha", "beta"):
                if not chi.is_constant():
                    assert corollary_2_6(seq1, seq2, chi, which) == ZERO
    assert any(theorem_2_5(seq1, seq2, chi, "alpha") for chi in all_chis(4) if not chi.is_constant())


def test_swapped_inputs_are_detected():
    # the formula is not symmetric in its two pairs, and the oracle notices
    seq1, seq2 = random_sequences(8, 7), random_sequences(8, 8)
    joint = joint_from_sequences(seq1, seq2, 8)
    v = compare_formula(seq2, seq1, REVERSED, (2, 4), joint=joint)
    assert v.failed


def test_cross_pair_witness():
    rep = theorem_2_7_witness(4)
    assert rep.passed
    assert rep.kappa_direct == rep.kappa_partition_sum == rep.kappa_y_xstar == ONE
    assert [str(l) for l in rep.independence.witness] == ["(xx*)", "(y*y)"]


def test_eta_block_witness():
    rep = corollary_4_10_witness(4)
    assert rep.passed
    assert rep.b_direct == rep.b_doubled == ONE
    assert [str(l) for l in rep.independence.witness] == ["(xx*)", "(y*y)"]
