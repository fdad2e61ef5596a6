"""Determining sequences of product pairs: the closed block-sum formulas,
the brute-force sum over bi-non-crossing partitions they must match, and
the R-diagonal pair whose squares are not bi-free."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .cumulants import test_biboolean_independence, test_bifree_independence
from .diagonal import DeterminingSequences, all_chis, is_eta_diagonal, is_r_diagonal
from .distribution import (
    CumulantTable, MomentTable, bifree_join, cumulants_to_moments, from_bifree_cumulants, pushforward,
)
from .errors import AlphabetError, SizeError
from .kernels import ONE, ZERO, GaussianRational
from .ncpoly import Alphabet, NcPolynomial, Word
from .partitions import (
    ChiMap,
    SetPartition,
    enumerate_bnc,
    interval_pairing,
    join_is_top,
    pairing_join_is_full,
)
from .verdict import Verdict

REVERSED = "y2y1"    # the pair (x1 x2, y2 y1)
SAME = "y1y2"        # the pair (x1 x2, y1 y2)
ORIENTATIONS = (REVERSED, SAME)

# (side, starred) -> the two factors as (family, symbol, starred)
_LEFT = {
    False: ((1, "x", False), (2, "x", False)),
    True: ((2, "x", True), (1, "x", True)),
}
_RIGHT = {
    REVERSED: {
        False: ((2, "y", False), (1, "y", False)),
        True: ((1, "y", True), (2, "y", True)),
    },
    SAME: {
        False: ((1, "y", False), (2, "y", False)),
        True: ((2, "y", True), (1, "y", True)),
    },
}


def chi_hat(chi: ChiMap) -> ChiMap:
    """Each point doubled with its label."""
    return chi.doubled()


def joint_alphabet() -> Alphabet:
    return Alphabet([("x1", "L"), ("y1", "R"), ("x2", "L"), ("y2", "R")])


@dataclass(frozen=True)
class ProductPattern:
    """A colouring ``chi`` of even length and the star pattern of the product
    letters, alternating in the colouring's order and starting unstarred
    (``which = "alpha"``) or starred (``"beta"``)."""

    orientation: str
    chi: ChiMap
    which: str

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if self.which not in ("alpha", "beta"):
            raise ValueError("which must be alpha or beta")
        if self.chi.n % 2:
            raise SizeError("product patterns need an even-length colouring")

    def stars(self) -> tuple[bool, ...]:
        """Star of each product letter, in natural order."""
        first = self.which == "beta"
        return tuple(first != ((self.chi.rank[k] - 1) % 2 == 1) for k in range(self.chi.n))

    def factors(self) -> list[tuple[int, str, bool]]:
        """The ``2n`` product letters expanded to ``4n`` (family, symbol, starred)."""
        out = []
        for lab, st in zip(self.chi.labels, self.stars()):
            table = _LEFT if lab == "L" else _RIGHT[self.orientation]
            out.extend(table[st])
        return out

    def expanded_word(self, alphabet: Alphabet | None = None) -> Word:
        alphabet = alphabet or joint_alphabet()
        return tuple(alphabet.letter(f"{sym}{fam}", st) for fam, sym, st in self.factors())

    def families(self) -> tuple[int, ...]:
        return tuple(f for f, _, _ in self.factors())

    def product_word(self, alphabet: Alphabet) -> Word:
        """The length-2n word over product symbols (see ``product_variables``)."""
        names = product_names(self.orientation)
        return tuple(alphabet.letter(names[lab], st) for lab, st in zip(self.chi.labels, self.stars()))


def product_names(orientation: str) -> dict:
    return {"L": "(x1x2)", "R": "(y2y1)" if orientation == REVERSED else "(y1y2)"}


def product_variables(mu_joint: MomentTable, orientation: str, degree: int | None = None) -> MomentTable:
    """Distribution of the product pair computed by direct expansion."""
    a = mu_joint.alphabet
    x = NcPolynomial.word((a.letter("x1"), a.letter("x2")))
    if orientation == REVERSED:
        y = NcPolynomial.word((a.letter("y2"), a.letter("y1")))
    else:
        y = NcPolynomial.word((a.letter("y1"), a.letter("y2")))
    names = product_names(orientation)
    return pushforward(mu_joint, {names["L"]: ("L", x), names["R"]: ("R", y)}, degree)


@functools.lru_cache(maxsize=None)
def _join_partitions(chi_h: ChiMap) -> tuple[SetPartition, ...]:
    """Partitions in BNC(chi_hat) whose join with the interval pairing is the top."""
    sigma = interval_pairing(chi_h.n)
    return tuple(p for p in enumerate_bnc(chi_h) if join_is_top(p, sigma))


@functools.lru_cache(maxsize=None)
def _paired_partitions(chi_h: ChiMap) -> tuple[SetPartition, ...]:
    """Partitions in BNC(chi_hat) satisfying the pairing-link condition."""
    return tuple(p for p in enumerate_bnc(chi_h) if _all_even(p) and pairing_join_is_full(p, chi_h))


def _all_even(p: SetPartition) -> bool:
    return all(len(b) % 2 == 0 for b in p.blocks)


def joined_partition_sum(mu: MomentTable, word_hat: Word, chi_h: ChiMap,
             partitions=None) -> GaussianRational:
    """Sum of ``kappa_pi(word_hat)`` over BNC(chi_hat) partitions joining the
    interval pairing to the top; cumulants come from ``mu``'s moments."""
    kappa = mu.engine("bifree")
    total = ZERO
    for pi in (_join_partitions(chi_h) if partitions is None else partitions):
        term = ONE
        for block in pi.blocks:
            term = term * kappa(tuple(word_hat[i - 1] for i in block))
            if not term:
                break
        else:
            total = total + term
    return total


def product_cumulant_oracle(mu_joint: MomentTable, pattern: ProductPattern) -> GaussianRational:
    """Bi-free cumulant of the product letters by the partition sum."""
    word = pattern.expanded_word(mu_joint.alphabet)
    return joined_partition_sum(mu_joint, word, chi_hat(pattern.chi))


def product_cumulant_direct(mu_joint: MomentTable, pattern: ProductPattern) -> GaussianRational:
    """The same cumulant computed from the product pair's own moments."""
    pv = product_variables(mu_joint, pattern.orientation, pattern.chi.n)
    return pv.cumulant("bifree", pattern.product_word(pv.alphabet))


# ---------------------------------------------------------------------------
# closed formulas

def _lead_family(orientation: str, chi: ChiMap, which: str) -> int | None:
    """Family of the block holding the first point in the doubled order.

    For the same-order product the mixed colourings vanish (``None``); on
    constant right colourings the roles of the two families swap.
    """
    if orientation == REVERSED:
        return 1 if which == "alpha" else 2
    if not chi.is_constant():
        return None
    if chi.labels[0] == "L":
        return 1 if which == "alpha" else 2
    return 2 if which == "alpha" else 1


# Resolved reading of the displayed block products (kinds per block role).
FORMULA_RESOLUTION = {
    "lead_block": "same kind as the requested sequence",
    "other_blocks_of_lead_family": "opposite kind",
    "blocks_of_other_family": "same kind as the requested sequence",
    "lead_family": {
        "y2y1": {"alpha": 1, "beta": 2},
        "y1y2 all-L": {"alpha": 1, "beta": 2},
        "y1y2 all-R": {"alpha": 2, "beta": 1},
        "y1y2 mixed": "zero",
    },
}


def _formula(seq1: DeterminingSequences, seq2: DeterminingSequences, chi: ChiMap,
             which: str, orientation: str) -> GaussianRational:
    if which not in ("alpha", "beta"):
        raise ValueError("which must be alpha or beta")
    if chi.n % 2:
        raise SizeError("product colourings have even length")
    lead = _lead_family(orientation, chi, which)
    if lead is None:
        return ZERO
    other_kind = "beta" if which == "alpha" else "alpha"
    pattern = ProductPattern(orientation, chi, which)
    fams = pattern.families()
    ch = chi_hat(chi)
    first = ch.s[0]
    seqs = {1: seq1, 2: seq2}
    total = ZERO
    for pi in _paired_partitions(ch):
        term = ONE
        for block in pi.blocks:
            fam = {fams[i - 1] for i in block}
            if len(fam) > 1:
                term = ZERO
                break
            (f,) = fam
            if first in block:
                if f != lead:
                    term = ZERO
                    break
                kind = which
            elif f == lead:
                kind = other_kind
            else:
                kind = which
            term = term * seqs[f].value(kind, ch.restrict(block))
            if not term:
                break
        total = total + term
    return total


def theorem_2_5(seq1: DeterminingSequences, seq2: DeterminingSequences, chi: ChiMap,
                which: str) -> GaussianRational:
    """Closed formula for the sequences of ``(x1 x2, y2 y1)``."""
    return _formula(seq1, seq2, chi, which, REVERSED)


def corollary_2_6(seq1: DeterminingSequences, seq2: DeterminingSequences, chi: ChiMap,
                  which: str) -> GaussianRational:
    """Closed formula for the sequences of ``(x1 x2, y1 y2)``; zero on mixed colourings."""
    return _formula(seq1, seq2, chi, which, SAME)


def product_formula(orientation: str, seq1, seq2, chi, which) -> GaussianRational:
    return _formula(seq1, seq2, chi, which, orientation)


def joint_from_sequences(seq1: DeterminingSequences, seq2: DeterminingSequences,
                         degree: int) -> MomentTable:
    """Bi-free join of the two R-diagonal pairs on ``x1, y1, x2, y2``."""
    from .diagonal import from_determining_sequences
    m1 = from_determining_sequences(seq1, Alphabet([("x1", "L"), ("y1", "R")]), degree)
    m2 = from_determining_sequences(seq2, Alphabet([("x2", "L"), ("y2", "R")]), degree)
    return bifree_join(m1, m2, degree)


def compare_formula(seq1, seq2, orientation: str, lengths=(2, 4),
                    joint: MomentTable | None = None) -> Verdict:
    """Formula against the partition sum for every colouring of the given lengths."""
    deg = 2 * max(lengths)
    if joint is None:
        joint = joint_from_sequences(seq1, seq2, deg)
    checked = 0
    for n in lengths:
        for chi in all_chis(n):
            for which in ("alpha", "beta"):
                pat = ProductPattern(orientation, chi, which)
                want = product_cumulant_oracle(joint, pat)
                got = _formula(seq1, seq2, chi, which, orientation)
                checked += 1
                if want != got:
                    return Verdict.fail((orientation, str(chi), which), got, oracle=want)
                if orientation == SAME and not chi.is_constant() and got:
                    return Verdict.fail((orientation, str(chi), which), got, reason="mixed nonzero")
    return Verdict.ok(checked=checked)


# ---------------------------------------------------------------------------
# the R-diagonal pair with non-bi-free squares

def theorem_2_7_cumulants(degree: int = 4) -> CumulantTable:
    alpha = Alphabet([("x", "L"), ("y", "R")])
    x, xs, y, ys = alpha.letters
    ones = {(x, ys), (xs, y), (y, xs), (ys, x)}
    return CumulantTable("bifree", alpha, degree,
                         source=lambda w: ONE if w in ones else ZERO,
                         zero_sizes=set(range(1, degree + 1)) - {2})


def theorem_2_7_table(degree: int = 4) -> MomentTable:
    """Pair whose only nonzero bi-free cumulants are the four cross pairs."""
    return from_bifree_cumulants(theorem_2_7_cumulants(degree), degree)


def squares_table(mu: MomentTable, degree: int | None = None) -> MomentTable:
    """Joint distribution of ``(xx*, yy*)`` and ``(x*x, y*y)`` as four sided symbols."""
    a = mu.alphabet
    left, right = a.left_symbol(), a.right_symbol()
    x, xs, y, ys = a.letter(left), a.letter(left, True), a.letter(right), a.letter(right, True)
    prods = {
        f"({left}{left}*)": ("L", NcPolynomial.word((x, xs))),
        f"({right}{right}*)": ("R", NcPolynomial.word((y, ys))),
        f"({left}*{left})": ("L", NcPolynomial.word((xs, x))),
        f"({right}*{right})": ("R", NcPolynomial.word((ys, y))),
    }
    return pushforward(mu, prods, degree)


@dataclass
class CrossPairReport:
    r_diagonal: Verdict
    kappa_direct: GaussianRational
    kappa_partition_sum: GaussianRational
    kappa_y_xstar: GaussianRational
    independence: Verdict

    @property
    def passed(self) -> bool:
        return (self.r_diagonal.passed and self.kappa_direct == 1
                and self.kappa_partition_sum == 1 and self.kappa_y_xstar == 1
                and self.independence.failed)


def theorem_2_7_witness(degree: int = 4) -> CrossPairReport:
    """Build the pair, confirm it is R-diagonal, and exhibit the nonzero
    mixed cumulant of ``(xx*, y*y)``."""
    if degree < 4:
        raise AlphabetError("degree must be at least 4 to reach the squares' order-2 cumulants")
    mu = theorem_2_7_table(degree)
    rd = is_r_diagonal(mu, degree)
    sq = squares_table(mu, degree // 2)
    a = sq.alphabet
    direct = sq.cumulant("bifree", (a.letter("(xx*)"), a.letter("(y*y)")))
    ma = mu.alphabet
    hat = (ma.letter("x"), ma.letter("x", True), ma.letter("y", True), ma.letter("y"))
    psum = joined_partition_sum(mu, hat, ChiMap("LLRR"))
    k_yx = mu.cumulant("bifree", (ma.letter("y"), ma.letter("x", True)))
    grouping = {"(xx*)": 1, "(yy*)": 1, "(x*x)": 2, "(y*y)": 2}
    indep = test_bifree_independence(sq, grouping, 2)
    return CrossPairReport(rd, direct, psum, k_yx, indep)


def corollary_4_10_cumulants(degree: int = 4) -> CumulantTable:
    alpha = Alphabet([("x", "L"), ("y", "R")])
    x, xs, y, ys = alpha.letters
    target = (x, xs, ys, y)
    return CumulantTable("biboolean", alpha, degree, {target: ONE}, sparse=True)


def corollary_4_10_table(degree: int = 4) -> MomentTable:
    """Pair whose only nonzero bi-Boolean cumulant is ``B(x, x*, y*, y) = 1``."""
    return cumulants_to_moments(corollary_4_10_cumulants(degree), degree)


@dataclass
class EtaBlockReport:
    eta_diagonal: Verdict
    b_direct: GaussianRational
    b_doubled: GaussianRational
    independence: Verdict

    @property
    def passed(self) -> bool:
        return (self.eta_diagonal.passed and self.b_direct == 1 and self.b_doubled == 1
                and self.independence.failed)


def corollary_4_10_witness(degree: int = 4) -> EtaBlockReport:
    """Eta-diagonal pair whose squares ``(xx*, yy*)`` and ``(x*x, y*y)`` are
    not bi-Boolean independent."""
    if degree < 4:
        raise AlphabetError("degree must be at least 4 to reach the squares' order-2 cumulants")
    mu = corollary_4_10_table(degree)
    eta = is_eta_diagonal(mu, degree)
    sq = squares_table(mu, degree // 2)
    a = sq.alphabet
    direct = sq.cumulant("biboolean", (a.letter("(xx*)"), a.letter("(y*y)")))
    ma = mu.alphabet
    doubled = mu.cumulant("biboolean", (ma.letter("x"), ma.letter("x", True),
                                        ma.letter("y", True), ma.letter("y")))
    grouping = {"(xx*)": 1, "(yy*)": 1, "(x*x)": 2, "(y*y)": 2}
    indep = test_biboolean_independence(sq, grouping, 2)
    return EtaBlockReport(eta, direct, doubled, indep)


__all__ = [
    "REVERSED", "SAME", "ORIENTATIONS", "chi_hat", "joint_alphabet", "ProductPattern",
    "product_names", "product_variables", "joined_partition_sum", "product_cumulant_oracle",
    "product_cumulant_direct", "FORMULA_RESOLUTION", "theorem_2_5", "corollary_2_6",
    "product_formula", "joint_from_sequences", "compare_formula",
    "theorem_2_7_cumulants", "theorem_2_7_table", "squares_table",
    "CrossPairReport", "theorem_2_7_witness", "corollary_4_10_cumulants",
    "corollary_4_10_table", "EtaBlockReport", "corollary_4_10_witness",
]
