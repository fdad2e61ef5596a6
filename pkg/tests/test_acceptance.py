"""One test per acceptance criterion, exact arithmetic throughout.

Each test prints a single ``[PASS]``/``[FAIL]`` line and enforces its time
budget.  Seeds are fixed so the run is reproducible.
"""

import io
import random
import time
from math import comb

import pytest

from twofaced.amalgam import INCONCLUSIVE, UNEQUAL, theorem_5_2_witness
from twofaced.cli import VERIFY, run
from twofaced.cumulants import cumulant_table
from twofaced.diagonal import (
    alpha_recursion,
    all_chis,
    condition_3_6,
    determining_sequences,
    eta_moment_characterization,
    eta_series_of_squares,
    haar_invariance_check,
    is_alternating,
    is_eta_diagonal,
    is_r_diagonal,
    product_cumulants,
)
from twofaced.distribution import (
    CumulantTable,
    MomentTable,
    bi_circular,
    bi_circular_cumulants,
    bi_haar,
    cumulants_to_moments,
    lr_pair,
)
from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import Alphabet
from twofaced.partitions import (
    ChiMap,
    enumerate_bi,
    enumerate_bnc,
    enumerate_interval,
    enumerate_noncrossing,
    enumerate_set_partitions,
    is_bi_interval,
    is_bnc,
)
from twofaced.products import (
    REVERSED,
    SAME,
    compare_formula,
    corollary_2_6,
    corollary_4_10_witness,
    theorem_2_7_witness,
)
from twofaced.random_tables import (
    WITNESS_FAMILIES,
    eta_diagonal_table,
    random_covariance,
    random_moment_table,
    random_r_diagonal_single,
    random_sequences,
    random_tracial_table,
    witness_family_table,
)
from twofaced.samples import sample_path

pytestmark = pytest.mark.acceptance

PAIR = Alphabet([("x", "L"), ("y", "R")])
SINGLE = Alphabet([("x", None), ("y", None)])
KINDS = ("bifree", "biboolean", "free", "boolean")


def catalan(n):
    return comb(2 * n, n) // (n + 1)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.perf_counter()

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def ok(self):
        return self.elapsed <= self.seconds

    def __str__(self):
        return f"{self.elapsed:.1f}s of {self.seconds}s"


def test_lattice_counts(report):
    budget = Budget(60)
    rng = random.Random(1)
    bad = []
    for n in range(1, 9):
        raw = enumerate_set_partitions(n)
        if len(enumerate_noncrossing(n)) != catalan(n):
            bad.append(("NC", n))
        if len(enumerate_interval(n)) != 2 ** (n - 1):
            bad.append(("IN", n))
        for _ in range(20):
            chi = ChiMap(rng.choice("LR") for _ in range(n))
            bnc = sum(1 for p in raw if is_bnc(p, chi))
            bi = sum(1 for p in raw if is_bi_interval(p, chi))
            if not (bnc == len(enumerate_bnc(chi)) == catalan(n)):
                bad.append(("BNC", str(chi)))
            if not (bi == len(enumerate_bi(chi)) == 2 ** (n - 1)):
                bad.append(("BI", str(chi)))
    report("lattice counts for n <= 8, 20 colourings each",
           not bad and budget.ok(), f"mismatches={bad[:3]}, {budget}")


def test_transform_round_trips(report):
    budget = Budget(120)
    bad = []
    for i in range(50):
        deg = 4 + i % 3
        mu = random_moment_table(PAIR, deg, seed=1000 + i)
        for kind in KINDS:
            back = cumulants_to_moments(cumulant_table(mu, kind, deg), deg)
            diff = mu.first_difference(back, deg)
            if diff is not None:
                bad.append((i, kind, diff[0]))
    report("four transforms round-trip on 50 random tables, N <= 6",
           not bad and budget.ok(), f"mismatches={bad[:3]}, {budget}")


def test_bi_circular_is_r_diagonal_with_closed_form(report):
    budget = Budget(60)
    bad = []
    for i in range(10):
        spec = random_covariance(seed=2000 + i)
        mu = bi_circular(spec, 8)
        if not is_r_diagonal(mu, 8).passed:
            bad.append((i, "r-diagonal"))
            continue
        extracted = CumulantTable.from_moments("bifree", mu, 8)
        diff = extracted.first_difference(bi_circular_cumulants(spec, 8), 8)
        if diff is not None:
            bad.append((i, diff))
    report("bi-circular pairs R-diagonal at N=8 with closed-form cumulants, 10 covariances",
           not bad and budget.ok(), f"failures={bad[:3]}, {budget}")


def test_bi_haar_is_r_diagonal(report):
    budget = Budget(60)
    v = is_r_diagonal(bi_haar(8), 8)
    report("bi-Haar pair R-diagonal at N=8", v.passed and budget.ok(), f"{v.status}, {budget}")


def test_product_formulas_match_partition_sum(report):
    budget = Budget(600)
    bad = []
    seeds = 100
    for orientation in (REVERSED, SAME):
        for i in range(seeds):
            seq1 = random_sequences(8, seed=f"{orientation}-{i}-1")
            seq2 = random_sequences(8, seed=f"{orientation}-{i}-2")
            v = compare_formula(seq1, seq2, orientation, (2, 4))
            if not v.passed:
                bad.append((orientation, i, v.witness))
            if orientation == SAME:
                for n in (2, 4):
                    for chi in all_chis(n):
                        if chi.is_constant():
                            continue
                        for which in ("alpha", "beta"):
                            if corollary_2_6(seq1, seq2, chi, which) != ZERO:
                                bad.append((orientation, i, str(chi), "mixed"))
    report(f"both product formulas equal the partition sum, {seeds} seeds each, |chi| in (2, 4)",
           not bad and budget.ok(), f"failures={bad[:3]}, {budget}")


def test_r_diagonal_pair_with_non_bifree_squares(report):
    budget = Budget(10)
    rep = theorem_2_7_witness(4)
    w = rep.independence.witness
    ok = (rep.r_diagonal.passed and rep.kappa_direct == ONE and rep.independence.failed
          and [str(l) for l in w] == ["(xx*)", "(y*y)"] and rep.independence.value == ONE)
    report("cross-pair table R-diagonal, kappa(xx*, y*y) = 1, squares not bi-free",
           ok and budget.ok(), f"kappa={rep.kappa_direct}, {budget}")


def test_eta_diagonal_characterisations_agree(report):
    budget = Budget(300)
    rng = random.Random(3)
    bad = []
    for i in range(100):
        mu = eta_diagonal_table(6, seed=3000 + i)
        a, b = is_eta_diagonal(mu, 6), eta_moment_characterization(mu, 6)
        if not (a.passed and b.passed):
            bad.append(("clean", i))
        words = [w for w in mu.words(6) if w and not is_alternating(w)]
        w = rng.choice(words)
        pert = mu.with_overrides({w: mu(w) + ONE})
        c, d = is_eta_diagonal(pert, 6), eta_moment_characterization(pert, 6)
        if not (c.failed and d.failed and c.witness == d.witness == w):
            bad.append(("perturbed", i))
    report("eta-diagonal cumulant and moment tests agree on 100 + 100 tables, N=6",
           not bad and budget.ok(), f"failures={bad[:3]}, {budget}")


def test_eta_series_of_squares(report):
    budget = Budget(120)
    bad = []
    for i in range(20):
        res = eta_series_of_squares(eta_diagonal_table(8, seed=4000 + i), 8)
        if not res.verdict.passed:
            bad.append((i, res.verdict.witness))
    report("direct and doubled eta-series of squares agree, mixed colourings vanish, 20 tables",
           not bad and budget.ok(), f"failures={bad[:3]}, {budget}")


def test_eta_diagonal_pair_with_non_boolean_squares(report):
    budget = Budget(10)
    rep = corollary_4_10_witness(4)
    w = rep.independence.witness
    ok = (rep.passed and rep.b_direct == ONE and rep.independence.value == ONE
          and [str(l) for l in w] == ["(xx*)", "(y*y)"])
    report("eta-block table: B(xx*, y*y) = 1 and squares not bi-Boolean independent",
           ok and budget.ok(), f"B={rep.b_direct}, {budget}")


def test_single_variable_characterisations_agree(report):
    budget = Budget(600)
    cases = [("r-diagonal", random_r_diagonal_single(6, seed=5000 + i)) for i in range(10)]
    supports = (None, lambda w: len(w) % 2 == 0)
    cases += [("random", random_tracial_table(SINGLE, 6, seed=6000 + i, support=supports[i % 2]))
              for i in range(20)]
    bad = []
    counts = {"PASS": 0, "FAIL": 0}
    for idx, (kind, mu) in enumerate(cases):
        pair = lr_pair(mu, 6)
        v1 = is_r_diagonal(pair, 6)
        statuses = {v1.status, condition_3_6(mu, 6).status, haar_invariance_check(mu, 6).status}
        if len(statuses) != 1 or (kind == "r-diagonal" and not v1.passed):
            bad.append((idx, statuses))
            continue
        counts[v1.status] += 1
        if v1.passed:
            _, seq = alpha_recursion(product_cumulants(mu, 6), 6)
            if seq.first_difference(determining_sequences(pair, 6)) is not None:
                bad.append((idx, "recursion"))
    report("three single-variable characterisations agree on 30 tables, recursion matches",
           not bad and budget.ok(), f"verdicts={counts}, failures={bad[:3]}, {budget}")


def test_boolean_over_diagonal_witnesses(report):
    budget = Budget(120)
    bad = []
    families = sorted(WITNESS_FAMILIES)
    for i in range(10):
        fam = families[i % len(families)]
        mu, expected = witness_family_table(8, seed=7000 + i, family=fam)
        rep = theorem_5_2_witness(mu)
        if rep.status != UNEQUAL or rep.chain != expected:
            bad.append((fam, i, rep.status, rep.chain))
    zero = MomentTable(Alphabet([("x", None)]), 8, source=lambda w: ZERO if w else ONE,
                       star_symmetric=True)
    zrep = theorem_5_2_witness(zero)
    report("witness chains found for 10 tables, zero table inconclusive",
           not bad and zrep.status == INCONCLUSIVE and budget.ok(),
           f"failures={bad[:3]}, zero={zrep.status}, {budget}")


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue()


def test_cli_end_to_end(report):
    budget = Budget(900)
    bad = []
    for suite in VERIFY:
        code, _ = _cli("verify", suite, "--no-timing")
        if code != 0:
            bad.append((suite, "exit", code))
    for suite in VERIFY:
        argv = ("verify", suite, "--seeds", 3, "--seed", 11, "--no-timing")
        if _cli(*argv) != _cli(*argv):
            bad.append((suite, "not reproducible"))
    expect = {"haar_x": 0, "zero_x": 3}
    for name, code in expect.items():
        if _cli("verify", "thm5.2", sample_path(name))[0] != code:
            bad.append(("thm5.2", name))
    if _cli("check", "r-diagonal", sample_path("not_r_diagonal"), "--degree", 4)[0] != 1:
        bad.append(("check", "exit 1"))
    if _cli("check", "r-diagonal", sample_path("no_such_sample"))[0] != 2:
        bad.append(("check", "exit 2"))
    report(f"all {len(VERIFY)} verify suites pass, exit codes 0/1/2/3, reports reproducible",
           not bad and budget.ok(), f"failures={bad[:3]}, {budget}")
