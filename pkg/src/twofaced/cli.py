"""Command-line front end.

Exit codes: 0 pass or success, 1 fail (witness in the report), 2 usage or
input error, 3 inconclusive.  Reports are JSON objects with a fixed key
order (``format`` first, ``elapsed`` last) or CSV rows.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import random
import sys
import time
from typing import Callable

from . import __version__
from .amalgam import UNEQUAL, theorem_5_2_witness
from .cumulants import cumulant_table, test_biboolean_independence, test_bifree_independence
from .diagonal import (
    alpha_recursion, condition_3_6, determining_sequences, eta_moment_characterization,
    eta_series_of_squares, haar_invariance_check, is_alternating, is_eta_diagonal,
    is_r_diagonal, product_cumulants, unitary_catalogue, unitary_invariance_check,
)
from .distribution import CumulantTable, MomentTable, bi_circular, bi_circular_cumulants, lr_pair
from .errors import TwoFacedError
from .fileformat import FORMAT_VERSION, load_distribution, load_sequences
from .kernels import ONE
from .ncpoly import word_str
from .partitions import ChiMap
from .products import (
    ORIENTATIONS, REVERSED, SAME, ProductPattern, compare_formula, corollary_4_10_table,
    corollary_4_10_witness, joint_from_sequences, product_cumulant_oracle, product_formula,
    theorem_2_7_table, theorem_2_7_witness,
)
from .random_tables import (
    cyclically_alternating, eta_diagonal_table, random_covariance, random_moment_table,
    random_r_diagonal_single, random_sequences, random_tracial_table, WITNESS_FAMILIES,
    witness_family_table,
)
from .samples import sample_path
from .verdict import FAIL, INCONCLUSIVE, PASS

EXIT = {PASS: 0, FAIL: 1, INCONCLUSIVE: 3, "SUCCESS": 0}
KINDS = ("bifree", "biboolean", "free", "boolean")


class UsageError(TwoFacedError):
    """Bad combination of command-line arguments."""


# ---------------------------------------------------------------------------
# report helpers

def fmt(value):
    """JSON-ready rendering; scalars become their exact string form."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, tuple) and value and all(hasattr(v, "symbol") for v in value):
        return word_str(value)
    if hasattr(value, "symbol") and hasattr(value, "starred"):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [fmt(v) for v in value]
    if isinstance(value, dict):
        return {str(k): fmt(v) for k, v in value.items()}
    return str(value)


def verdict_dict(v) -> dict:
    out = {"status": v.status, "witness": fmt(v.witness), "value": fmt(v.value)}
    for k, val in v.info.items():
        out[k] = fmt(val)
    return out


class Suite:
    """Collects per-case rows and the overall status (first failure wins)."""

    def __init__(self):
        self.rows: list[dict] = []
        self.failure = None

    def add(self, ok: bool, **row) -> None:
        row = {"case": len(self.rows), "status": PASS if ok else FAIL, **row}
        self.rows.append({k: fmt(v) for k, v in row.items()})
        if not ok and self.failure is None:
            self.failure = row["case"]

    @property
    def status(self) -> str:
        return PASS if self.failure is None else FAIL

    def body(self) -> dict:
        return {"cases": len(self.rows), "first_failure": self.failure, "rows": self.rows}


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _seeds(args, default: int) -> int:
    n = default if args.seeds is None else args.seeds
    if n < 0:
        raise UsageError("--seeds must be nonnegative")
    return n


def _degree(args, default: int) -> int:
    n = default if args.degree is None else args.degree
    if n < 1:
        raise UsageError("--degree must be positive")
    return n


def _cap(mu: MomentTable, args, default: int | None = None) -> int:
    deg = mu.degree if args.degree is None else args.degree
    if default is not None and args.degree is None:
        deg = min(default, mu.degree)
    if deg > mu.degree:
        raise UsageError(f"--degree {deg} exceeds the file's degree {mu.degree}")
    if deg < 1:
        raise UsageError("--degree must be positive")
    return deg


# ---------------------------------------------------------------------------
# tables

def cmd_cumulants(args):
    mu = load_distribution(args.file)
    deg = _cap(mu, args)
    table = cumulant_table(mu, args.kind, deg)
    items = table.items(deg) if args.all else table.nonzero_items(deg)
    rows = [{"word": word_str(w), "value": str(v)} for w, v in items if w]
    return "SUCCESS", {"kind": args.kind, "degree": deg, "entries": len(rows), "rows": rows}


def cmd_moments(args):
    mu = load_distribution(args.file)
    deg = _cap(mu, args)
    items = mu.items(deg) if args.all else mu.nonzero_items(deg)
    rows = [{"word": word_str(w), "value": str(v)} for w, v in items if w]
    return "SUCCESS", {"degree": deg, "entries": len(rows), "rows": rows}


# ---------------------------------------------------------------------------
# checks

def _grouping(mu: MomentTable, groups):
    if not groups:
        return {s: i for i, (s, _) in enumerate(mu.alphabet.symbols)}
    grouping = {}
    for i, g in enumerate(groups):
        for sym in g.split(","):
            sym = sym.strip()
            if sym:
                grouping[sym] = i
    return grouping


def cmd_check(args):
    mu = load_distribution(args.file)
    deg = _cap(mu, args)
    what = args.check
    if what == "r-diagonal":
        v = is_r_diagonal(mu, deg)
    elif what == "eta-diagonal":
        v = is_eta_diagonal(mu, deg)
    elif what == "condition-3-6":
        v = condition_3_6(mu, deg)
    elif what == "bifree-indep":
        v = test_bifree_independence(mu, _grouping(mu, args.group), deg)
    elif what == "biboolean-indep":
        v = test_biboolean_independence(mu, _grouping(mu, args.group), deg)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown check {what!r}")
    return v.status, {"check": what, "degree": deg, "verdict": verdict_dict(v)}


# ---------------------------------------------------------------------------
# products

def _orientation(text: str) -> str:
    if text not in ORIENTATIONS:
        raise UsageError(f"--orientation must be one of {', '.join(ORIENTATIONS)}")
    return text


def cmd_product(args):
    orientation = _orientation(args.orientation)
    try:
        chi = ChiMap(args.chi)
    except ValueError as exc:
        raise UsageError(f"--chi: {exc}") from None
    if chi.n > 2 * 2:
        raise UsageError("oracle comparison supports colourings of length at most 4")
    seq1, seq2 = load_sequences(args.seq1), load_sequences(args.seq2)
    need = 2 * chi.n
    for name, seq in (("seq1", seq1), ("seq2", seq2)):
        if seq.degree < need:
            raise UsageError(f"{name} has degree {seq.degree}; this colouring needs {need}")
    got = product_formula(orientation, seq1, seq2, chi, args.which)
    joint = joint_from_sequences(seq1, seq2, need)
    want = product_cumulant_oracle(joint, ProductPattern(orientation, chi, args.which))
    status = PASS if got == want else FAIL
    return status, {"orientation": orientation, "chi": str(chi), "which": args.which,
                    "formula": str(got), "oracle": str(want)}


# ---------------------------------------------------------------------------
# verification suites

def verify_bicircular(args):
    deg = _degree(args, 8)
    rng = _rng(args)
    suite = Suite()
    cases = []
    for name in ("bicircular_a", "bicircular_b"):
        cases.append((name, load_distribution(sample_path(name)), None))
    for i in range(_seeds(args, 10)):
        spec = random_covariance(rng)
        cases.append((f"random[{i}]", None, spec))
    for name, mu, spec in cases:
        if mu is None:
            mu = bi_circular(spec, deg)
            closed = bi_circular_cumulants(spec, deg)
        else:
            closed = None
        d = min(deg, mu.degree)
        v = is_r_diagonal(mu, d)
        ok = v.passed
        diff = None
        if closed is not None:
            extracted = CumulantTable.from_moments("bifree", mu, d)
            diff = extracted.first_difference(closed, d)
            ok = ok and diff is None
        suite.add(ok, input=name, covariance=spec.as_matrix() if spec else None,
                  r_diagonal=v.status, closed_form_mismatch=diff)
    return suite.status, {"degree": deg, **suite.body()}


def _verify_products(args, orientation):
    n = 2 if args.n is None else args.n
    if not 1 <= n <= 2:
        raise UsageError("--n must be 1 or 2 (oracle comparison cap)")
    lengths = tuple(2 * k for k in range(1, n + 1))
    rng = _rng(args)
    suite = Suite()
    for i in range(_seeds(args, 100)):
        seq1 = random_sequences(2 * lengths[-1], rng)
        seq2 = random_sequences(2 * lengths[-1], rng)
        v = compare_formula(seq1, seq2, orientation, lengths)
        suite.add(v.passed, seed_case=i, checked=v.info.get("checked"),
                  witness=v.witness, value=v.value, oracle=v.info.get("oracle"))
    return suite.status, {"orientation": orientation, "lengths": list(lengths), **suite.body()}


def verify_reversed_products(args):
    return _verify_products(args, REVERSED)


def verify_same_order_products(args):
    return _verify_products(args, SAME)


def verify_cross_pairs(args):
    deg = max(4, _degree(args, 4))
    rep = theorem_2_7_witness(deg)
    shipped = load_distribution(sample_path("cross_pairs"))
    same = shipped.first_difference(theorem_2_7_table(deg), min(deg, shipped.degree)) is None
    status = PASS if rep.passed and same else FAIL
    return status, {
        "degree": deg,
        "r_diagonal": verdict_dict(rep.r_diagonal),
        "kappa_direct": str(rep.kappa_direct),
        "kappa_partition_sum": str(rep.kappa_partition_sum),
        "kappa_y_xstar": str(rep.kappa_y_xstar),
        "independence": verdict_dict(rep.independence),
        "sample_matches": same,
    }


def _stray_support(k):
    def support(w):
        if cyclically_alternating(w):
            return True
        return len(w) == k and w[0].starred == w[1].starred and 2 * sum(l.starred for l in w) == k
    return support


def _single_variable_case(mu, deg, expect=None):
    pair = lr_pair(mu, deg)
    v1 = is_r_diagonal(pair, deg)
    v2 = condition_3_6(mu, deg)
    v3 = haar_invariance_check(mu, deg)
    statuses = (v1.status, v2.status, v3.status)
    ok = len(set(statuses)) == 1 and (expect is None or statuses[0] == expect)
    extra = {}
    if v1.passed:
        _, seq = alpha_recursion(product_cumulants(mu, deg), deg)
        diff = seq.first_difference(determining_sequences(pair, deg))
        extra["recursion_mismatch"] = diff
        ok = ok and diff is None
        cat = {name: unitary_invariance_check(mu, u, deg).status
               for name, u in unitary_catalogue(deg).items()}
        extra["catalogue"] = cat
        ok = ok and all(s == PASS for s in cat.values())
    return ok, {"r_diagonal": v1.status, "chain_condition": v2.status,
                "haar_invariance": v3.status,
                "witnesses": [v1.witness, v2.witness, v3.witness], **extra}


def verify_single_variable(args):
    deg = _degree(args, 6)
    total = _seeds(args, 30)
    rng = _rng(args)
    suite = Suite()
    for name, expect in (("circular_single", PASS), ("semicircular_single", FAIL)):
        mu = load_distribution(sample_path(name))
        ok, row = _single_variable_case(mu, min(deg, mu.degree), expect)
        suite.add(ok, input=name, **row)
    supports = (None, lambda w: len(w) % 2 == 0, _stray_support(4), _stray_support(6))
    from .ncpoly import Alphabet
    single = Alphabet([("x", None), ("y", None)])
    built = total // 3
    for i in range(total):
        seed = rng.randrange(2 ** 32)
        if i < built:
            mu, kind, expect = random_r_diagonal_single(deg, seed), "r-diagonal", PASS
        else:
            sup = supports[(i - built) % len(supports)]
            mu, kind, expect = random_tracial_table(single, deg, seed, support=sup), "random", None
        ok, row = _single_variable_case(mu, deg, expect)
        suite.add(ok, input=f"{kind}[{i}]", **row)
    return suite.status, {"degree": deg, **suite.body()}


def verify_eta_tests(args):
    deg = _degree(args, 6)
    rng = _rng(args)
    suite = Suite()
    for name, expect in (("eta_block", PASS), ("not_eta_diagonal", FAIL)):
        mu = load_distribution(sample_path(name))
        d = min(deg, mu.degree)
        a, b = is_eta_diagonal(mu, d), eta_moment_characterization(mu, d)
        suite.add(a.status == b.status == expect, input=name, cumulant_test=a.status,
                  moment_test=b.status, witness=a.witness)
    for i in range(_seeds(args, 100)):
        seed = rng.randrange(2 ** 32)
        mu = eta_diagonal_table(deg, seed)
        a, b = is_eta_diagonal(mu, deg), eta_moment_characterization(mu, deg)
        suite.add(a.passed and b.passed, input=f"eta[{i}]", cumulant_test=a.status,
                  moment_test=b.status)
        words = [w for w in mu.words(deg) if w and not is_alternating(w)]
        w = words[rng.randrange(len(words))]
        pert = mu.with_overrides({w: mu(w) + ONE})
        c, d = is_eta_diagonal(pert, deg), eta_moment_characterization(pert, deg)
        suite.add(c.failed and d.failed and c.witness == d.witness == w,
                  input=f"perturbed[{i}]", perturbed_word=w, cumulant_test=c.status,
                  moment_test=d.status, witnesses=[c.witness, d.witness])
    return suite.status, {"degree": deg, **suite.body()}


def verify_eta_squares(args):
    deg = _degree(args, 8)
    rng = _rng(args)
    suite = Suite()
    inputs = [("eta_block", load_distribution(sample_path("eta_block")))]
    for i in range(_seeds(args, 20)):
        inputs.append((f"eta[{i}]", eta_diagonal_table(deg, rng.randrange(2 ** 32))))
    for name, mu in inputs:
        d = min(deg, mu.degree)
        res = eta_series_of_squares(mu, d)
        nonzero = sum(len(s.support()) for s in res.direct.values())
        suite.add(res.verdict.passed, input=name, nonzero_coefficients=nonzero,
                  witness=res.verdict.witness, value=res.verdict.value)
    return suite.status, {"degree": deg, **suite.body()}


def verify_eta_block(args):
    deg = max(4, _degree(args, 4))
    rep = corollary_4_10_witness(deg)
    shipped = load_distribution(sample_path("eta_block"))
    same = shipped.first_difference(corollary_4_10_table(deg), min(deg, shipped.degree)) is None
    status = PASS if rep.passed and same else FAIL
    return status, {
        "degree": deg,
        "eta_diagonal": verdict_dict(rep.eta_diagonal),
        "b_direct": str(rep.b_direct),
        "b_doubled": str(rep.b_doubled),
        "independence": verdict_dict(rep.independence),
        "sample_matches": same,
    }


def _witness_row(rep) -> dict:
    return {"result": rep.status, "chain": rep.chain, "params": list(rep.params),
            "product": str(rep.product) if rep.product else None,
            "factored": str(rep.factored) if rep.factored else None, "tested": rep.tested}


def verify_witness_chains(args):
    if args.file:
        mu = load_distribution(args.file)
        deg = _cap(mu, args)
        rep = theorem_5_2_witness(mu, deg)
        status = PASS if rep.status == UNEQUAL else INCONCLUSIVE
        return status, {"degree": deg, **_witness_row(rep)}
    deg = _degree(args, 8)
    rng = _rng(args)
    suite = Suite()
    for name, expect in (("haar_x", UNEQUAL), ("zero_x", INCONCLUSIVE)):
        mu = load_distribution(sample_path(name))
        rep = theorem_5_2_witness(mu, min(deg, mu.degree))
        suite.add(rep.status == expect, input=name, **_witness_row(rep))
    families = tuple(WITNESS_FAMILIES)
    for i in range(_seeds(args, 10)):
        fam = families[i % len(families)]
        mu, expected_chain = witness_family_table(deg, rng.randrange(2 ** 32), fam)
        rep = theorem_5_2_witness(mu, deg)
        suite.add(rep.status == UNEQUAL and rep.chain == expected_chain,
                  input=f"{fam}[{i}]", **_witness_row(rep))
    return suite.status, {"degree": deg, **suite.body()}


def verify_roundtrip(args):
    top = _degree(args, 6)
    rng = _rng(args)
    suite = Suite()
    from .ncpoly import Alphabet
    from .distribution import cumulants_to_moments
    alpha = Alphabet([("x", "L"), ("y", "R")])
    low = min(4, top)
    for i in range(_seeds(args, 50)):
        deg = low + i % (top - low + 1)
        mu = random_moment_table(alpha, deg, rng.randrange(2 ** 32))
        bad = None
        for kind in KINDS:
            back = cumulants_to_moments(cumulant_table(mu, kind, deg), deg)
            diff = mu.first_difference(back, deg)
            if diff is not None:
                bad = (kind, diff[0])
                break
        suite.add(bad is None, input=f"random[{i}]", degree=deg, mismatch=bad)
    return suite.status, {"max_degree": top, **suite.body()}


VERIFY: dict[str, Callable] = {
    "thm2.4": verify_bicircular,
    "thm2.5": verify_reversed_products,
    "cor2.6": verify_same_order_products,
    "thm2.7": verify_cross_pairs,
    "thm3.3": verify_single_variable,
    "thm4.8": verify_eta_tests,
    "prop4.9": verify_eta_squares,
    "cor4.10": verify_eta_block,
    "thm5.2": verify_witness_chains,
    "roundtrip": verify_roundtrip,
}


def cmd_verify(args):
    if args.file and args.suite != "thm5.2":
        raise UsageError(f"verify {args.suite} does not take a file")
    return VERIFY[args.suite](args)


# ---------------------------------------------------------------------------
# parser and output

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, help="degree cap N")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--no-timing", action="store_true",
                        help="omit the elapsed field so reports are byte-identical")
    p = argparse.ArgumentParser(prog="twofaced", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"twofaced {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cumulants", parents=[common], help="cumulant table of a distribution")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--all", action="store_true", help="include zero entries")
    c.add_argument("file")
    c.set_defaults(run=cmd_cumulants)

    m = sub.add_parser("moments", parents=[common], help="moment table of a distribution")
    m.add_argument("--all", action="store_true", help="include zero entries")
    m.add_argument("file")
    m.set_defaults(run=cmd_moments)

    k = sub.add_parser("check", parents=[common], help="run one checker on a file")
    k.add_argument("check", choices=("r-diagonal", "eta-diagonal", "condition-3-6",
                                     "bifree-indep", "biboolean-indep"))
    k.add_argument("file")
    k.add_argument("--group", action="append",
                   help="comma-separated symbols forming one family (repeat per family)")
    k.set_defaults(run=cmd_check)

    r = sub.add_parser("product", parents=[common], help="product cumulant: formula vs oracle")
    r.add_argument("--orientation", required=True, choices=ORIENTATIONS)
    r.add_argument("--chi", required=True)
    r.add_argument("--which", choices=("alpha", "beta"), default="alpha")
    r.add_argument("seq1")
    r.add_argument("seq2")
    r.set_defaults(run=cmd_product)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=tuple(VERIFY))
    v.add_argument("file", nargs="?")
    v.add_argument("--seeds", type=int, help="number of randomized cases")
    v.add_argument("--seed", type=int, default=0, help="base seed")
    v.add_argument("--n", type=int, help="largest half-length of colourings (products)")
    v.set_defaults(run=cmd_verify)
    return p


def _csv(report: dict) -> str:
    buf = io.StringIO()
    rows = report.get("rows")
    if rows:
        fields = []
        for row in rows:
            for key in row:
                if key not in fields:
                    fields.append(key)
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                        for k, v in row.items()})
    else:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for key, val in report.items():
            w.writerow([key, json.dumps(val) if isinstance(val, (list, dict)) else val])
    return buf.getvalue()


def render(report: dict, form: str) -> str:
    if form == "csv":
        return _csv(report)
    return json.dumps(report, indent=1, ensure_ascii=False) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        status, body = args.run(args)
    except TwoFacedError as exc:
        print(f"twofaced: error: {exc}", file=stderr)
        return 2
    command = list(argv) if argv is not None else sys.argv[1:]
    report = {"format": FORMAT_VERSION, "command": command, "status": status, **fmt(body)}
    if not args.no_timing:
        report["elapsed"] = round(time.perf_counter() - start, 3)
    stdout.write(render(report, args.format))
    return EXIT[status]


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "VERIFY", "render"]
