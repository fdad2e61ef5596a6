"""Alternation classes of words, R-diagonal and eta-diagonal detection,
determining sequences, and the left/right-operator characterisations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .distribution import (
    CumulantTable,
    MomentTable,
    SeriesTable,
    from_bifree_cumulants,
    haar_unitary,
    lr_pair,
    multiply_free_haar,
    pushforward,
)
from .errors import AlphabetError, MissingEntryError, PreconditionError
from .kernels import ONE, ZERO, GaussianRational
from .ncpoly import Alphabet, NcPolynomial, Word, chi_of, reorder, word_str
from .partitions import ChiMap, enumerate_noncrossing
from .verdict import Verdict

ALTERNATING_W1 = "alternating_W1"
ALTERNATING_W2 = "alternating_W2"
MIXED_ALTERNATING = "mixed_alternating"
OTHER = "other"


def _require_pair(alphabet: Alphabet) -> tuple[str, str]:
    if not alphabet.is_sided_pair():
        raise AlphabetError(f"expected one left and one right symbol, got {alphabet!r}")
    return alphabet.left_symbol(), alphabet.right_symbol()


# ---------------------------------------------------------------------------
# word classification

def _star_segments(stars: list[bool]) -> list[tuple[int, int]]:
    """Split at each pair of equal adjacent stars; returns [start, stop) ranges."""
    cuts = [0] + [i for i in range(1, len(stars)) if stars[i] == stars[i - 1]] + [len(stars)]
    return list(zip(cuts, cuts[1:]))


def is_alternating(word: Word) -> bool:
    """Even length and stars alternate when read in the colouring's order."""
    if not word or len(word) % 2:
        return False
    stars = [let.starred for let in reorder(word)]
    return all(a != b for a, b in zip(stars, stars[1:]))


@dataclass(frozen=True)
class AlternationClass:
    """Class of a word plus, when mixed alternating, its index blocks.

    ``factorization`` lists the blocks ``J_1..J_d`` as 1-based natural
    positions, in the colouring's order; alternating words have ``d = 1``.
    """

    kind: str
    factorization: tuple[tuple[int, ...], ...] = ()

    @property
    def is_alternating(self) -> bool:
        return self.kind in (ALTERNATING_W1, ALTERNATING_W2)

    @property
    def is_mixed_alternating(self) -> bool:
        return self.kind != OTHER


def classify_word(word: Word) -> AlternationClass:
    """Parse the reordered word into maximal star-alternating segments.

    A segment ends exactly where two neighbours carry the same star, so the
    parse is unique; the word is mixed alternating iff every segment has
    even length (their types then alternate automatically).
    """
    word = tuple(word)
    if not word:
        return AlternationClass(OTHER)
    chi = chi_of(word)
    ordered = reorder(word, chi)
    stars = [let.starred for let in ordered]
    segs = _star_segments(stars)
    if any((b - a) % 2 for a, b in segs):
        return AlternationClass(OTHER)
    blocks = tuple(tuple(sorted(chi.s[i] for i in range(a, b))) for a, b in segs)
    if len(segs) == 1:
        return AlternationClass(ALTERNATING_W2 if stars[0] else ALTERNATING_W1, blocks)
    return AlternationClass(MIXED_ALTERNATING, blocks)


def pattern_word(chi: ChiMap, first_starred: bool, alphabet: Alphabet) -> Word:
    """The word whose reordering is ``x^w1 .. x^wk y^w(k+1) .. y^w(2n)`` with
    alternating stars starting as requested."""
    left, right = _require_pair(alphabet)
    out = [None] * chi.n
    for rank, point in enumerate(chi.s):
        sym = left if chi.labels[point - 1] == "L" else right
        out[point - 1] = alphabet.letter(sym, first_starred != (rank % 2 == 1))
    return tuple(out)


def all_chis(n: int) -> Iterator[ChiMap]:
    for labels in itertools.product("LR", repeat=n):
        yield ChiMap(labels)


# ---------------------------------------------------------------------------
# R-diagonal pairs

@dataclass
class DeterminingSequences:
    """``alpha[chi]`` and ``beta[chi]`` keyed by the colouring string, e.g. ``"LRLR"``."""

    alpha: dict = field(default_factory=dict)
    beta: dict = field(default_factory=dict)
    degree: int = 0

    def value(self, which: str, chi) -> GaussianRational:
        table = self.alpha if which == "alpha" else self.beta
        key = str(chi) if isinstance(chi, ChiMap) else "".join(chi)
        if len(key) % 2:
            return ZERO
        try:
            return table[key]
        except KeyError:
            raise MissingEntryError(f"no {which} entry for chi={key}") from None

    def __eq__(self, other):
        return (isinstance(other, DeterminingSequences)
                and self.alpha == other.alpha and self.beta == other.beta)

    def first_difference(self, other: "DeterminingSequences"):
        for name in ("alpha", "beta"):
            a, b = getattr(self, name), getattr(other, name)
            for key in sorted(set(a) | set(b), key=lambda k: (len(k), k)):
                if a.get(key, ZERO) != b.get(key, ZERO):
                    return name, key, a.get(key, ZERO), b.get(key, ZERO)
        return None

    @classmethod
    def zeros(cls, degree: int) -> "DeterminingSequences":
        seq = cls(degree=degree)
        for n in range(2, degree + 1, 2):
            for chi in all_chis(n):
                seq.alpha[str(chi)] = ZERO
                seq.beta[str(chi)] = ZERO
        return seq


def r_diagonal_cumulants(seq: DeterminingSequences, alphabet: Alphabet,
                         degree: int | None = None) -> CumulantTable:
    """Bi-free cumulant table supported on the two allowed patterns per colouring."""
    deg = seq.degree if degree is None else degree
    _require_pair(alphabet)

    def rule(w):
        if len(w) % 2 or not is_alternating(w):
            return ZERO
        chi = "".join(let.side for let in w)
        first = reorder(w)[0].starred
        return seq.value("beta" if first else "alpha", chi)

    zs = set(range(1, deg + 1, 2))
    return CumulantTable("bifree", alphabet, deg, source=rule, zero_sizes=zs)


def from_determining_sequences(seq: DeterminingSequences, alphabet: Alphabet | None = None,
                               degree: int | None = None) -> MomentTable:
    """Moment table of the R-diagonal pair with the given sequences."""
    if alphabet is None:
        alphabet = Alphabet([("x", "L"), ("y", "R")])
    return from_bifree_cumulants(r_diagonal_cumulants(seq, alphabet, degree), degree)


def _scan(mu: MomentTable, kind: str, degree: int | None, allowed) -> Verdict:
    """First word (length, then letter order) whose cumulant should vanish but does not."""
    deg = mu.degree if degree is None else min(degree, mu.degree)
    eng = mu.engine(kind)
    checked = 0
    for k in range(1, deg + 1):
        clean = True
        for w in mu.alphabet.words(k):
            if allowed(w):
                if k % 2:
                    clean = False
                continue
            checked += 1
            val = eng(w)
            if val:
                return Verdict.fail(w, val, kind=kind, checked=checked)
        if clean and k % 2:
            eng.mark_zero_size(k)
    return Verdict.ok(kind=kind, checked=checked, degree=deg)


def is_r_diagonal(mu: MomentTable, degree: int | None = None) -> Verdict:
    """PASS iff bi-free cumulants vanish off the alternating patterns up to ``degree``."""
    _require_pair(mu.alphabet)
    return _scan(mu, "bifree", degree, is_alternating)


def determining_sequences(mu: MomentTable, degree: int | None = None) -> DeterminingSequences:
    deg = mu.degree if degree is None else min(degree, mu.degree)
    verdict = is_r_diagonal(mu, deg)
    if not verdict.passed:
        raise PreconditionError(
            f"table is not R-diagonal: cumulant of {word_str(verdict.witness)} is {verdict.value}")
    eng = mu.engine("bifree")
    seq = DeterminingSequences(degree=deg)
    for n in range(2, deg + 1, 2):
        for chi in all_chis(n):
            seq.alpha[str(chi)] = eng(pattern_word(chi, False, mu.alphabet))
            seq.beta[str(chi)] = eng(pattern_word(chi, True, mu.alphabet))
    return seq


# ---------------------------------------------------------------------------
# eta-diagonal pairs

def is_eta_diagonal(mu: MomentTable, degree: int | None = None) -> Verdict:
    """PASS iff bi-Boolean cumulants vanish on every non-alternating word."""
    _require_pair(mu.alphabet)
    return _scan(mu, "biboolean", degree, is_alternating)


def eta_moment_characterization(mu: MomentTable, degree: int | None = None) -> Verdict:
    """Moments vanish off mixed-alternating words and factor over the
    canonical blocks on mixed-alternating ones."""
    _require_pair(mu.alphabet)
    deg = mu.degree if degree is None else min(degree, mu.degree)
    for w in mu.words(deg):
        cls = classify_word(w)
        val = mu(w)
        if cls.kind == OTHER:
            if val:
                return Verdict.fail(w, val, condition="vanishing")
        elif cls.kind == MIXED_ALTERNATING:
            prod = ONE
            for block in cls.factorization:
                prod = prod * mu(tuple(w[i - 1] for i in block))
            if prod != val:
                return Verdict.fail(w, val, condition="factorization", expected=prod)
    return Verdict.ok(degree=deg)


def square_products(mu: MomentTable, starred_first: bool) -> dict:
    """Product variables ``(xx*), (yy*)`` (or ``(x*x), (y*y)``) with sides."""
    left, right = _require_pair(mu.alphabet)
    x, xs = mu.alphabet.letter(left), mu.alphabet.letter(left, True)
    y, ys = mu.alphabet.letter(right), mu.alphabet.letter(right, True)
    if not starred_first:
        return {f"({left}{left}*)": ("L", NcPolynomial.word((x, xs))),
                f"({right}{right}*)": ("R", NcPolynomial.word((y, ys)))}
    return {f"({left}*{left})": ("L", NcPolynomial.word((xs, x))),
            f"({right}*{right})": ("R", NcPolynomial.word((ys, y)))}


def doubled_word(chi: ChiMap, starred_first: bool, alphabet: Alphabet) -> Word:
    """Each ``l`` becomes ``x x*`` and each ``r`` becomes ``y y*`` (or the
    starred-first versions), in natural position order."""
    left, right = _require_pair(alphabet)
    out = []
    for lab in chi.labels:
        sym = left if lab == "L" else right
        a, b = alphabet.letter(sym), alphabet.letter(sym, True)
        out.extend((b, a) if starred_first else (a, b))
    return tuple(out)


@dataclass
class EtaSquares:
    """Direct and doubled eta-series of both square pairs and the first mismatch."""

    direct: dict
    doubled: dict
    verdict: Verdict


def eta_series_of_squares(mu: MomentTable, degree: int | None = None,
                          require_eta: bool = True) -> EtaSquares:
    """Eta-series of ``(xx*, yy*)`` and ``(x*x, y*y)`` computed two ways.

    Directly, as bi-Boolean cumulants of the product variables; and by
    doubling, as bi-Boolean cumulants of ``mu`` on the expanded word.  The
    verdict fails on the first coefficient where the routes disagree or a
    non-constant colouring carries a nonzero coefficient.
    """
    deg = mu.degree if degree is None else min(degree, mu.degree)
    if require_eta:
        pre = is_eta_diagonal(mu, deg)
        if not pre.passed:
            raise PreconditionError(
                f"table is not eta-diagonal at {word_str(pre.witness)}")
    half = deg // 2
    direct, doubled = {}, {}
    failure = None
    boolean = mu.engine("biboolean")
    for starred_first in (False, True):
        prods = square_products(mu, starred_first)
        pf = pushforward(mu, prods, half)
        names = list(prods)
        d_coeffs, h_coeffs = {}, {}
        for n in range(1, half + 1):
            for chi in all_chis(n):
                w = tuple(pf.alphabet.letter(names[0] if lab == "L" else names[1])
                          for lab in chi.labels)
                a = pf.cumulant("biboolean", w)
                b = boolean(doubled_word(chi, starred_first, mu.alphabet))
                d_coeffs[w], h_coeffs[w] = a, b
                if failure is None:
                    if a != b:
                        failure = Verdict.fail((names, str(chi)), a, doubled=b,
                                               reason="routes disagree")
                    elif a and not chi.is_constant():
                        failure = Verdict.fail((names, str(chi)), a,
                                               reason="mixed colouring coefficient")
        key = "(" + ", ".join(names) + ")"
        direct[key] = SeriesTable("eta", pf.alphabet, d_coeffs)
        doubled[key] = SeriesTable("eta", pf.alphabet, h_coeffs)
    return EtaSquares(direct, doubled, failure or Verdict.ok(degree=half))


# ---------------------------------------------------------------------------
# single-variable (left/right operator) characterisations

PRODUCT_NAMES = {
    1: {("x", False, "x", True): "xx*", ("x", False, "y", True): "xy*",
        ("y", False, "y", True): "yy*"},
    2: {("x", True, "x", False): "x*x", ("x", True, "y", False): "x*y",
        ("y", True, "y", False): "y*y"},
}


def _alt_tuple(which: int, k1: int, k2: int):
    """``(x, x*, .., y, y*)`` (which=1) or ``(x*, x, .., y*, y)`` (which=2) as (sym, starred)."""
    return [("x" if i < k1 else "y", (i % 2 == 1) if which == 1 else (i % 2 == 0))
            for i in range(k1 + k2)]


def product_word(which: int, k1: int, k2: int) -> tuple[str, ...]:
    """Names of the consecutive pair products of the alternating tuple."""
    t = _alt_tuple(which, k1, k2)
    return tuple(PRODUCT_NAMES[which][t[2 * j] + t[2 * j + 1]] for j in range(len(t) // 2))


def product_cumulants(mu_single: MomentTable, degree: int | None = None) -> dict:
    """Free cumulants ``kappa_n`` of the paired products, keyed ``(which, k1, k2)``."""
    syms = [s for s, _ in mu_single.alphabet.symbols]
    if len(syms) != 2:
        raise AlphabetError("expected a two-symbol alphabet")
    deg = mu_single.degree if degree is None else min(degree, mu_single.degree)
    sx, sy = syms
    ltr = {"x": sx, "y": sy}
    prods = {}
    for table in PRODUCT_NAMES.values():
        for (a, sa, b, sb), name in table.items():
            w = (mu_single.alphabet.letter(ltr[a], sa), mu_single.alphabet.letter(ltr[b], sb))
            prods[f"({name})"] = (None, NcPolynomial.word(w))
    pf = pushforward(mu_single, prods, deg // 2)
    out = {}
    for n in range(1, deg // 2 + 1):
        for k1 in range(2 * n + 1):
            for which in (1, 2):
                w = tuple(pf.alphabet.letter(f"({p})") for p in product_word(which, k1, 2 * n - k1))
                out[(which, k1, 2 * n - k1)] = pf.cumulant("free", w)
    return out


def tilde_block(block: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Positions in the length-2n tuple attached to a block of NC(n)."""
    i1 = block[0]
    if i1 != 1:
        return tuple(p for i in block for p in (2 * i - 2, 2 * i - 1))
    inner = tuple(p for i in block[1:] for p in (2 * i - 2, 2 * i - 1))
    return (1,) + inner + (2 * n,)


def alpha_recursion(product_cum: Mapping, degree: int) -> tuple[dict, DeterminingSequences]:
    """Solve for ``alpha_{which; k1, k2}`` from the product cumulants.

    Returns the raw ``{(which, k1, k2): value}`` map and the determining
    sequences it induces (``alpha_chi = alpha_{1; k1, k2}`` and
    ``beta_chi = alpha_{2; k1, k2}`` with ``k1`` the number of lefts).
    """
    raw: dict = {}
    for n in range(1, degree // 2 + 1):
        parts = [p for p in enumerate_noncrossing(n) if len(p) > 1]
        for k1 in range(2 * n + 1):
            k2 = 2 * n - k1
            for which in (1, 2):
                try:
                    val = product_cum[(which, k1, k2)]
                except KeyError:
                    raise MissingEntryError(
                        f"missing product cumulant for {(which, k1, k2)}") from None
                other = 3 - which
                for pi in parts:
                    term = ONE
                    for block in pi.blocks:
                        tb = tilde_block(block, n)
                        b1 = sum(1 for p in tb if p <= k1)
                        idx = which if 1 in block else other
                        term = term * raw[(idx, b1, len(tb) - b1)]
                        if not term:
                            break
                    val = val - term
                raw[(which, k1, k2)] = val
    seq = DeterminingSequences(degree=degree)
    for n in range(2, degree + 1, 2):
        for chi in all_chis(n):
            k1 = chi.num_left()
            seq.alpha[str(chi)] = raw[(1, k1, n - k1)]
            seq.beta[str(chi)] = raw[(2, k1, n - k1)]
    return raw, seq


@dataclass(frozen=True)
class ChainFactor:
    """One element of a P-set: alternating letters, x's before y's."""

    start_starred: bool
    k1: int
    k2: int

    @property
    def length(self) -> int:
        return self.k1 + self.k2

    @property
    def end_starred(self) -> bool:
        return self.start_starred == (self.length % 2 == 1)

    @property
    def centered(self) -> bool:
        return self.length % 2 == 0

    @property
    def index(self) -> tuple[int, int]:
        return (1 if self.start_starred else 2, 1 if self.end_starred else 2)

    def letters(self, alphabet: Alphabet, sx: str, sy: str) -> Word:
        return tuple(alphabet.letter(sx if i < self.k1 else sy, self.start_starred != (i % 2 == 1))
                     for i in range(self.length))

    def describe(self, sx="x", sy="y") -> str:
        body = " ".join(
            (sx if i < self.k1 else sy) + ("*" if self.start_starred != (i % 2 == 1) else "")
            for i in range(self.length))
        return f"p{self.index[0]}{self.index[1]}[{body}]"


def admissible_chains(degree: int) -> Iterator[tuple[ChainFactor, ...]]:
    """Chains of P-set elements with total degree <= ``degree``.

    Adjacent factors share an index (the end star of one equals the start
    star of the next) and all x-letters precede all y-letters, i.e. x-only
    factors, at most one mixed factor, then y-only factors.  Ordered by
    total degree, then lexicographically.
    """
    def extend(chain, remaining, y_started, need_star):
        if chain:
            yield chain
        starts = (True, False) if need_star is None else (need_star,)
        for length in range(1, remaining + 1):
            for st in starts:
                for k1 in (range(length, -1, -1) if not y_started else (0,)):
                    f = ChainFactor(st, k1, length - k1)
                    yield from extend(chain + (f,), remaining - length,
                                      y_started or f.k2 > 0, f.end_starred)

    chains = list(extend((), degree, False, None))
    chains.sort(key=lambda c: (sum(f.length for f in c), len(c),
                               [(f.length, not f.start_starred, -f.k1) for f in c]))
    return iter(chains)


def condition_3_6(mu_single: MomentTable, degree: int | None = None) -> Verdict:
    """PASS iff every admissible chain of (centred) P-set elements has zero moment."""
    mu_single.require_tracial()
    syms = [s for s, _ in mu_single.alphabet.symbols]
    if len(syms) != 2:
        raise AlphabetError("expected a two-symbol alphabet")
    sx, sy = syms
    deg = mu_single.degree if degree is None else min(degree, mu_single.degree)
    checked = 0
    for chain in admissible_chains(deg):
        poly = NcPolynomial.one()
        for f in chain:
            p = NcPolynomial.word(f.letters(mu_single.alphabet, sx, sy))
            if f.centered:
                p = p - NcPolynomial.const(mu_single(f.letters(mu_single.alphabet, sx, sy)))
            poly = poly * p
        checked += 1
        val = poly.evaluate(mu_single)
        if val:
            return Verdict.fail(" ".join(f.describe(sx, sy) for f in chain), val, checked=checked)
    return Verdict.ok(checked=checked, degree=deg)


def unitary_invariance_check(mu_single: MomentTable, unitary: MomentTable | None = None,
                             degree: int | None = None) -> Verdict:
    """PASS iff ``(L(vx), R(vy))`` and ``(L(x), R(y))`` agree up to ``degree``
    for ``v`` (default Haar) *-free from ``{x, y}``."""
    mu_single.require_tracial()
    deg = mu_single.degree if degree is None else min(degree, mu_single.degree)
    syms = [s for s, _ in mu_single.alphabet.symbols]
    rotated = multiply_free_haar(mu_single, deg, unitary=unitary)
    back = {f"(u{s})": s for s in syms}
    rotated = rotated.rename(back)
    p0 = lr_pair(mu_single, deg)
    p1 = lr_pair(rotated, deg)
    diff = p0.first_difference(p1, deg)
    if diff is None:
        return Verdict.ok(degree=deg)
    w, a, b = diff
    return Verdict.fail(w, b, original=a)


def haar_invariance_check(mu_single: MomentTable, degree: int | None = None) -> Verdict:
    return unitary_invariance_check(mu_single, None, degree)


def bernoulli_unitary(degree: int, symbol: str = "u") -> MomentTable:
    """Symmetric +-1 unitary: ``v = v*``, ``phi(v^k) = [k even]``."""
    alpha = Alphabet([(symbol, None)])
    return MomentTable(alpha, degree, source=lambda w: ONE if len(w) % 2 == 0 else ZERO,
                       tracial=True, star_symmetric=True)


def scalar_phase(phase, degree: int, symbol: str = "u") -> MomentTable:
    """The scalar unitary ``v = phase * 1``; ``|phase|`` must be 1."""
    lam = GaussianRational(phase) if not isinstance(phase, GaussianRational) else phase
    if lam.abs2() != 1:
        raise PreconditionError("a scalar phase must have modulus 1")
    alpha = Alphabet([(symbol, None)])

    def rule(w):
        val = ONE
        for let in w:
            val = val * (lam.conjugate() if let.starred else lam)
        return val

    return MomentTable(alpha, degree, source=rule, tracial=True, star_symmetric=True)


def unitary_catalogue(degree: int) -> dict:
    """Small catalogue of unitaries used to sample the all-unitaries statement."""
    return {
        "haar": haar_unitary(degree, "u"),
        "bernoulli": bernoulli_unitary(degree),
        "phase_i": scalar_phase(GaussianRational(0, 1), degree),
        "phase_3_4": scalar_phase(GaussianRational(3, 4) / 5, degree),
    }


__all__ = [
    "ALTERNATING_W1", "ALTERNATING_W2", "MIXED_ALTERNATING", "OTHER",
    "AlternationClass", "classify_word", "is_alternating", "pattern_word", "all_chis",
    "DeterminingSequences", "r_diagonal_cumulants", "from_determining_sequences",
    "is_r_diagonal", "determining_sequences", "is_eta_diagonal",
    "eta_moment_characterization", "eta_series_of_squares", "EtaSquares",
    "square_products", "doubled_word", "product_word", "product_cumulants",
    "tilde_block", "alpha_recursion", "ChainFactor", "admissible_chains",
    "condition_3_6", "unitary_invariance_check", "haar_invariance_check",
    "bernoulli_unitary", "scalar_phase", "unitary_catalogue",
]
