"""Truncated *-distributions and the named distributions built from them.

A ``MomentTable`` stores ``phi(word)`` for every word of length ``1..degree``
over a declared alphabet, either as an explicit dict or lazily through a
source callable whose results are memoised.  The empty word always has
moment 1.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from ._engine import KINDS, CumulantsToMoments, MomentsToCumulants
from .errors import (
    AlphabetError,
    DegreeError,
    MissingEntryError,
    PreconditionError,
)
from .kernels import ONE, ZERO, GaussianRational, scalar
from .ncpoly import Alphabet, Letter, NcPolynomial, Word, reorder, star, word_str

DEFAULT_DEGREE = 8


def _key_to_word(alphabet: Alphabet, key) -> Word:
    if isinstance(key, str):
        return alphabet.parse(key)
    return alphabet.check_word(key)


class WordTable:
    """Word-indexed scalars up to a degree cap, explicit or lazy.

    With ``sparse=True`` a missing explicit entry reads as zero; otherwise it
    is an error, so that hand-entered tables cannot silently lose entries.
    """

    def __init__(self, alphabet: Alphabet, degree: int,
                 values: Mapping | None = None, *,
                 source: Callable[[Word], object] | None = None,
                 sparse: bool = False, complete_check: bool = True):
        if not isinstance(degree, int) or degree < 0:
            raise DegreeError(f"degree must be a nonnegative integer, got {degree!r}")
        self.alphabet = alphabet
        self.degree = degree
        self.sparse = sparse
        self._source = source
        self._cache: dict = {}
        self._explicit = values is not None
        if values is not None:
            for key, val in values.items():
                w = _key_to_word(alphabet, key)
                if len(w) > degree:
                    raise DegreeError(f"entry {word_str(w)!r} exceeds degree {degree}")
                self._store_explicit(w, scalar(val))
            if complete_check and not sparse and source is None:
                self._check_complete()

    def _store_explicit(self, w: Word, val) -> None:
        self._cache[w] = val

    def _check_complete(self) -> None:
        for w in self.alphabet.words_upto(self.degree):
            if w not in self._cache:
                raise MissingEntryError(
                    f"missing entry for word {word_str(w)!r} (mark the table sparse "
                    f"to read missing entries as zero)")

    def __call__(self, word) -> GaussianRational:
        val = self._cache.get(word)
        if val is None:
            val = self._compute(word)
        return val

    def value(self, word) -> GaussianRational:
        if isinstance(word, str):
            word = self.alphabet.parse(word)
        return self(tuple(word))

    def _compute(self, word):
        word = tuple(word)
        val = self._cache.get(word)
        if val is not None:
            return val
        if len(word) > self.degree:
            raise DegreeError(
                f"word {word_str(word)!r} of length {len(word)} exceeds degree cap {self.degree}")
        for let in word:
            if let not in self.alphabet:
                raise AlphabetError(f"letter {let} is not in {self.alphabet!r}")
        if self._source is not None:
            val = scalar(self._source(word))
        elif self.sparse:
            val = ZERO
        else:
            raise MissingEntryError(f"missing entry for word {word_str(word)!r}")
        self._cache[word] = val
        return val

    def words(self, degree: int | None = None) -> Iterator[Word]:
        return self.alphabet.words_upto(self.degree if degree is None else degree)

    def items(self, degree: int | None = None) -> Iterator[tuple[Word, GaussianRational]]:
        for w in self.words(degree):
            yield w, self(w)

    def nonzero_items(self, degree: int | None = None):
        return [(w, v) for w, v in self.items(degree) if v]

    def first_difference(self, other: "WordTable", degree: int | None = None):
        """First word (deterministic order) where two tables differ, else None."""
        if degree is None:
            degree = min(self.degree, other.degree)
        for w in self.words(degree):
            a, b = self(w), other(w)
            if a != b:
                return w, a, b
        return None


class MomentTable(WordTable):
    """A unital linear functional on words, truncated at ``degree``."""

    def __init__(self, alphabet: Alphabet, degree: int,
                 moments: Mapping | None = None, *,
                 source: Callable[[Word], object] | None = None,
                 tracial: bool = False, star_symmetric: bool = False,
                 sparse: bool = False, validate: bool = True,
                 complete_check: bool = True):
        super().__init__(alphabet, degree, moments, source=source, sparse=sparse,
                         complete_check=complete_check)
        self._cache[()] = ONE
        self.tracial = tracial
        self.star_symmetric = star_symmetric
        self._engines: dict[str, MomentsToCumulants] = {}
        self._flag_checks: dict[str, object] = {}
        if validate and self._explicit and (tracial or star_symmetric):
            self.validate_flags()

    def _store_explicit(self, w, val):
        if not w:
            if val != ONE:
                raise PreconditionError("the empty word must have moment 1")
            return
        self._cache[w] = val

    @property
    def flags(self) -> dict:
        return {"tracial": self.tracial, "star_symmetric": self.star_symmetric,
                "sparse": self.sparse}

    # -- flag validation ---------------------------------------------------
    def tracial_violation(self, degree: int | None = None):
        """First word whose cyclic rotation has a different moment, or None."""
        key = ("tracial", degree)
        if key not in self._flag_checks:
            found = None
            for w in self.words(degree):
                if len(w) > 1:
                    rot = w[1:] + w[:1]
                    if self(w) != self(rot):
                        found = (w, rot)
                        break
            self._flag_checks[key] = found
        return self._flag_checks[key]

    def star_violation(self, degree: int | None = None):
        key = ("star", degree)
        if key not in self._flag_checks:
            found = None
            for w in self.words(degree):
                if self(star(w)) != self(w).conjugate():
                    found = w
                    break
            self._flag_checks[key] = found
        return self._flag_checks[key]

    def validate_flags(self) -> None:
        if self.tracial:
            bad = self.tracial_violation()
            if bad:
                raise PreconditionError(
                    f"table flagged tracial but phi({word_str(bad[0])}) != "
                    f"phi({word_str(bad[1])})")
        if self.star_symmetric:
            bad = self.star_violation()
            if bad is not None:
                raise PreconditionError(
                    f"table flagged star-symmetric but phi({word_str(star(bad))}) is not "
                    f"the conjugate of phi({word_str(bad)})")

    def require_tracial(self) -> None:
        if not self.tracial:
            raise PreconditionError("operation requires a table flagged tracial")
        bad = self.tracial_violation()
        if bad:
            raise PreconditionError(
                f"traciality violated: phi({word_str(bad[0])}) != phi({word_str(bad[1])})")

    # -- cumulants ---------------------------------------------------------
    def engine(self, kind: str) -> MomentsToCumulants:
        """The memoised cumulant functional of the given kind."""
        eng = self._engines.get(kind)
        if eng is None:
            if kind not in KINDS:
                raise ValueError(f"unknown cumulant kind {kind!r}")
            eng = MomentsToCumulants(kind, self._cache, self._compute, self.degree)
            self._engines[kind] = eng
        return eng

    def cumulant(self, kind: str, word) -> GaussianRational:
        if isinstance(word, str):
            word = self.alphabet.parse(word)
        return self.engine(kind)(tuple(word))

    # -- derived tables ----------------------------------------------------
    def evaluate(self, p: NcPolynomial) -> GaussianRational:
        if p.degree() > self.degree:
            raise DegreeError(f"polynomial degree {p.degree()} exceeds cap {self.degree}")
        return p.evaluate(self)

    def restrict(self, symbols: Iterable[str]) -> "MomentTable":
        """Marginal on a sub-alphabet."""
        sub = self.alphabet.restrict(symbols)
        return MomentTable(sub, self.degree, source=self, tracial=self.tracial,
                           star_symmetric=self.star_symmetric)

    def truncate(self, degree: int) -> "MomentTable":
        return MomentTable(self.alphabet, min(degree, self.degree), source=self,
                           tracial=self.tracial, star_symmetric=self.star_symmetric)

    def rename(self, mapping: Mapping[str, str]) -> "MomentTable":
        """Same functional with symbols renamed (sides kept)."""
        new = Alphabet([(mapping.get(s, s), side) for s, side in self.alphabet.symbols])
        back = {Letter(mapping.get(let.symbol, let.symbol), let.starred, let.side): let
                for let in self.alphabet.letters}
        return MomentTable(new, self.degree,
                           source=lambda w: self(tuple(back[let] for let in w)),
                           tracial=self.tracial, star_symmetric=self.star_symmetric)

    def with_sides(self, sides: Mapping[str, str | None]) -> "MomentTable":
        """Same functional on letters re-declared with other sides."""
        new = self.alphabet.with_sides(sides)
        back = {Letter(let.symbol, let.starred, new.side(let.symbol)): let
                for let in self.alphabet.letters}
        return MomentTable(new, self.degree,
                           source=lambda w: self(tuple(back[let] for let in w)),
                           tracial=self.tracial, star_symmetric=self.star_symmetric)

    def with_overrides(self, overrides: Mapping) -> "MomentTable":
        """Copy with some moments replaced; flags are dropped."""
        fixed = {_key_to_word(self.alphabet, k): scalar(v) for k, v in overrides.items()}
        return MomentTable(self.alphabet, self.degree,
                           source=lambda w: fixed[w] if w in fixed else self(w))

    def materialize(self, degree: int | None = None) -> dict:
        return {w: v for w, v in self.items(degree)}

    def __repr__(self):
        return f"MomentTable({self.alphabet!r}, degree={self.degree})"


class CumulantTable(WordTable):
    """Cumulants of one kind indexed by words (sides give the colouring).

    ``zero_sizes`` lists word lengths whose entries are all zero; the
    moment reconstruction skips those terms.  For explicit sparse tables it
    is derived from the stored entries.
    """

    def __init__(self, kind: str, alphabet: Alphabet, degree: int,
                 entries: Mapping | None = None, *,
                 source: Callable[[Word], object] | None = None,
                 sparse: bool = False, zero_sizes: Iterable[int] = (),
                 complete_check: bool = True):
        if kind not in KINDS:
            raise ValueError(f"unknown cumulant kind {kind!r}")
        super().__init__(alphabet, degree, entries, source=source, sparse=sparse,
                         complete_check=complete_check)
        self.kind = kind
        zs = set(zero_sizes)
        if entries is not None and source is None and sparse:
            live = {len(w) for w, v in self._cache.items() if v}
            zs |= set(range(1, degree + 1)) - live
        self.zero_sizes = frozenset(zs)

    @classmethod
    def from_moments(cls, kind: str, mu: MomentTable, degree: int | None = None):
        deg = mu.degree if degree is None else degree
        eng = mu.engine(kind)
        return cls(kind, mu.alphabet, deg, source=eng)

    def __repr__(self):
        return f"CumulantTable({self.kind}, {self.alphabet!r}, degree={self.degree})"


SERIES_KINDS = ("moment", "eta", "R")


class SeriesTable:
    """Coefficients of a formal series without constant term."""

    def __init__(self, kind: str, alphabet: Alphabet, coefficients: Mapping):
        if kind not in SERIES_KINDS:
            raise ValueError(f"unknown series kind {kind!r}")
        coeffs = {}
        for key, val in coefficients.items():
            w = _key_to_word(alphabet, key)
            if not w:
                raise PreconditionError("series must have vanishing constant coefficient")
            val = scalar(val)
            if val:
                coeffs[w] = val
        self.kind = kind
        self.alphabet = alphabet
        self.coefficients = coeffs

    def coefficient(self, word) -> GaussianRational:
        if isinstance(word, str):
            word = self.alphabet.parse(word)
        return self.coefficients.get(tuple(word), ZERO)

    def support(self) -> list[Word]:
        return sorted(self.coefficients, key=self.alphabet.word_key)

    def __eq__(self, other):
        return (isinstance(other, SeriesTable) and self.kind == other.kind
                and self.coefficients == other.coefficients)

    def __repr__(self):
        inner = ", ".join(f"{word_str(w)}: {self.coefficients[w]}" for w in self.support())
        return f"SeriesTable({self.kind}, {{{inner}}})"


def series_from(kind: str, mu: MomentTable, degree: int | None = None) -> SeriesTable:
    """Moment series, bi-Boolean eta series or bi-free R-transform of ``mu``."""
    deg = mu.degree if degree is None else degree
    if kind == "moment":
        fn = mu
    elif kind == "eta":
        fn = mu.engine("biboolean")
    else:
        fn = mu.engine("bifree")
    return SeriesTable(kind, mu.alphabet, {w: fn(w) for w in mu.words(deg)})


# ---------------------------------------------------------------------------
# constructors

def cumulants_to_moments(ctable: CumulantTable, degree: int | None = None, *,
                         tracial: bool = False, star_symmetric: bool = False) -> MomentTable:
    """Moments whose cumulants of ``ctable.kind`` are ``ctable``."""
    deg = ctable.degree if degree is None else degree
    if deg > ctable.degree:
        raise DegreeError(f"requested degree {deg} exceeds cumulant cap {ctable.degree}")
    eng = CumulantsToMoments(ctable.kind, ctable._cache, ctable._compute, deg,
                             ctable.zero_sizes)
    mu = MomentTable(ctable.alphabet, deg, source=eng.compute,
                     tracial=tracial, star_symmetric=star_symmetric)
    eng.bind(mu._cache, mu._compute)
    return mu


def from_bifree_cumulants(kappa: CumulantTable, degree: int | None = None, **flags) -> MomentTable:
    if kappa.kind != "bifree":
        raise ValueError("from_bifree_cumulants needs a bi-free cumulant table")
    return cumulants_to_moments(kappa, degree, **flags)


class BiCircularSpec:
    """Covariance ``C = [[c_ll, c_lr], [c_rl, c_rr]]`` of a bi-circular pair."""

    def __init__(self, c_ll, c_lr, c_rr, c_rl=None):
        self.c_ll = scalar(c_ll)
        self.c_lr = scalar(c_lr)
        self.c_rr = scalar(c_rr)
        self.c_rl = self.c_lr.conjugate() if c_rl is None else scalar(c_rl)
        if self.c_rl != self.c_lr.conjugate():
            raise PreconditionError("covariance is not Hermitian: c_rl != conj(c_lr)")
        if not (self.c_ll.is_real() and self.c_rr.is_real()):
            raise PreconditionError("covariance diagonal must be real")
        if self.c_ll.real < 0 or self.c_rr.real < 0:
            raise PreconditionError("covariance diagonal must be nonnegative")
        det = self.c_ll.real * self.c_rr.real - self.c_lr.abs2()
        if det < 0:
            raise PreconditionError("covariance is not positive semidefinite")

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "BiCircularSpec":
        return cls(m[0][0], m[0][1], m[1][1], m[1][0])

    def entry(self, a: str, b: str) -> GaussianRational:
        return {("L", "L"): self.c_ll, ("L", "R"): self.c_lr,
                ("R", "L"): self.c_rl, ("R", "R"): self.c_rr}[(a, b)]

    def as_matrix(self):
        return [[self.c_ll, self.c_lr], [self.c_rl, self.c_rr]]

    def __repr__(self):
        return f"BiCircularSpec(c_ll={self.c_ll}, c_lr={self.c_lr}, c_rr={self.c_rr})"


def bi_circular_cumulants(spec: BiCircularSpec, degree: int,
                          symbols: tuple[str, str] = ("c_l", "c_r")) -> CumulantTable:
    alpha = Alphabet([(symbols[0], "L"), (symbols[1], "R")])

    def rule(w):
        if len(w) == 2 and w[0].starred != w[1].starred:
            return spec.entry(w[0].side, w[1].side)
        return ZERO

    zs = set(range(1, degree + 1)) - {2}
    return CumulantTable("bifree", alpha, degree, source=rule, zero_sizes=zs)


def bi_circular(spec: BiCircularSpec, degree: int = DEFAULT_DEGREE,
                symbols: tuple[str, str] = ("c_l", "c_r")) -> MomentTable:
    """Pair whose only bi-free cumulants are ``c_{chi(1),chi(2)}`` on mixed-star pairs."""
    return from_bifree_cumulants(bi_circular_cumulants(spec, degree, symbols), degree)


def bi_haar(degree: int = DEFAULT_DEGREE,
            symbols: tuple[str, str] = ("u_l", "u_r")) -> MomentTable:
    """Commuting unitary pair with ``phi(u_l^n u_r^m) = [n + m = 0]``.

    Commuting the left letters past the right ones and cancelling ``u u*``
    brings any word to ``u_l^n u_r^m``, where ``n`` and ``m`` are the net
    exponents; only their sum matters.
    """
    if degree < 1:
        raise DegreeError("degree must be at least 1")
    alpha = Alphabet([(symbols[0], "L"), (symbols[1], "R")])

    def rule(w):
        net = sum(-1 if let.starred else 1 for let in w)
        return ONE if net == 0 else ZERO

    return MomentTable(alpha, degree, source=rule, star_symmetric=True)


def haar_unitary(degree: int, symbol: str = "u", side=None) -> MomentTable:
    """Single Haar unitary: moment 1 iff the net exponent vanishes."""
    alpha = Alphabet([(symbol, side)])

    def rule(w):
        net = sum(-1 if let.starred else 1 for let in w)
        return ONE if net == 0 else ZERO

    return MomentTable(alpha, degree, source=rule, tracial=True, star_symmetric=True)


def lr_pair(mu_single: MomentTable, degree: int | None = None,
            sides: Mapping[str, str] | None = None) -> MomentTable:
    """Left/right pair from a tracial single-variable table.

    ``phi_pair(w) = phi_single(w read in its colouring's order)``.  By default
    the first declared symbol becomes left and the second right.
    """
    mu_single.require_tracial()
    deg = mu_single.degree if degree is None else degree
    if deg > mu_single.degree:
        raise DegreeError(f"degree {deg} exceeds the single table's cap {mu_single.degree}")
    syms = [s for s, _ in mu_single.alphabet.symbols]
    if sides is None:
        if len(syms) != 2:
            raise AlphabetError("lr_pair needs explicit sides unless the alphabet has two symbols")
        sides = {syms[0]: "L", syms[1]: "R"}
    for s in syms:
        if sides.get(s) not in ("L", "R"):
            raise AlphabetError(f"symbol {s!r} needs side L or R")
    pair_alpha = Alphabet([(s, sides[s]) for s in syms])
    to_single = {let: mu_single.alphabet.letter(let.symbol, let.starred)
                 for let in pair_alpha.letters}

    def rule(w):
        return mu_single(tuple(to_single[let] for let in reorder(w)))

    return MomentTable(pair_alpha, deg, source=rule)


def bifree_join(mu1: MomentTable, mu2: MomentTable, degree: int | None = None) -> MomentTable:
    """Joint table with each family's own bi-free cumulants and no mixed ones."""
    deg = min(mu1.degree, mu2.degree) if degree is None else degree
    if deg > min(mu1.degree, mu2.degree):
        raise DegreeError("join degree exceeds a marginal's cap")
    alpha = mu1.alphabet.union(mu2.alphabet)
    fam1 = set(mu1.alphabet.letters)
    fam2 = set(mu2.alphabet.letters)
    k1 = mu1.engine("bifree")
    k2 = mu2.engine("bifree")

    def rule(w):
        if all(let in fam1 for let in w):
            return k1(w)
        if all(let in fam2 for let in w):
            return k2(w)
        return ZERO

    kappa = CumulantTable("bifree", alpha, deg, source=rule)
    return from_bifree_cumulants(kappa, deg)


def pushforward(mu: MomentTable, products: Mapping[str, tuple[str | None, NcPolynomial]],
                degree: int | None = None, *, order: Sequence[str] | None = None) -> MomentTable:
    """Distribution of new variables given as polynomials in ``mu``'s letters.

    ``products`` maps a new symbol to ``(side, polynomial)``; the starred
    letter maps to the polynomial's adjoint.  The degree cap is the largest
    ``k`` with ``k * max polynomial degree <= mu.degree`` unless given.
    """
    names = list(order) if order is not None else list(products)
    alpha = Alphabet([(s, products[s][0]) for s in names])
    img = {}
    for s in names:
        p = products[s][1]
        if not isinstance(p, NcPolynomial):
            p = NcPolynomial.word(mu.alphabet.parse(p) if isinstance(p, str) else p)
        img[alpha.letter(s, False)] = p
        img[alpha.letter(s, True)] = p.star()
    maxdeg = max(p.degree() for p in img.values())
    cap = mu.degree // max(maxdeg, 1)
    deg = cap if degree is None else degree
    if deg > cap:
        raise DegreeError(f"degree {deg} needs moments beyond the cap {mu.degree}")

    def rule(w):
        p = NcPolynomial.one()
        for let in w:
            p = p * img[let]
        return p.evaluate(mu)

    return MomentTable(alpha, deg, source=rule)


def multiply_free_haar(mu_xy: MomentTable, degree: int | None = None,
                       prefix: str = "u", unitary: MomentTable | None = None) -> MomentTable:
    """Distribution of ``(u a)`` for each symbol ``a`` with ``u`` unitary and *-free.

    ``u`` is a Haar unitary unless another single-symbol ``unitary`` table is
    given.  Words in the new letters expand to ``u a`` and ``a* u*``; the
    expanded word is evaluated in the free product, where mixed free
    cumulants between ``{u, u*}`` and the original letters vanish.  Output
    symbols are ``"(" + prefix + symbol + ")"``, e.g. ``(ux)``.
    """
    mu_xy.require_tracial()
    deg = mu_xy.degree if degree is None else degree
    if deg > mu_xy.degree:
        raise DegreeError(f"degree {deg} exceeds the input cap {mu_xy.degree}")
    if any(side is not None for _, side in mu_xy.alphabet.symbols):
        raise AlphabetError("multiply_free_haar expects an unsided alphabet")
    taken = {s for s, _ in mu_xy.alphabet.symbols}
    usym = prefix
    while usym in taken:
        usym += "_"
    if unitary is None:
        unitary = haar_unitary(deg, usym)
    else:
        if len(unitary.alphabet.symbols) != 1:
            raise AlphabetError("the unitary table must have a single symbol")
        if unitary.degree < deg:
            raise DegreeError(f"unitary table degree {unitary.degree} is below {deg}")
        unitary = unitary.rename({unitary.alphabet.symbols[0][0]: usym}).with_sides({usym: None})
    u, us = unitary.alphabet.letters
    joint = unitary.alphabet.union(mu_xy.alphabet)
    new = Alphabet([(f"({prefix}{s})", None) for s, _ in mu_xy.alphabet.symbols])
    expand = {}
    for s, _ in mu_xy.alphabet.symbols:
        a = mu_xy.alphabet.letter(s)
        expand[new.letter(f"({prefix}{s})")] = (u, a)
        expand[new.letter(f"({prefix}{s})", True)] = (a.star, us)
    fp = free_product_moments([unitary, mu_xy], 2 * deg, alphabet=joint)

    def rule(w):
        return fp(tuple(itertools.chain.from_iterable(expand[let] for let in w)))

    return MomentTable(new, deg, source=rule, tracial=True)


class _FreeProduct:
    """Moments in the free product of several unsided tables.

    First-block recursion where the block of position 0 may only contain
    positions of the same family (mixed free cumulants vanish).
    """

    def __init__(self, tables: Sequence[MomentTable], degree: int):
        self.degree = degree
        self.family = {}
        self.cum = []
        for i, t in enumerate(tables):
            for let in t.alphabet.letters:
                self.family[let] = i
            self.cum.append(t.engine("free"))
        self.cache: dict = {(): ONE}
        self._plans: dict = {}

    def _plan(self, fams: tuple):
        plan = self._plans.get(fams)
        if plan is None:
            n = len(fams)
            same = [r for r in range(1, n) if fams[r] == fams[0]]
            plan = []
            for bits in range(1 << len(same)):
                ranks = [0] + [r for j, r in enumerate(same) if bits >> j & 1]
                gaps = tuple(tuple(range(a + 1, b))
                             for a, b in zip(ranks, ranks[1:] + [n]) if b - a > 1)
                plan.append((tuple(ranks), gaps))
            self._plans[fams] = plan
        return plan

    def __call__(self, word):
        val = self.cache.get(word)
        if val is not None:
            return val
        if len(word) > self.degree:
            raise DegreeError(f"expanded word exceeds degree {self.degree}")
        fam = self.family
        fams = tuple(fam[let] for let in word)
        cum = self.cum[fams[0]]
        from .kernels import block_sum
        val = block_sum(word, self._plan(fams), cum.cache, cum.compute, self.cache, self)
        self.cache[word] = val
        return val


def free_product_moments(tables: Sequence[MomentTable], degree: int,
                         alphabet: Alphabet | None = None) -> MomentTable:
    """Moment table of the free product of unsided tables."""
    if alphabet is None:
        alphabet = tables[0].alphabet
        for t in tables[1:]:
            alphabet = alphabet.union(t.alphabet)
    fp = _FreeProduct(tables, degree)
    return MomentTable(alphabet, degree, source=fp)


__all__ = [
    "DEFAULT_DEGREE", "WordTable", "MomentTable", "CumulantTable", "SeriesTable",
    "BiCircularSpec", "series_from", "cumulants_to_moments", "from_bifree_cumulants",
    "bi_circular", "bi_circular_cumulants", "bi_haar", "haar_unitary", "lr_pair",
    "bifree_join", "pushforward", "multiply_free_haar", "free_product_moments",
]
