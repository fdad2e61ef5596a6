"""Seeded random generators for exact test tables.

Every generator takes a ``random.Random`` (or a seed) so that suites are
reproducible; values are small Gaussian rationals to keep exact
arithmetic cheap.
"""

from __future__ import annotations

import random

from .diagonal import DeterminingSequences, all_chis, from_determining_sequences, is_alternating
from .distribution import BiCircularSpec, CumulantTable, MomentTable, cumulants_to_moments
from .kernels import ONE, ZERO, GaussianRational
from .ncpoly import Alphabet


def rng_of(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def small_scalar(rng, complex_values: bool = True, zero_weight: float = 0.0) -> GaussianRational:
    """Numerators in [-3, 3], denominators in {1, 2}."""
    if zero_weight and rng.random() < zero_weight:
        return ZERO
    re = GaussianRational(rng.randint(-3, 3)) / rng.choice((1, 2))
    if not complex_values:
        return re
    im = GaussianRational(rng.randint(-3, 3)) / rng.choice((1, 2))
    return re + im * GaussianRational(0, 1)


def random_moment_table(alphabet: Alphabet, degree: int, seed=0, complex_values=True) -> MomentTable:
    """Arbitrary (non-tracial) moments; every word gets an independent value."""
    rng = rng_of(seed)
    moments = {w: small_scalar(rng, complex_values) for w in alphabet.words_upto(degree)}
    return MomentTable(alphabet, degree, moments)


def _cyclic_rep(w: tuple) -> tuple:
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def random_tracial_table(alphabet: Alphabet, degree: int, seed=0, support=None,
                         complex_values=True) -> MomentTable:
    """Tracial table from free cumulants that are constant on cyclic classes.

    ``support(word)`` may restrict which classes get a nonzero cumulant.
    """
    rng = rng_of(seed)
    idx = {let: i for i, let in enumerate(alphabet.letters)}
    values: dict = {}
    for w in alphabet.words_upto(degree):
        key = _cyclic_rep(tuple(idx[let] for let in w))
        if key not in values:
            values[key] = small_scalar(rng, complex_values) if (support is None or support(w)) else ZERO
    kappa = CumulantTable("free", alphabet, degree,
                          source=lambda w: values[_cyclic_rep(tuple(idx[let] for let in w))])
    return cumulants_to_moments(kappa, degree, tracial=True)


def cyclically_alternating(w) -> bool:
    """Even length and stars alternate around the cycle."""
    return len(w) % 2 == 0 and all(w[i].starred != w[i - 1].starred for i in range(len(w)))


def random_r_diagonal_single(degree: int, seed=0, symbols=("x", "y")) -> MomentTable:
    """Tracial single-variable table whose left/right pair is R-diagonal."""
    alpha = Alphabet([(s, None) for s in symbols])
    return random_tracial_table(alpha, degree, seed, support=cyclically_alternating)


def haar_single(degree: int, symbols=("x", "y")) -> MomentTable:
    """``x = y = u`` for a Haar unitary ``u``."""
    alpha = Alphabet([(s, None) for s in symbols])

    def rule(w):
        return ONE if sum(-1 if let.starred else 1 for let in w) == 0 else ZERO

    return MomentTable(alpha, degree, source=rule, tracial=True, star_symmetric=True)


def random_sequences(degree: int, seed=0, complex_values=True) -> DeterminingSequences:
    rng = rng_of(seed)
    seq = DeterminingSequences(degree=degree)
    for n in range(2, degree + 1, 2):
        for chi in all_chis(n):
            seq.alpha[str(chi)] = small_scalar(rng, complex_values)
            seq.beta[str(chi)] = small_scalar(rng, complex_values)
    return seq


def random_r_diagonal_pair(degree: int, seed=0, alphabet: Alphabet | None = None):
    seq = random_sequences(degree, seed)
    return from_determining_sequences(seq, alphabet, degree), seq


def random_covariance(seed=0) -> BiCircularSpec:
    """A positive semidefinite Hermitian 2x2 covariance."""
    rng = rng_of(seed)
    while True:
        c_ll = GaussianRational(rng.randint(0, 4)) / rng.choice((1, 2))
        c_rr = GaussianRational(rng.randint(0, 4)) / rng.choice((1, 2))
        c_lr = small_scalar(rng)
        if c_ll.real * c_rr.real - c_lr.abs2() >= 0:
            return BiCircularSpec(c_ll, c_lr, c_rr)


def eta_diagonal_table(degree: int, seed=0, alphabet: Alphabet | None = None,
                       density: float = 0.5) -> MomentTable:
    """Pair whose bi-Boolean cumulants live on alternating words only."""
    rng = rng_of(seed)
    alphabet = alphabet or Alphabet([("x", "L"), ("y", "R")])
    values = {}
    for w in alphabet.words_upto(degree):
        if is_alternating(w):
            values[w] = small_scalar(rng, zero_weight=1 - density)
    table = CumulantTable("biboolean", alphabet, degree, values, sparse=True)
    return cumulants_to_moments(table, degree)


def star_symmetric_single(degree: int, seed=0, symbol: str = "x") -> MomentTable:
    """Star-symmetric single-symbol table: ``phi(w*) = conj(phi(w))``."""
    rng = rng_of(seed)
    alpha = Alphabet([(symbol, None)])
    moments = {}
    for w in alpha.words_upto(degree):
        if w in moments:
            continue
        ws = tuple(let.star for let in reversed(w))
        if ws == w:
            moments[w] = small_scalar(rng, complex_values=False)
        else:
            v = small_scalar(rng)
            moments[w] = v
            moments[ws] = v.conjugate()
    return MomentTable(alpha, degree, moments, star_symmetric=True)


WITNESS_FAMILIES = {"xx*": "Z1A1Z2A2Z3", "x*x": "WA2Z3A1Z2", "x": "(AB)^n"}


def witness_family_table(degree: int, seed=0, family: str = "xx*", symbol: str = "x"):
    """Star-symmetric single-variable table whose only nonzero moment (up to
    adjoints) lies in one witness family; returns ``(table, expected chain)``.

    ``"xx*"``: ``(xx*)^k``; ``"x*x"``: ``(x*x)^k``; ``"x"``: ``x^n`` and ``x*^n``.
    """
    rng = rng_of(seed)
    if family not in WITNESS_FAMILIES:
        raise ValueError(f"family must be one of {sorted(WITNESS_FAMILIES)}")
    alpha = Alphabet([(symbol, None)])
    x, xs = alpha.letter(symbol), alpha.letter(symbol, True)
    moments = {}
    while True:
        v = small_scalar(rng, complex_values=(family == "x"))
        if v:
            break
    if family == "x":
        n = rng.randint(1, degree)
        moments[(x,) * n] = v
        moments[(xs,) * n] = v.conjugate()
    else:
        k = rng.randint(1, degree // 2)
        pair = (x, xs) if family == "xx*" else (xs, x)
        moments[pair * k] = v
    table = MomentTable(alpha, degree, moments, sparse=True, star_symmetric=True)
    return table, WITNESS_FAMILIES[family]


__all__ = [
    "rng_of", "small_scalar", "random_moment_table", "random_tracial_table",
    "cyclically_alternating", "random_r_diagonal_single", "haar_single",
    "random_sequences", "random_r_diagonal_pair", "random_covariance",
    "eta_diagonal_table", "star_symmetric_single", "WITNESS_FAMILIES", "witness_family_table",
]
