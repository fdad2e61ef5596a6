"""Moment/cumulant transforms, block-multiplicative evaluation and
independence tests by vanishing of mixed cumulants."""

from __future__ import annotations

from typing import Mapping

from .distribution import CumulantTable, MomentTable, cumulants_to_moments
from .errors import AlphabetError, LatticeError
from .kernels import ONE, GaussianRational
from .ncpoly import Word, chi_of, word_str
from .partitions import SetPartition, is_bi_interval, is_bnc, is_interval, is_noncrossing
from .verdict import Verdict


def _word(mu: MomentTable, w) -> Word:
    return mu.alphabet.parse(w) if isinstance(w, str) else tuple(w)


def moments_to_bifree(mu: MomentTable, w) -> GaussianRational:
    """Bi-free cumulant of the word, coloured by its letters' sides."""
    return mu.cumulant("bifree", _word(mu, w))


def moments_to_biboolean(mu: MomentTable, w) -> GaussianRational:
    return mu.cumulant("biboolean", _word(mu, w))


def moments_to_free(mu: MomentTable, w) -> GaussianRational:
    """Free cumulant of the letter sequence; sides are ignored."""
    return mu.cumulant("free", _word(mu, w))


def moments_to_boolean(mu: MomentTable, w) -> GaussianRational:
    return mu.cumulant("boolean", _word(mu, w))


TRANSFORMS = {
    "bifree": moments_to_bifree,
    "biboolean": moments_to_biboolean,
    "free": moments_to_free,
    "boolean": moments_to_boolean,
}


def cumulant_table(mu: MomentTable, kind: str, degree: int | None = None) -> CumulantTable:
    """Lazy cumulant table of ``mu``."""
    return CumulantTable.from_moments(kind, mu, degree)


def moments_from_cumulants(table: CumulantTable, degree: int | None = None) -> MomentTable:
    """Inverse transform for any of the four kinds."""
    return cumulants_to_moments(table, degree)


def _in_lattice(kind: str, pi: SetPartition, w: Word) -> bool:
    if kind == "free":
        return is_noncrossing(pi)
    if kind == "boolean":
        return is_interval(pi)
    chi = chi_of(w)
    if kind == "bifree":
        return is_bnc(pi, chi)
    if kind == "biboolean":
        return is_bi_interval(pi, chi)
    raise ValueError(f"unknown kind {kind!r}")


def multiplicative_eval(kind: str, pi: SetPartition, w, table) -> GaussianRational:
    """Product over blocks of ``table`` on the block's letters in natural order.

    ``table`` is a CumulantTable or a MomentTable (the latter giving
    ``phi_pi``); ``pi`` must lie in the lattice of ``kind`` for the word's
    colouring.
    """
    if isinstance(w, str):
        w = table.alphabet.parse(w)
    w = tuple(w)
    if pi.n != len(w):
        raise LatticeError(f"partition of {pi.n} points for a word of length {len(w)}")
    if not _in_lattice(kind, pi, w):
        raise LatticeError(f"{pi!r} is not in the {kind} lattice of {word_str(w)}")
    val = ONE
    for block in pi.blocks:
        val = val * table(tuple(w[i - 1] for i in block))
        if not val:
            break
    return val


def _family_map(mu: MomentTable, grouping: Mapping) -> dict:
    """Letter -> family from a symbol- or letter-keyed grouping."""
    fam = {}
    for let in mu.alphabet.letters:
        for key in (let, str(let), let.symbol):
            if key in grouping:
                fam[let] = grouping[key]
                break
        else:
            raise AlphabetError(f"grouping does not cover letter {let}")
    return fam


def _independence(kind: str, mu: MomentTable, grouping: Mapping,
                  degree: int | None) -> Verdict:
    fam = _family_map(mu, grouping)
    deg = mu.degree if degree is None else min(degree, mu.degree)
    eng = mu.engine(kind)
    checked = 0
    for w in mu.words(deg):
        if len(w) < 2 or len({fam[let] for let in w}) < 2:
            continue
        checked += 1
        val = eng(w)
        if val:
            return Verdict.fail(w, val, kind=kind, checked=checked)
    return Verdict.ok(kind=kind, checked=checked, degree=deg)


def test_bifree_independence(mu: MomentTable, grouping: Mapping, degree: int | None = None) -> Verdict:
    """PASS iff every mixed-family bi-free cumulant up to ``degree`` vanishes."""
    return _independence("bifree", mu, grouping, degree)


def test_biboolean_independence(mu: MomentTable, grouping: Mapping, degree: int | None = None) -> Verdict:
    """PASS iff every mixed-family bi-Boolean cumulant up to ``degree`` vanishes."""
    return _independence("biboolean", mu, grouping, degree)


# keep pytest from collecting the two checkers when imported into test modules
test_bifree_independence.__test__ = False
test_biboolean_independence.__test__ = False


__all__ = [
    "moments_to_bifree", "moments_to_biboolean", "moments_to_free", "moments_to_boolean",
    "TRANSFORMS", "cumulant_table", "moments_from_cumulants", "multiplicative_eval",
    "test_bifree_independence", "test_biboolean_independence",
]
