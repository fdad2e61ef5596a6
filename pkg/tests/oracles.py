"""Slow reference implementations used only by the tests."""

from functools import lru_cache

from twofaced.kernels import ONE, ZERO
from twofaced.ncpoly import chi_of
from twofaced.partitions import (
    enumerate_set_partitions,
    is_bi_interval,
    is_bnc,
    is_interval,
    is_noncrossing,
)


def members(kind, w):
    parts = enumerate_set_partitions(len(w))
    if kind == "free":
        return [p for p in parts if is_noncrossing(p)]
    if kind == "boolean":
        return [p for p in parts if is_interval(p)]
    chi = chi_of(w)
    test = is_bnc if kind == "bifree" else is_bi_interval
    return [p for p in parts if test(p, chi)]


def brute_cumulant(kind, mu, w):
    """Cumulant by the defining recursion phi(w) = sum over the lattice of kappa_pi."""

    @lru_cache(maxsize=None)
    def kappa(word):
        if not word:
            return ONE
        total = mu(word)
        for p in members(kind, word):
            if len(p) == 1:
                continue
            term = ONE
            for block in p.blocks:
                term = term * kappa(tuple(word[i - 1] for i in block))
            total = total - term
        return total

    return kappa(tuple(w))


def brute_moment(kind, cum, w):
    """phi(w) as the lattice sum of products of cumulant values."""
    total = ZERO
    for p in members(kind, w):
        term = ONE
        for block in p.blocks:
            term = term * cum(tuple(w[i - 1] for i in block))
        total = total + term
    return total
