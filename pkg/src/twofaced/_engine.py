"""First-block recursion shared by the four moment/cumulant transforms.

For a word ``w`` with colouring ``chi``, read the positions in the order
given by ``chi``'s permutation ``s`` ("ranks").  BNC(chi) and BI(chi) are
the images under ``s`` of NC(n) and IN(n), so a partition is determined by
the block ``V`` holding rank 1 plus independent partitions of the rank
intervals ("gaps") that ``V`` leaves uncovered.  Summing the inner
partitions of each gap gives the moment of the gap, hence

    phi(w) = sum_{V containing rank 1} kappa(w|V) * prod_{gaps G} phi(w|G)

with every restricted word read in natural position order.  For interval
lattices ``V`` must be a rank prefix and there is exactly one gap.  The
free and Boolean transforms are the same recursion with ``s`` = identity.
"""

from __future__ import annotations

import threading

from .errors import AlphabetError, DegreeError
from .kernels import ONE, block_sum

NC_FAMILY = "nc"
INTERVAL_FAMILY = "interval"

KIND_FAMILY = {
    "free": NC_FAMILY,
    "bifree": NC_FAMILY,
    "boolean": INTERVAL_FAMILY,
    "biboolean": INTERVAL_FAMILY,
}
SIDED_KINDS = ("bifree", "biboolean")
KINDS = ("free", "boolean", "bifree", "biboolean")


def order_of(sides: tuple) -> tuple[int, ...]:
    """0-based positions listed in rank order: lefts ascending, rights descending."""
    lefts = [i for i, s in enumerate(sides) if s == "L"]
    rights = [i for i, s in enumerate(sides) if s == "R"]
    return tuple(lefts + rights[::-1])


class Plan:
    """Precomputed ``(V, gaps)`` index tuples for one colouring.

    ``by_size[k]`` lists the entries whose first block has ``k`` points and
    is not the whole word; ``full`` is the single entry with ``V`` = all.
    """

    __slots__ = ("n", "by_size", "full", "_active")

    def __init__(self, family: str, order: tuple[int, ...]):
        n = len(order)
        self.n = n
        self.by_size: dict[int, list] = {}
        self._active: dict[frozenset, list] = {}
        if family == NC_FAMILY:
            entries = _nc_entries(order)
        else:
            entries = _interval_entries(order)
        for v, gaps in entries:
            if len(v) == n:
                self.full = (v, gaps)
            else:
                self.by_size.setdefault(len(v), []).append((v, gaps))

    def active(self, zero_sizes: frozenset) -> list:
        """Proper entries whose first-block size is not known to vanish."""
        lst = self._active.get(zero_sizes)
        if lst is None:
            lst = []
            for k in sorted(self.by_size):
                if k not in zero_sizes:
                    lst.extend(self.by_size[k])
            self._active[zero_sizes] = lst
        return lst


def _nc_entries(order):
    n = len(order)
    out = []
    for mask in range(1 << (n - 1)):
        ranks = [0] + [r for r in range(1, n) if mask >> (r - 1) & 1]
        gaps = []
        for a, b in zip(ranks, ranks[1:] + [n]):
            if b - a > 1:
                gaps.append(tuple(sorted(order[r] for r in range(a + 1, b))))
        v = tuple(sorted(order[r] for r in ranks))
        out.append((v, tuple(gaps)))
    return out


def _interval_entries(order):
    n = len(order)
    out = []
    for j in range(1, n + 1):
        v = tuple(sorted(order[:j]))
        rest = tuple(sorted(order[j:]))
        out.append((v, (rest,) if rest else ()))
    return out


_PLANS: dict[tuple, Plan] = {}
_PLAN_LOCK = threading.Lock()


def plan_for(family: str, sides: tuple) -> Plan:
    key = (family, sides)
    plan = _PLANS.get(key)
    if plan is None:
        with _PLAN_LOCK:
            plan = _PLANS.get(key)
            if plan is None:
                plan = Plan(family, order_of(sides))
                _PLANS[key] = plan
    return plan


def word_sides(word, sided: bool) -> tuple:
    if not sided:
        return ("L",) * len(word)
    sides = tuple(let.side for let in word)
    if None in sides:
        raise AlphabetError(f"word {' '.join(map(str, word))} has unsided letters")
    return sides


class MomentsToCumulants:
    """Lazy, memoised cumulants of one moment functional.

    ``mcache``/``mfun`` give moments of words (dict lookup, then compute).
    ``zero_sizes`` may be extended by callers that have verified every
    cumulant of a given length vanishes; matching terms are then skipped.
    """

    def __init__(self, kind: str, mcache: dict, mfun, degree: int):
        if kind not in KINDS:
            raise ValueError(f"unknown cumulant kind {kind!r}")
        self.kind = kind
        self.family = KIND_FAMILY[kind]
        self.sided = kind in SIDED_KINDS
        self.mcache = mcache
        self.mfun = mfun
        self.degree = degree
        self.cache: dict = {}
        self.zero_sizes: frozenset = frozenset()

    def mark_zero_size(self, k: int) -> None:
        self.zero_sizes = self.zero_sizes | {k}

    def __call__(self, word) -> object:
        val = self.cache.get(word)
        if val is None:
            val = self.compute(word)
        return val

    def compute(self, word):
        word = tuple(word)
        n = len(word)
        if n == 0:
            raise ValueError("cumulants are defined for nonempty words")
        if n > self.degree:
            raise DegreeError(f"word of length {n} exceeds degree cap {self.degree}")
        mom = self.mcache.get(word)
        if mom is None:
            mom = self.mfun(word)
        if n == 1:
            val = mom
        else:
            plan = plan_for(self.family, word_sides(word, self.sided))
            val = mom - block_sum(word, plan.active(self.zero_sizes),
                                  self.cache, self.compute, self.mcache, self.mfun)
        self.cache[word] = val
        return val


class CumulantsToMoments:
    """Lazy, memoised moments from a cumulant functional.

    ``ccache``/``cfun`` give cumulants; moments of sub-words are read back
    through ``mcache``/``mfun`` so the owning table's memo is shared.
    """

    def __init__(self, kind: str, ccache: dict, cfun, degree: int,
                 zero_sizes=frozenset()):
        if kind not in KINDS:
            raise ValueError(f"unknown cumulant kind {kind!r}")
        self.kind = kind
        self.family = KIND_FAMILY[kind]
        self.sided = kind in SIDED_KINDS
        self.ccache = ccache
        self.cfun = cfun
        self.degree = degree
        self.zero_sizes = frozenset(zero_sizes)
        self.mcache: dict = {(): ONE}
        self.mfun = self._compute_and_store

    def bind(self, mcache: dict, mfun) -> None:
        self.mcache = mcache
        self.mfun = mfun

    def _compute_and_store(self, word):
        val = self.compute(word)
        self.mcache[word] = val
        return val

    def compute(self, word):
        word = tuple(word)
        n = len(word)
        if n == 0:
            return ONE
        if n > self.degree:
            raise DegreeError(f"word of length {n} exceeds degree cap {self.degree}")
        plan = plan_for(self.family, word_sides(word, self.sided))
        total = block_sum(word, plan.active(self.zero_sizes),
                          self.ccache, self.cfun, self.mcache, self.mfun)
        if n not in self.zero_sizes:
            total = total + block_sum(word, (plan.full,), self.ccache, self.cfun,
                                      self.mcache, self.mfun)
        return total
