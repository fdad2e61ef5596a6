"""Set partitions, left/right colourings and the lattices built on them.

Points are numbered ``1..n``.  A colouring ``ChiMap`` marks every point as a
left (``"L"``) or right (``"R"``) point; its permutation ``s`` lists the left
points ascending followed by the right points descending, and the induced
total order lists points in that sequence.  Bi-non-crossing (BNC) and
bi-interval (BI) partitions are exactly the images of non-crossing and
interval partitions under ``s``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import LatticeError, SizeError
from .kernels import (
    rgs_canonical,
    rgs_is_interval,
    rgs_is_noncrossing,
    rgs_join,
    rgs_refines,
    set_partition_rgs,
)

RAW_ENUMERATION_CAP = 12

LEFT = "L"
RIGHT = "R"


class ChiMap:
    """A map ``{1..n} -> {L, R}`` with its sorting permutation."""

    __slots__ = ("labels", "_s", "_rank")

    def __init__(self, labels: Iterable[str] | str):
        labs = []
        for lab in labels:
            up = str(lab).upper()
            if up not in (LEFT, RIGHT):
                raise ValueError(f"chi labels must be L or R, got {lab!r}")
            labs.append(up)
        if not labs:
            raise SizeError("a chi map needs at least one point")
        self.labels = tuple(labs)
        lefts = [i + 1 for i, lab in enumerate(self.labels) if lab == LEFT]
        rights = [i + 1 for i, lab in enumerate(self.labels) if lab == RIGHT]
        self._s = tuple(lefts + rights[::-1])
        rank = [0] * len(self.labels)
        for pos, point in enumerate(self._s):
            rank[point - 1] = pos + 1
        self._rank = tuple(rank)

    @classmethod
    def constant(cls, label: str, n: int) -> "ChiMap":
        return cls(label * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def s(self) -> tuple[int, ...]:
        """``s[i-1] = s_chi(i)``; reading the points in order."""
        return self._s

    @property
    def rank(self) -> tuple[int, ...]:
        """Inverse of ``s``: ``rank[p-1]`` is the position of point ``p``."""
        return self._rank

    def num_left(self) -> int:
        return self.labels.count(LEFT)

    def is_constant(self) -> bool:
        return len(set(self.labels)) == 1

    def precedes(self, p: int, q: int) -> bool:
        """``p`` comes strictly before ``q`` in the induced order."""
        return self._rank[p - 1] < self._rank[q - 1]

    def restrict(self, points: Sequence[int]) -> "ChiMap":
        return ChiMap(self.labels[p - 1] for p in sorted(points))

    def doubled(self) -> "ChiMap":
        """Each point ``k`` becomes the two points ``2k-1, 2k`` with its label."""
        return ChiMap(lab for lab in self.labels for _ in range(2))

    def __str__(self):
        return "".join(self.labels)

    def __repr__(self):
        return f"ChiMap({''.join(self.labels)!r})"

    def __eq__(self, other):
        return isinstance(other, ChiMap) and self.labels == other.labels

    def __hash__(self):
        return hash(("ChiMap", self.labels))

    def __len__(self):
        return len(self.labels)


def s_chi(chi: ChiMap) -> tuple[int, ...]:
    """The permutation: left points ascending, then right points descending."""
    return chi.s


class SetPartition:
    """A partition of ``{1..n}`` in canonical form.

    Blocks are sorted tuples ordered by their minima.  ``len(pi)`` is the
    number of blocks; ``pi <= sigma`` means ``pi`` refines ``sigma``.
    """

    __slots__ = ("n", "blocks", "_rgs", "_hash")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        bl = [tuple(sorted(b)) for b in blocks]
        if any(len(b) == 0 for b in bl):
            raise LatticeError("blocks must be nonempty")
        pts = [p for b in bl for p in b]
        if n is None:
            n = len(pts)
        if sorted(pts) != list(range(1, n + 1)):
            raise LatticeError(f"blocks {bl} do not partition 1..{n}")
        bl.sort()
        self.n = n
        self.blocks = tuple(bl)
        labels = [0] * n
        for idx, b in enumerate(self.blocks):
            for p in b:
                labels[p - 1] = idx
        self._rgs = tuple(labels)
        self._hash = hash(self.blocks)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(rgs):
            groups.setdefault(lab, []).append(i + 1)
        return cls(groups.values(), len(rgs))

    @classmethod
    def top(cls, n: int) -> "SetPartition":
        return cls([range(1, n + 1)], n)

    @classmethod
    def bottom(cls, n: int) -> "SetPartition":
        return cls([[i] for i in range(1, n + 1)], n)

    @property
    def rgs(self) -> tuple[int, ...]:
        return self._rgs

    def block_of(self, p: int) -> tuple[int, ...]:
        return self.blocks[self._rgs[p - 1]]

    def same_block(self, p: int, q: int) -> bool:
        return self._rgs[p - 1] == self._rgs[q - 1]

    def apply(self, perm: Sequence[int]) -> "SetPartition":
        """Image under a permutation given as ``perm[i-1] = perm(i)``."""
        return SetPartition([[perm[p - 1] for p in b] for b in self.blocks], self.n)

    def preimage(self, perm: Sequence[int]) -> "SetPartition":
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p - 1] = i + 1
        return self.apply(inv)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __le__(self, other: "SetPartition") -> bool:
        _check_sizes(self.n, other.n)
        return rgs_refines(self._rgs, other._rgs)

    def __lt__(self, other: "SetPartition") -> bool:
        return self != other and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return "{" + inner + "}"


def _check_sizes(n1: int, n2: int) -> None:
    if n1 != n2:
        raise SizeError(f"size mismatch: {n1} vs {n2}")


def interval_pairing(n: int) -> SetPartition:
    """``{{1,2},{3,4},...}`` on an even number of points."""
    if n % 2:
        raise SizeError("interval pairing needs an even number of points")
    return SetPartition([(2 * k + 1, 2 * k + 2) for k in range(n // 2)], n)


# ---------------------------------------------------------------------------
# enumeration

def _check_n(n: int, cap: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise SizeError(f"n must be a positive integer, got {n!r}")
    if n > cap:
        raise SizeError(f"n={n} exceeds the enumeration cap {cap}")


def enumerate_set_partitions(n: int, cap: int = RAW_ENUMERATION_CAP) -> list[SetPartition]:
    """All partitions of ``{1..n}``, ordered by restricted growth string."""
    _check_n(n, cap)
    return [SetPartition.from_rgs(r) for r in set_partition_rgs(n)]


@lru_cache(maxsize=None)
def _nc_rgs(n: int) -> tuple[tuple[int, ...], ...]:
    # grow a non-crossing partition left to right: point i either opens a new
    # block or joins a block that is still "open" (visible from the right)
    out = []
    labels = [0] * n

    def rec(i, nblocks, stack):
        if i == n:
            out.append(tuple(labels))
            return
        # join an open block; only the innermost open blocks are visible,
        # joining stack[k] closes everything above it
        for k in range(len(stack)):
            labels[i] = stack[k]
            rec(i + 1, nblocks, stack[: k + 1])
        labels[i] = nblocks
        rec(i + 1, nblocks + 1, stack + (nblocks,))

    rec(0, 0, ())
    return tuple(sorted(out))


def enumerate_noncrossing(n: int, cap: int = 16) -> list[SetPartition]:
    _check_n(n, cap)
    return [SetPartition.from_rgs(r) for r in _nc_rgs(n)]


@lru_cache(maxsize=None)
def _interval_rgs(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for mask in range(1 << (n - 1)):
        lab, labels = 0, [0]
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                lab += 1
            labels.append(lab)
        out.append(tuple(labels))
    return tuple(sorted(out))


def enumerate_interval(n: int, cap: int = 20) -> list[SetPartition]:
    _check_n(n, cap)
    return [SetPartition.from_rgs(r) for r in _interval_rgs(n)]


def enumerate_bnc(chi: ChiMap) -> list[SetPartition]:
    """BNC(chi) as images ``s . sigma`` of non-crossing ``sigma``."""
    out = [p.apply(chi.s) for p in enumerate_noncrossing(chi.n)]
    out.sort(key=lambda p: p.rgs)
    return out


def enumerate_bi(chi: ChiMap) -> list[SetPartition]:
    """BI(chi) as images of interval partitions."""
    out = [p.apply(chi.s) for p in enumerate_interval(chi.n)]
    out.sort(key=lambda p: p.rgs)
    return out


# ---------------------------------------------------------------------------
# predicates

def is_noncrossing(pi: SetPartition) -> bool:
    return rgs_is_noncrossing(pi.rgs)


def is_interval(pi: SetPartition) -> bool:
    return rgs_is_interval(pi.rgs)


def is_bnc(pi: SetPartition, chi: ChiMap) -> bool:
    _check_sizes(pi.n, chi.n)
    return is_noncrossing(pi.preimage(chi.s))


def is_bi_interval(pi: SetPartition, chi: ChiMap) -> bool:
    _check_sizes(pi.n, chi.n)
    return is_interval(pi.preimage(chi.s))


# ---------------------------------------------------------------------------
# lattice operations

def join(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """Least common coarsening in the lattice of all partitions.

    Callers only ever ask whether a join equals the top element.  A join taken
    inside BNC(chi) is at least as coarse as this one and is the top whenever
    this one is, and conversely the top is always in BNC(chi); so testing the
    full-lattice join against ``1_n`` gives the same answer.
    """
    _check_sizes(pi.n, sigma.n)
    return SetPartition.from_rgs(rgs_join(pi.rgs, sigma.rgs))


def join_is_top(pi: SetPartition, sigma: SetPartition) -> bool:
    _check_sizes(pi.n, sigma.n)
    return max(rgs_join(pi.rgs, sigma.rgs)) == 0


def pairing_join_is_full(pi: SetPartition, chi_hat: ChiMap) -> bool:
    """Connectivity test for doubled colourings.

    True iff ``s(1) ~ s(n)`` and ``s(2i) ~ s(2i+1)`` in ``pi`` for every
    ``i``, where ``s`` is the permutation of ``chi_hat``.  For ``pi`` in
    BNC(chi_hat) with even blocks this is equivalent to ``pi`` joined with
    ``{{1,2},{3,4},...}`` being the top partition; outside BNC(chi_hat) the
    two conditions can differ (e.g. the crossing pairing ``{{1,3},{2,4}}``).
    """
    n = pi.n
    _check_sizes(n, chi_hat.n)
    if n % 2:
        raise SizeError("pairing_join_is_full needs an even number of points")
    if any(len(b) % 2 for b in pi.blocks):
        raise LatticeError("pairing_join_is_full needs all blocks of even size")
    s = chi_hat.s
    if not pi.same_block(s[0], s[n - 1]):
        return False
    return all(pi.same_block(s[2 * i - 1], s[2 * i]) for i in range(1, n // 2))


# ---------------------------------------------------------------------------
# Moebius functions

LATTICE_KINDS = ("NC", "IN", "BNC", "BI")


class MobiusCache:
    """Memoised Moebius values of NC(n) and IN(n).

    Values for BNC(chi) and BI(chi) are read off their preimages in NC(n) and
    IN(n), so one table per ``(kind, n, upper element)`` serves every colouring.
    Dict writes are idempotent, and a lock guards table construction.
    """

    def __init__(self):
        self._tables: dict[tuple, dict[tuple[int, ...], int]] = {}
        self._lock = threading.Lock()

    def _elements(self, kind: str, n: int):
        return _nc_rgs(n) if kind == "NC" else _interval_rgs(n)

    def table(self, kind: str, sigma: SetPartition) -> dict[tuple[int, ...], int]:
        """``{rgs(pi): mu(pi, sigma)}`` for every lattice element ``pi <= sigma``."""
        key = (kind, sigma.rgs)
        tab = self._tables.get(key)
        if tab is not None:
            return tab
        with self._lock:
            tab = self._tables.get(key)
            if tab is None:
                tab = self._build(kind, sigma)
                self._tables[key] = tab
        return tab

    def _build(self, kind, sigma):
        below = [r for r in self._elements(kind, sigma.n) if rgs_refines(r, sigma.rgs)]
        # coarser elements have fewer blocks; process by decreasing block count
        below.sort(key=lambda r: max(r))
        tab: dict[tuple[int, ...], int] = {}
        for r in below:
            if r == sigma.rgs:
                tab[r] = 1
                continue
            nb = max(r)
            tab[r] = -sum(v for t, v in tab.items() if max(t) < nb and rgs_refines(r, t))
        return tab

    def value(self, kind: str, pi: SetPartition, sigma: SetPartition) -> int:
        val = self.table(kind, sigma).get(pi.rgs)
        if val is None:
            raise LatticeError(f"{pi} is not below {sigma} in {kind}({pi.n})")
        return val


_CACHE = MobiusCache()


def mobius(kind: str, pi: SetPartition, sigma: SetPartition,
           chi: ChiMap | None = None) -> int:
    """Moebius function of NC, IN, BNC(chi) or BI(chi) on ``[pi, sigma]``."""
    kind = kind.upper()
    if kind not in LATTICE_KINDS:
        raise ValueError(f"unknown lattice kind {kind!r}")
    _check_sizes(pi.n, sigma.n)
    if kind in ("BNC", "BI"):
        if chi is None:
            raise ValueError(f"{kind} needs a chi map")
        _check_sizes(pi.n, chi.n)
        pi, sigma = pi.preimage(chi.s), sigma.preimage(chi.s)
        kind = "NC" if kind == "BNC" else "IN"
    member = is_noncrossing if kind == "NC" else is_interval
    for p in (pi, sigma):
        if not member(p):
            raise LatticeError(f"{p} is not in {kind}({p.n})")
    if not pi <= sigma:
        raise LatticeError(f"{pi} does not refine {sigma}")
    if kind == "IN" and sigma == SetPartition.top(pi.n):
        return (-1) ** (len(pi) - 1)
    return _CACHE.value(kind, pi, sigma)


# ---------------------------------------------------------------------------
# Kreweras complement

def kreweras(pi: SetPartition) -> SetPartition:
    """Kreweras complement, as the cycles of ``P^-1 o gamma``.

    ``P`` is the permutation whose cycles are the blocks of ``pi`` traversed
    increasingly and ``gamma = (1 2 ... n)``.
    """
    if not is_noncrossing(pi):
        raise LatticeError(f"{pi} is crossing; Kreweras complement undefined")
    n = pi.n
    inv_p = [0] * (n + 1)
    for b in pi.blocks:
        for i, p in enumerate(b):
            inv_p[b[(i + 1) % len(b)]] = p
    perm = [0] * (n + 1)
    for i in range(1, n + 1):
        perm[i] = inv_p[i % n + 1]
    seen = [False] * (n + 1)
    blocks = []
    for i in range(1, n + 1):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = perm[j]
            blocks.append(cyc)
    return SetPartition(blocks, n)


__all__ = [
    "ChiMap", "SetPartition", "MobiusCache", "LEFT", "RIGHT",
    "s_chi", "interval_pairing",
    "enumerate_set_partitions", "enumerate_noncrossing", "enumerate_interval",
    "enumerate_bnc", "enumerate_bi",
    "is_noncrossing", "is_interval", "is_bnc", "is_bi_interval",
    "join", "join_is_top", "pairing_join_is_full", "mobius", "kreweras",
    "rgs_canonical",
]
