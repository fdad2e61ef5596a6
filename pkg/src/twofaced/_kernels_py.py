"""Pure-Python kernels: exact Gaussian rationals, partition primitives and
the block-summation loop behind every moment/cumulant transform.

``_kernels.pyx`` is a line-for-line compiled twin of this module; the
package picks one of the two at import time (see ``twofaced.kernels``).
Both must stay behaviourally identical -- ``tests/test_kernels.py`` runs
the same checks against each.
"""

from fractions import Fraction
from math import gcd

BACKEND = "python"


def _split(value):
    """Return ``(a, b, d)`` integers with ``value == (a + b*i) / d``."""
    if isinstance(value, GaussianRational):
        return value._a, value._b, value._d
    if isinstance(value, int):
        return value, 0, 1
    if isinstance(value, Fraction):
        return value.numerator, 0, value.denominator
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def _make(a, b, d):
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    obj = object.__new__(GaussianRational)
    obj._a = a
    obj._b = b
    obj._d = d
    return obj


class GaussianRational:
    """Exact element of Q(i), stored as ``(a + b*i) / d`` in lowest terms."""

    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, GaussianRational) and not im:
            return re
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return _make(re.numerator * (d // re.denominator),
                     im.numerator * (d // im.denominator), d)

    @classmethod
    def from_parts(cls, re_num, re_den, im_num, im_den):
        if re_den == 0 or im_den == 0:
            raise ZeroDivisionError("zero denominator")
        return cls(Fraction(re_num, re_den), Fraction(im_num, im_den))

    def to_parts(self):
        re, im = self.real, self.imag
        return (re.numerator, re.denominator, im.numerator, im.denominator)

    @property
    def real(self):
        return Fraction(self._a, self._d)

    @property
    def imag(self):
        return Fraction(self._b, self._d)

    def is_real(self):
        return self._b == 0

    def conjugate(self):
        return _make(self._a, -self._b, self._d)

    def abs2(self):
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __neg__(self):
        return _make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            a2, b2, d2 = _split(other)
        except TypeError:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        if d1 == d2:
            return _make(a1 + a2, b1 + b2, d1)
        return _make(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            a2, b2, d2 = _split(other)
        except TypeError:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        if d1 == d2:
            return _make(a1 - a2, b1 - b2, d1)
        return _make(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            a2, b2, d2 = _split(other)
        except TypeError:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        if b1 == 0 and b2 == 0:
            return _make(a1 * a2, 0, d1 * d2)
        return _make(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            a2, b2, d2 = _split(other)
        except TypeError:
            return NotImplemented
        n2 = a2 * a2 + b2 * b2
        if n2 == 0:
            raise ZeroDivisionError("division by zero")
        a1, b1, d1 = self._a, self._b, self._d
        # (a1+b1 i)/d1 * d2 (a2 - b2 i) / n2
        return _make((a1 * a2 + b1 * b2) * d2, (b1 * a2 - a1 * b2) * d2, d1 * n2)

    def __rtruediv__(self, other):
        try:
            return _make(*_split(other)).__truediv__(self)
        except TypeError:
            return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** -k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            a2, b2, d2 = _split(other)
        except TypeError:
            return NotImplemented
        return self._a == a2 and self._b == b2 and self._d == d2

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __reduce__(self):
        return (GaussianRational.from_parts, self.to_parts())

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


ZERO = _make(0, 0, 1)
ONE = _make(1, 0, 1)


# ---------------------------------------------------------------------------
# partition primitives on restricted growth strings (0-based labels)

def set_partition_rgs(n):
    """All restricted growth strings of length ``n``, lexicographic."""
    out = []
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            out.append(tuple(rgs))
            return
        for label in range(top + 1):
            rgs[i] = label
            rec(i + 1, top + 1 if label == top else top)

    if n > 0:
        rgs[0] = 0
        rec(1, 1)
    return out


def rgs_block_bounds(rgs):
    lo = {}
    hi = {}
    for i, b in enumerate(rgs):
        if b not in lo:
            lo[b] = i
        hi[b] = i
    return lo, hi


def rgs_is_noncrossing(rgs):
    """True iff no a<b<c<d with a,c in one block and b,d in another."""
    n = len(rgs)
    lo, hi = rgs_block_bounds(rgs)
    last = {}
    for j in range(n):
        b = rgs[j]
        i = last.get(b)
        if i is not None:
            for k in range(i + 1, j):
                c = rgs[k]
                if lo[c] < i or hi[c] > j:
                    return False
        last[b] = j
    return True


def rgs_is_interval(rgs):
    seen = set()
    prev = -1
    for b in rgs:
        if b != prev:
            if b in seen:
                return False
            seen.add(b)
            prev = b
    return True


def rgs_canonical(labels):
    """Relabel an arbitrary label sequence into restricted growth form."""
    remap = {}
    out = []
    for b in labels:
        if b not in remap:
            remap[b] = len(remap)
        out.append(remap[b])
    return tuple(out)


def rgs_join(r1, r2):
    """Join in the full partition lattice, by union-find."""
    n = len(r1)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for rgs in (r1, r2):
        first = {}
        for i, b in enumerate(rgs):
            j = first.setdefault(b, i)
            if j != i:
                ri, rj = find(i), find(j)
                if ri != rj:
                    if ri < rj:
                        parent[rj] = ri
                    else:
                        parent[ri] = rj
    return rgs_canonical([find(i) for i in range(n)])


def rgs_refines(r1, r2):
    """True iff every block of ``r1`` lies inside a block of ``r2``."""
    seen = {}
    for a, b in zip(r1, r2):
        prev = seen.setdefault(a, b)
        if prev != b:
            return False
    return True


# ---------------------------------------------------------------------------
# the hot loop

def block_sum(word, entries, ccache, cfun, mcache, mfun):
    """Sum of ``cum(word|V) * prod(mom(word|G))`` over ``(V, gaps)`` entries.

    ``entries`` holds index tuples into ``word``.  Cumulant values of
    sub-words are looked up in the dict ``ccache`` and computed by ``cfun``
    on a miss; moments likewise through ``mcache`` / ``mfun``.  A zero
    cumulant or a zero gap moment short-circuits the term.
    """
    total = ZERO
    getter = word.__getitem__
    cget = ccache.get
    mget = mcache.get
    for v_idx, gaps in entries:
        key = tuple(map(getter, v_idx))
        c = cget(key)
        if c is None:
            c = cfun(key)
        if not c:
            continue
        for g in gaps:
            key = tuple(map(getter, g))
            m = mget(key)
            if m is None:
                m = mfun(key)
            if not m:
                break
            c = c * m
        else:
            total = total + c
    return total
