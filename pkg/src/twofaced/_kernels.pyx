# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the twin of ``_kernels_py`` with the same public API.

Gaussian rationals keep a 64-bit fast path (overflow-checked) and fall back
to Python integers when a result leaves that range.
"""

from fractions import Fraction
from math import gcd as _pygcd

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_New, PyTuple_SET_ITEM

cdef extern from *:
    """
    #include <limits.h>
    static inline int tf_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int tf_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int tf_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r) || *r == LLONG_MIN;
    }
    """
    int tf_mul(long long a, long long b, long long *r) nogil
    int tf_add(long long a, long long b, long long *r) nogil
    int tf_sub(long long a, long long b, long long *r) nogil

BACKEND = "cython"

cdef object _LIMIT = 2 ** 62


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef class GaussianRational:
    """Exact element of Q(i), stored as ``(a + b*i) / d`` in lowest terms."""

    cdef bint small
    cdef long long sa, sb, sd
    cdef object oa, ob, od

    def __init__(self, re=0, im=0):
        cdef GaussianRational src
        if isinstance(re, GaussianRational) and not im:
            src = re
            _copy_into(self, src)
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // _pygcd(re.denominator, im.denominator)
        _set_big(self, re.numerator * (d // re.denominator),
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
        return Fraction(_A(self), _D(self))

    @property
    def imag(self):
        return Fraction(_B(self), _D(self))

    def is_real(self):
        return (self.sb == 0) if self.small else (self.ob == 0)

    def conjugate(self):
        if self.small:
            return _small(self.sa, -self.sb, self.sd)
        return _big(self.oa, -self.ob, self.od)

    def abs2(self):
        a, b, d = _A(self), _B(self), _D(self)
        return Fraction(a * a + b * b, d * d)

    def __bool__(self):
        if self.small:
            return self.sa != 0 or self.sb != 0
        return self.oa != 0 or self.ob != 0

    def __neg__(self):
        if self.small:
            return _small(-self.sa, -self.sb, self.sd)
        return _big(-self.oa, -self.ob, self.od)

    def __pos__(self):
        return self

    def __add__(self, other):
        x, y = _pair(self, other)
        if x is None:
            return NotImplemented
        return _add(x, y, 1)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        x, y = _pair(self, other)
        if x is None:
            return NotImplemented
        return _add(x, y, -1)

    def __rsub__(self, other):
        y = _coerce(other)
        if y is None:
            return NotImplemented
        return _add(y, self, -1)

    def __mul__(self, other):
        x, y = _pair(self, other)
        if x is None:
            return NotImplemented
        return _mul(x, y)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        y = _coerce(other)
        if y is None:
            return NotImplemented
        return _div(self, y)

    def __rtruediv__(self, other):
        y = _coerce(other)
        if y is None:
            return NotImplemented
        return _div(y, self)

    def __pow__(self, k, mod):
        if not isinstance(k, int) or mod is not None:
            return NotImplemented
        if k < 0:
            return _div(ONE, self ** -k)
        cdef GaussianRational result = ONE
        cdef GaussianRational base = self
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other):
        y = _coerce(other)
        if y is None:
            return NotImplemented
        return _equal(self, y)

    def __ne__(self, other):
        y = _coerce(other)
        if y is None:
            return NotImplemented
        return not _equal(self, y)

    def __hash__(self):
        if self.small and self.sb == 0 and self.sd == 1:
            return hash(self.sa)
        a, b, d = _A(self), _B(self), _D(self)
        if b == 0:
            return hash(Fraction(a, d))
        return hash((a, b, d))

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


# -- construction helpers ------------------------------------------------------

cdef inline object _A(GaussianRational x):
    return x.sa if x.small else x.oa


cdef inline object _B(GaussianRational x):
    return x.sb if x.small else x.ob


cdef inline object _D(GaussianRational x):
    return x.sd if x.small else x.od


cdef inline void _copy_into(GaussianRational dst, GaussianRational src):
    dst.small = src.small
    dst.sa, dst.sb, dst.sd = src.sa, src.sb, src.sd
    dst.oa, dst.ob, dst.od = src.oa, src.ob, src.od


cdef GaussianRational _small(long long a, long long b, long long d):
    """Normalize and wrap; the inputs never equal LLONG_MIN."""
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    cdef long long g = _gcd(_gcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    cdef GaussianRational obj = GaussianRational.__new__(GaussianRational)
    obj.small = True
    obj.sa, obj.sb, obj.sd = a, b, d
    return obj


cdef void _set_big(GaussianRational obj, object a, object b, object d) except *:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = _pygcd(_pygcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    if -_LIMIT < a < _LIMIT and -_LIMIT < b < _LIMIT and d < _LIMIT:
        obj.small = True
        obj.sa, obj.sb, obj.sd = a, b, d
        obj.oa = obj.ob = obj.od = None
    else:
        obj.small = False
        obj.oa, obj.ob, obj.od = a, b, d


cdef GaussianRational _big(object a, object b, object d):
    cdef GaussianRational obj = GaussianRational.__new__(GaussianRational)
    _set_big(obj, a, b, d)
    return obj


cdef object _coerce(object value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return _big(value, 0, 1)
    if isinstance(value, bool):
        return _big(int(value), 0, 1)
    if isinstance(value, Fraction):
        return _big(value.numerator, 0, value.denominator)
    return None


cdef tuple _pair(object a, object b):
    """Both operands as GaussianRational (either may be the Python-side one)."""
    x = _coerce(a)
    y = _coerce(b)
    if x is None or y is None:
        return (None, None)
    return (x, y)


# -- arithmetic ------------------------------------------------------------------

cdef GaussianRational _add(GaussianRational x, GaussianRational y, int sign):
    cdef long long ya, yb, a, b, d, t1, t2
    if x.small and y.small:
        ya = y.sa if sign > 0 else -y.sa
        yb = y.sb if sign > 0 else -y.sb
        if x.sd == y.sd:
            if not tf_add(x.sa, ya, &a) and not tf_add(x.sb, yb, &b):
                return _small(a, b, x.sd)
        elif not (tf_mul(x.sa, y.sd, &t1) or tf_mul(ya, x.sd, &t2) or tf_add(t1, t2, &a)
                  or tf_mul(x.sb, y.sd, &t1) or tf_mul(yb, x.sd, &t2) or tf_add(t1, t2, &b)
                  or tf_mul(x.sd, y.sd, &d)):
            return _small(a, b, d)
    xa, xb, xd = _A(x), _B(x), _D(x)
    ya_, yb_, yd = _A(y), _B(y), _D(y)
    if sign < 0:
        ya_, yb_ = -ya_, -yb_
    return _big(xa * yd + ya_ * xd, xb * yd + yb_ * xd, xd * yd)


cdef GaussianRational _mul(GaussianRational x, GaussianRational y):
    cdef long long a, b, d, t1, t2
    if x.small and y.small:
        if x.sb == 0 and y.sb == 0:
            if not (tf_mul(x.sa, y.sa, &a) or tf_mul(x.sd, y.sd, &d)):
                return _small(a, 0, d)
        elif not (tf_mul(x.sa, y.sa, &t1) or tf_mul(x.sb, y.sb, &t2) or tf_sub(t1, t2, &a)
                  or tf_mul(x.sa, y.sb, &t1) or tf_mul(y.sa, x.sb, &t2) or tf_add(t1, t2, &b)
                  or tf_mul(x.sd, y.sd, &d)):
            return _small(a, b, d)
    xa, xb, xd = _A(x), _B(x), _D(x)
    ya, yb, yd = _A(y), _B(y), _D(y)
    return _big(xa * ya - xb * yb, xa * yb + ya * xb, xd * yd)


cdef GaussianRational _div(GaussianRational x, GaussianRational y):
    a2, b2, d2 = _A(y), _B(y), _D(y)
    n2 = a2 * a2 + b2 * b2
    if n2 == 0:
        raise ZeroDivisionError("division by zero")
    a1, b1, d1 = _A(x), _B(x), _D(x)
    return _big((a1 * a2 + b1 * b2) * d2, (b1 * a2 - a1 * b2) * d2, d1 * n2)


cdef inline bint _is_zero(GaussianRational x):
    if x.small:
        return x.sa == 0 and x.sb == 0
    return x.oa == 0 and x.ob == 0


cdef bint _equal(GaussianRational x, GaussianRational y):
    if x.small and y.small:
        return x.sa == y.sa and x.sb == y.sb and x.sd == y.sd
    return _A(x) == _A(y) and _B(x) == _B(y) and _D(x) == _D(y)


ZERO = _small(0, 0, 1)
ONE = _small(1, 0, 1)
cdef GaussianRational _ZERO = ZERO


# ---------------------------------------------------------------------------
# partition primitives on restricted growth strings (0-based labels)

def set_partition_rgs(int n):
    """All restricted growth strings of length ``n``, lexicographic."""
    cdef list out = []
    cdef int i, label
    if n <= 0:
        return out
    # odometer: mx[i] is the largest label among cur[0..i]
    cdef list cur = [0] * n
    cdef list mx = [0] * n
    while True:
        out.append(tuple(cur))
        i = n - 1
        while i > 0 and cur[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            break
        cur[i] = cur[i] + 1
        mx[i] = mx[i - 1] if mx[i - 1] > cur[i] else cur[i]
        for label in range(i + 1, n):
            cur[label] = 0
            mx[label] = mx[i]
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
    """True iff no a<b<c<d with a,c in one block and b,d in another.

    Labels must be nonnegative integers (restricted growth form).
    """
    cdef Py_ssize_t n = len(rgs), j, k, i
    cdef Py_ssize_t m = (max(rgs) + 1) if n else 0
    cdef list lo = [-1] * m
    cdef list hi = [-1] * m
    cdef list last = [-1] * m
    cdef Py_ssize_t b, c
    for j in range(n):
        b = rgs[j]
        if lo[b] < 0:
            lo[b] = j
        hi[b] = j
    for j in range(n):
        b = rgs[j]
        i = last[b]
        if i >= 0:
            for k in range(i + 1, j):
                c = rgs[k]
                if <Py_ssize_t>lo[c] < i or <Py_ssize_t>hi[c] > j:
                    return False
        last[b] = j
    return True


def rgs_is_interval(rgs):
    cdef set seen = set()
    prev = None
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
    cdef Py_ssize_t n = len(r1), i, j, ri, rj
    cdef list parent = list(range(n))

    def find(Py_ssize_t i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for rgs in (r1, r2):
        first = {}
        for i in range(n):
            j = first.setdefault(rgs[i], i)
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

cdef inline tuple _restrict(tuple word, tuple idx):
    cdef Py_ssize_t k, n = len(idx)
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for k in range(n):
        item = <object>PyTuple_GET_ITEM(word, <Py_ssize_t>(<object>PyTuple_GET_ITEM(idx, k)))
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, k, item)
    return out


def block_sum(word, entries, dict ccache, cfun, dict mcache, mfun):
    """Sum of ``cum(word|V) * prod(mom(word|G))`` over ``(V, gaps)`` entries.

    Same contract as the pure-Python version.
    """
    cdef tuple w = tuple(word)
    cdef GaussianRational total = _ZERO, c, m
    cdef tuple key, gaps, g
    cdef bint dead
    for v_idx, gaps in entries:
        key = _restrict(w, v_idx)
        obj = ccache.get(key)
        if obj is None:
            obj = cfun(key)
        c = <GaussianRational?>obj
        if _is_zero(c):
            continue
        dead = False
        for g in gaps:
            key = _restrict(w, g)
            obj = mcache.get(key)
            if obj is None:
                obj = mfun(key)
            m = <GaussianRational?>obj
            if _is_zero(m):
                dead = True
                break
            c = _mul(c, m)
        if not dead:
            total = _add(total, c, 1)
    return total
