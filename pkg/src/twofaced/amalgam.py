"""2x2 matrices over polynomials in one variable ``x``, the diagonal
expectation onto scalar diagonal matrices, and the witness chains showing
the matrix algebra generated by ``[[0, x], [x*, 0]]`` is never Boolean
independent from ``M_2(C)`` over the diagonal unless all tested moments vanish."""

from __future__ import annotations

from dataclasses import dataclass

from .distribution import MomentTable
from .errors import AlphabetError, DegreeError, PreconditionError
from .kernels import ONE, GaussianRational, scalar
from .ncpoly import Alphabet, Letter, NcPolynomial, word_str
from .verdict import FAIL, INCONCLUSIVE, PASS, Verdict

EQUAL = "EQUAL"
UNEQUAL = "UNEQUAL"


def _poly(value) -> NcPolynomial:
    return value if isinstance(value, NcPolynomial) else NcPolynomial.const(value)


class Mat2:
    """A 2x2 matrix with NcPolynomial entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = [[_poly(e) for e in row] for row in entries]
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("Mat2 needs a 2x2 array")
        self.entries = ((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1]))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls([[1, 0], [0, 1]])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2([[self[i, j] + other[i, j] for j in range(2)] for i in range(2)])

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2([[self[i, j] - other[i, j] for j in range(2)] for i in range(2)])

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            c = scalar(other)
            return Mat2([[self[i, j] * c for j in range(2)] for i in range(2)])
        return Mat2([[self[i, 0] * other[0, j] + self[i, 1] * other[1, j] for j in range(2)]
                     for i in range(2)])

    def __pow__(self, k: int) -> "Mat2":
        out = Mat2.identity()
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "Mat2":
        """Conjugate transpose with the involution on entries."""
        return Mat2([[self[j, i].star() for j in range(2)] for i in range(2)])

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def degree(self) -> int:
        return max(e.degree() for row in self.entries for e in row)

    def is_scalar(self) -> bool:
        return all(e.is_scalar() for row in self.entries for e in row)

    def is_scalar_identity_multiple(self) -> bool:
        return (self.is_scalar() and self[0, 1].is_zero() and self[1, 0].is_zero()
                and self[0, 0] == self[1, 1])

    def __repr__(self):
        return f"Mat2([[{self[0, 0]!r}, {self[0, 1]!r}], [{self[1, 0]!r}, {self[1, 1]!r}]])"


@dataclass(frozen=True)
class Diag2:
    """A scalar diagonal matrix ``diag(d11, d22)``."""

    d11: GaussianRational
    d22: GaussianRational

    def __mul__(self, other: "Diag2") -> "Diag2":
        return Diag2(self.d11 * other.d11, self.d22 * other.d22)

    def as_mat(self) -> Mat2:
        return Mat2([[self.d11, 0], [0, self.d22]])

    def __str__(self):
        return f"diag({self.d11}, {self.d22})"


def f2(m: Mat2, mu: MomentTable) -> Diag2:
    """``diag(phi(m11), phi(m22))``."""
    for e in (m[0, 0], m[1, 1]):
        if e.degree() > mu.degree:
            raise DegreeError(f"entry degree {e.degree()} exceeds cap {mu.degree}")
    return Diag2(m[0, 0].evaluate(mu), m[1, 1].evaluate(mu))


def scalar_project(m: Mat2) -> Diag2:
    """Diagonal part of a scalar matrix (the identity product with no moments)."""
    if not m.is_scalar():
        raise PreconditionError("matrix has non-scalar entries")
    return Diag2(m[0, 0].scalar_part(), m[1, 1].scalar_part())


# ---------------------------------------------------------------------------
# the algebra generated by [[0, x], [x*, 0]] and the scalar diagonals

class XLetters:
    """The letters ``x`` and ``x*`` of a single-symbol alphabet."""

    def __init__(self, alphabet: Alphabet):
        if len(alphabet.symbols) != 1:
            raise AlphabetError("expected a single-symbol alphabet")
        sym = alphabet.symbols[0][0]
        self.alphabet = alphabet
        self.x = alphabet.letter(sym)
        self.xs = alphabet.letter(sym, True)

    def power(self, first: Letter, pairs: int, lead: Letter | None = None) -> NcPolynomial:
        """``lead (first first*)^pairs`` as a word polynomial."""
        w = (lead,) if lead is not None else ()
        w += (first, first.star) * pairs
        return NcPolynomial.word(w)


def _entry_ok(p: NcPolynomial, lead: Letter | None, first: Letter) -> bool:
    """Every word of ``p`` is ``lead (first first*)^m`` (``lead`` omitted if None)."""
    for w in p.terms:
        body = w
        if lead is not None:
            if not w or w[0] is not lead:
                return False
            body = w[1:]
        if len(body) % 2:
            return False
        if any(body[i] is not (first if i % 2 == 0 else first.star) for i in range(len(body))):
            return False
    return True


def _letters_of(m: Mat2) -> XLetters | None:
    for row in m.entries:
        for e in row:
            for w in e.terms:
                if w:
                    let = w[0]
                    return XLetters(Alphabet([(let.symbol, let.side)]))
    return None


def in_Z(m: Mat2, letters: XLetters | None = None) -> bool:
    """Membership in the unital algebra generated by ``[[0, x], [x*, 0]]`` and
    the scalar diagonals: entries are polynomials in ``xx*``, ``x`` times a
    polynomial in ``x*x``, ``x*`` times a polynomial in ``xx*``, and a
    polynomial in ``x*x``.

    Without ``letters`` the symbol is read off the entries.
    """
    letters = letters or _letters_of(m)
    if letters is None:
        return True
    x, xs = letters.x, letters.xs
    return (_entry_ok(m[0, 0], None, x) and _entry_ok(m[0, 1], x, xs)
            and _entry_ok(m[1, 0], xs, x) and _entry_ok(m[1, 1], None, xs))


def in_Z_nonscalar(m: Mat2, letters: XLetters | None = None) -> bool:
    """Member of the algebra above and not a multiple of the identity."""
    return in_Z(m, letters) and not m.is_scalar_identity_multiple()


def in_scalar_nonscalar(m: Mat2) -> bool:
    """Scalar matrix that is not a multiple of the identity."""
    return m.is_scalar() and not m.is_scalar_identity_multiple()


@dataclass
class AmalgCheck:
    status: str           # EQUAL or UNEQUAL
    product: Diag2
    factored: Diag2

    @property
    def equal(self) -> bool:
        return self.status == EQUAL


def boolean_amalg_check(chain: list, mu: MomentTable, start: str | None = None) -> AmalgCheck:
    """Compare ``F2(M1 ... Mk)`` with ``F2(M1) ... F2(Mk)`` for an alternating chain.

    ``start`` names the algebra of the first element (``"Z"`` or ``"M"``);
    if omitted, whichever assignment validates is used (Z first).
    """
    if len(chain) < 2:
        raise PreconditionError("a chain needs at least two elements")
    letters = XLetters(mu.alphabet)
    tests = {"Z": lambda m: in_Z_nonscalar(m, letters), "M": in_scalar_nonscalar}
    starts = (start,) if start else ("Z", "M")
    for st in starts:
        labels = [st if i % 2 == 0 else ("M" if st == "Z" else "Z") for i in range(len(chain))]
        if all(tests[lab](m) for lab, m in zip(labels, chain)):
            break
    else:
        raise PreconditionError("chain does not alternate between the two non-scalar parts")
    prod = chain[0]
    for m in chain[1:]:
        prod = prod * m
    lhs = f2(prod, mu)
    rhs = Diag2(ONE, ONE)
    for m in chain:
        rhs = rhs * f2(m, mu)
    return AmalgCheck(EQUAL if lhs == rhs else UNEQUAL, lhs, rhs)


def witness_chains(letters: XLetters, m1: int, m2: int, m3: int):
    """The two product chains built from ``Z1, Z2, Z3, W`` and the unit projections.

    ``Z1`` and ``W`` carry ``x*x`` (resp. ``xx*``) powers in the corner where
    membership requires them; only their other corner enters the diagonal
    of each product.
    """
    x, xs = letters.x, letters.xs
    one = NcPolynomial.one()
    xx = letters.power(x, m1)
    sx = letters.power(xs, m1)
    z1 = Mat2([[xx, 0], [0, one + sx]])
    w = Mat2([[one + xx, 0], [0, sx]])
    z2 = Mat2([[0, letters.power(xs, m2, lead=x)], [0, 1]])
    z3 = Mat2([[0, 0], [letters.power(x, m3, lead=xs), 1]])
    a1 = Mat2([[1, 0], [0, 0]])
    a2 = Mat2([[0, 0], [0, 1]])
    return [z1, a1, z2, a2, z3], [w, a2, z3, a1, z2]


def ab_chain(letters: XLetters, n: int) -> list:
    a = Mat2([[0, NcPolynomial.word((letters.x,))], [NcPolynomial.word((letters.xs,)), 0]])
    b = Mat2([[0, 1], [1, 0]])
    return [a, b] * n


@dataclass
class WitnessChainReport:
    status: str                 # UNEQUAL, or INCONCLUSIVE when nothing was found
    chain: str | None = None    # "Z1A1Z2A2Z3", "WA2Z3A1Z2" or "(AB)^n"
    params: tuple = ()
    product: Diag2 | None = None
    factored: Diag2 | None = None
    tested: int = 0

    @property
    def verdict(self) -> Verdict:
        if self.status == UNEQUAL:
            return Verdict(FAIL, (self.chain, self.params), self.product,
                           {"factored": self.factored})
        return Verdict(INCONCLUSIVE, info={"tested": self.tested})


def theorem_5_2_witness(mu: MomentTable, degree: int | None = None) -> WitnessChainReport:
    """First witness chain (in fixed order) whose two sides differ.

    Order: the ``Z1 A1 Z2 A2 Z3`` chains over ``(m1, m2, m3)``
    lexicographically, then the ``W A2 Z3 A1 Z2`` chains, then ``(AB)^n``
    for increasing ``n``; only chains whose diagonal products stay within
    the degree cap are tried.
    """
    letters = XLetters(mu.alphabet)
    deg = mu.degree if degree is None else min(degree, mu.degree)
    if not mu.star_symmetric:
        bad = mu.star_violation(deg)
        if bad is not None:
            raise PreconditionError(f"table is not star-symmetric at {word_str(bad)}")
    tested = 0
    triples = [(a, b, c) for a in range(deg) for b in range(deg) for c in range(deg)
               if 2 * (a + b + c + 1) <= deg]
    for name, idx in (("Z1A1Z2A2Z3", 0), ("WA2Z3A1Z2", 1)):
        for m in triples:
            chain = witness_chains(letters, *m)[idx]
            res = _check_within(chain, mu, deg)
            tested += 1
            if res is not None and not res.equal:
                return WitnessChainReport(UNEQUAL, name, m, res.product, res.factored, tested)
    for n in range(1, deg + 1):
        res = boolean_amalg_check(ab_chain(letters, n), mu, start="Z")
        tested += 1
        if not res.equal:
            return WitnessChainReport(UNEQUAL, "(AB)^n", (n,), res.product, res.factored, tested)
    return WitnessChainReport(INCONCLUSIVE, tested=tested)


def _check_within(chain, mu, deg):
    prod = chain[0]
    for m in chain[1:]:
        prod = prod * m
    if max(prod[0, 0].degree(), prod[1, 1].degree()) > deg:
        return None
    return boolean_amalg_check(chain, mu, start="Z")


__all__ = [
    "EQUAL", "UNEQUAL", "PASS", "Mat2", "Diag2", "f2", "scalar_project", "XLetters",
    "in_Z", "in_Z_nonscalar", "in_scalar_nonscalar", "AmalgCheck", "boolean_amalg_check",
    "witness_chains", "ab_chain", "WitnessChainReport", "theorem_5_2_witness",
]
