"""Letters, words and noncommutative polynomials over a *-alphabet.

A word is a plain tuple of ``Letter`` objects; the empty tuple is the unit.
Letters are interned, so identity comparison and hashing are cheap -- the
transform engines hash millions of words.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import AlphabetError, DegreeError
from .kernels import ONE, ZERO, GaussianRational, scalar
from .partitions import ChiMap

Word = tuple  # tuple[Letter, ...]

SIDES = ("L", "R", None)
_SIDE_ALIASES = {
    "L": "L", "l": "L", "left": "L", "LEFT": "L",
    "R": "R", "r": "R", "right": "R", "RIGHT": "R",
    None: None, "unsided": None, "none": None, "": None,
}


def normalize_side(side) -> str | None:
    try:
        return _SIDE_ALIASES[side]
    except (KeyError, TypeError):
        raise AlphabetError(f"unknown side {side!r}; use L, R or unsided") from None


class Letter:
    """One of ``symbol`` or ``symbol*``, carrying the side of its symbol."""

    __slots__ = ("symbol", "starred", "side", "star")
    _interned: dict = {}

    def __new__(cls, symbol: str, starred: bool = False, side: str | None = None):
        key = (symbol, bool(starred), side)
        obj = cls._interned.get(key)
        if obj is None:
            obj = object.__new__(cls)
            obj.symbol = symbol
            obj.starred = bool(starred)
            obj.side = side
            obj.star = None
            cls._interned[key] = obj
            partner = cls(symbol, not starred, side)
            obj.star = partner
            partner.star = obj
        return obj

    def __reduce__(self):
        return (Letter, (self.symbol, self.starred, self.side))

    def __repr__(self):
        return f"Letter({self})"

    def __str__(self):
        return self.symbol + ("*" if self.starred else "")


class Alphabet:
    """Declared symbols with fixed sides.

    Letter order (used for deterministic witness reporting) is declaration
    order of the symbols, each unstarred before starred.
    """

    def __init__(self, symbols: Iterable[tuple[str, str | None]]):
        self.symbols: tuple[tuple[str, str | None], ...] = ()
        seen: dict[str, str | None] = {}
        decl = []
        for sym, side in symbols:
            side = normalize_side(side)
            if not isinstance(sym, str) or not sym or any(c.isspace() for c in sym):
                raise AlphabetError(f"invalid symbol {sym!r}")
            if sym in seen:
                raise AlphabetError(f"symbol {sym!r} declared twice")
            seen[sym] = side
            decl.append((sym, side))
        for sym in seen:
            if sym.endswith("*") and sym[:-1] in seen:
                raise AlphabetError(f"symbols {sym[:-1]!r} and {sym!r} are ambiguous")
        self.symbols = tuple(decl)
        self._side = dict(decl)
        self.letters: tuple[Letter, ...] = tuple(
            Letter(sym, st, side) for sym, side in decl for st in (False, True)
        )
        self._index = {let: i for i, let in enumerate(self.letters)}

    # -- basic queries -----------------------------------------------------
    def __contains__(self, letter) -> bool:
        return letter in self._index

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        inner = ", ".join(f"{s}:{side or 'unsided'}" for s, side in self.symbols)
        return f"Alphabet({inner})"

    def side(self, symbol: str) -> str | None:
        try:
            return self._side[symbol]
        except KeyError:
            raise AlphabetError(f"undeclared symbol {symbol!r}") from None

    def letter(self, symbol: str, starred: bool = False) -> Letter:
        return Letter(symbol, starred, self.side(symbol))

    def index(self, letter: Letter) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise AlphabetError(f"letter {letter} is not in {self!r}") from None

    def is_sided_pair(self) -> bool:
        """Exactly one left symbol and one right symbol."""
        sides = sorted(str(side) for _, side in self.symbols)
        return sides == ["L", "R"]

    def left_symbol(self) -> str:
        return next(s for s, side in self.symbols if side == "L")

    def right_symbol(self) -> str:
        return next(s for s, side in self.symbols if side == "R")

    # -- words -------------------------------------------------------------
    def parse_token(self, token: str) -> Letter:
        if token in self._side:
            return Letter(token, False, self._side[token])
        if token.endswith("*") and token[:-1] in self._side:
            return Letter(token[:-1], True, self._side[token[:-1]])
        raise AlphabetError(f"undeclared letter {token!r}")

    def parse(self, text: str) -> Word:
        """Parse a space separated word such as ``"x x* y"``; ``""`` is the unit."""
        return tuple(self.parse_token(tok) for tok in text.split())

    def check_word(self, word: Sequence[Letter]) -> Word:
        for let in word:
            if let not in self._index:
                raise AlphabetError(f"letter {let} is not in {self!r}")
        return tuple(word)

    def word_key(self, word: Sequence[Letter]) -> tuple:
        """Sort key: length first, then lexicographic by letter order."""
        idx = self._index
        return (len(word), tuple(idx[let] for let in word))

    def words(self, length: int) -> Iterator[Word]:
        """All words of one length, in deterministic order."""
        return itertools.product(self.letters, repeat=length)

    def words_upto(self, degree: int) -> Iterator[Word]:
        for k in range(1, degree + 1):
            yield from self.words(k)

    def union(self, other: "Alphabet") -> "Alphabet":
        clash = set(self._side) & set(other._side)
        if clash:
            raise AlphabetError(f"alphabet collision on {sorted(clash)}")
        return Alphabet(self.symbols + other.symbols)

    def restrict(self, symbols: Iterable[str]) -> "Alphabet":
        keep = set(symbols)
        return Alphabet([(s, side) for s, side in self.symbols if s in keep])

    def with_sides(self, sides: Mapping[str, str | None]) -> "Alphabet":
        return Alphabet([(s, sides.get(s, side)) for s, side in self.symbols])


def pair_alphabet(left: str = "x", right: str = "y") -> Alphabet:
    return Alphabet([(left, "L"), (right, "R")])


def single_alphabet(*symbols: str) -> Alphabet:
    return Alphabet([(s, None) for s in (symbols or ("x", "y"))])


def star(word: Sequence[Letter]) -> Word:
    """``(w1 ... wn)* = wn* ... w1*``."""
    return tuple(let.star for let in reversed(word))


def word_str(word: Sequence[Letter]) -> str:
    return " ".join(map(str, word))


def chi_of(word: Sequence[Letter]) -> ChiMap:
    """Left/right colouring of a word's positions from its letters' sides."""
    sides = []
    for let in word:
        if let.side is None:
            raise AlphabetError(f"letter {let} has no side")
        sides.append(let.side)
    return ChiMap(sides)


def chi_word(word: Sequence[Letter]) -> str:
    return "".join(let.side or "?" for let in word)


def reorder(word: Sequence[Letter], chi: ChiMap | None = None) -> Word:
    """The word read in the colouring's order: ``(w_{s(1)}, ..., w_{s(n)})``."""
    if chi is None:
        chi = chi_of(word)
    return tuple(word[p - 1] for p in chi.s)


class NcPolynomial:
    """Finite linear combination of words with Gaussian-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, GaussianRational] = {}
        for w, c in items:
            c = scalar(c)
            w = tuple(w)
            if w in acc:
                c = acc[w] + c
            acc[w] = c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, word: Sequence[Letter], coeff=1) -> "NcPolynomial":
        return cls({tuple(word): coeff})

    @classmethod
    def const(cls, value) -> "NcPolynomial":
        return cls({(): value})

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "NcPolynomial":
        return cls({(): ONE})

    def coefficient(self, word: Sequence[Letter]) -> GaussianRational:
        return self.terms.get(tuple(word), ZERO)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(len(w) == 0 for w in self.terms)

    def scalar_part(self) -> GaussianRational:
        return self.terms.get((), ZERO)

    def words(self) -> list[Word]:
        return list(self.terms)

    def _coerce(self, other) -> "NcPolynomial":
        if isinstance(other, NcPolynomial):
            return other
        return NcPolynomial.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NcPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return NcPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, NcPolynomial):
            c = scalar(other)
            return NcPolynomial({w: v * c for w, v in self.terms.items()})
        out: dict[Word, GaussianRational] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = c1 * c2
                out[w] = out[w] + v if w in out else v
        return NcPolynomial(out)

    def __rmul__(self, other):
        c = scalar(other)
        return NcPolynomial({w: c * v for w, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = NcPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "NcPolynomial":
        """Involution: stars words and conjugates coefficients."""
        return NcPolynomial({star(w): c.conjugate() for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NcPolynomial):
            try:
                other = NcPolynomial.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), word_str(w))):
            c = self.terms[w]
            parts.append(f"({c})" + ("·" + word_str(w).replace(" ", "·") if w else ""))
        return " + ".join(parts)

    def evaluate(self, phi) -> GaussianRational:
        """Apply a linear functional given on words (``phi(word)``)."""
        total = ZERO
        for w, c in self.terms.items():
            total = total + c * (ONE if not w else phi(w))
        return total


def evaluate(p: NcPolynomial, mu) -> GaussianRational:
    """``mu`` extended linearly; ``mu`` is a moment table or word callable."""
    if hasattr(mu, "degree") and p.degree() > mu.degree:
        raise DegreeError(f"polynomial degree {p.degree()} exceeds cap {mu.degree}")
    return p.evaluate(mu)


def center(p: NcPolynomial, mu) -> NcPolynomial:
    """``p - mu(p) * 1``."""
    return p - NcPolynomial.const(evaluate(p, mu))


__all__ = [
    "Letter", "Alphabet", "Word", "NcPolynomial", "GaussianRational",
    "pair_alphabet", "single_alphabet", "normalize_side",
    "star", "word_str", "chi_of", "chi_word", "reorder", "evaluate", "center",
]
