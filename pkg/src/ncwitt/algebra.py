"""Sparse exact arithmetic in free associative algebras over Z and Z/m.

A word is a tuple of generator indices; the empty tuple is the unit monomial.
Words compare degree-first, then lexicographically by index.  A ``FreePoly``
is an immutable map from words to nonzero coefficients, so structural
equality is equality in the algebra.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Word = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Operands live in different coefficient rings or over different generators."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGeneratorError(ParseError):
    pass


def word_key(w: Word) -> Tuple[int, Word]:
    """Sort key for the degree-then-lex word order."""
    return (len(w), w)


@dataclass(frozen=True)
class GeneratorSet:
    symbols: Tuple[str, ...]

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("generator set must be nonempty")
        for s in symbols:
            if not isinstance(s, str) or not _IDENT.match(s):
                raise ValueError(f"invalid generator name {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate generator names in {symbols}")
        object.__setattr__(self, "symbols", symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        return self.symbols.index(name)

    def word(self, names: Union[str, Sequence[str]]) -> Word:
        """``gens.word("XYX")`` for single-letter names, or a list of names."""
        if isinstance(names, str):
            names = list(names)
        return tuple(self.index(n) for n in names)

    def var(self, name: str, modulus: Optional[int] = None) -> "FreePoly":
        return FreePoly(self, {(self.index(name),): 1}, modulus)

    def one(self, modulus: Optional[int] = None) -> "FreePoly":
        return FreePoly(self, {(): 1}, modulus)

    def zero(self, modulus: Optional[int] = None) -> "FreePoly":
        return FreePoly(self, {}, modulus)

    def format_word(self, w: Word, sep: str = "*") -> str:
        if not w:
            return "1"
        return sep.join(self.symbols[i] for i in w)


XY = GeneratorSet(("X", "Y"))


def _check_modulus(modulus: Optional[int]) -> None:
    if modulus is not None and (not isinstance(modulus, int) or modulus < 2):
        raise ValueError(f"modulus must be an integer >= 2 or None, got {modulus!r}")


class FreePoly:
    """Element of Z<gens> (``modulus is None``) or (Z/m)<gens>.

    Values are immutable; every public constructor canonicalizes the term map.
    """

    __slots__ = ("gens", "modulus", "_terms", "_hash")

    def __init__(self, gens: GeneratorSet, terms: Mapping[Word, int] = (),
                 modulus: Optional[int] = None):
        _check_modulus(modulus)
        n = len(gens)
        clean = {}
        for w, c in dict(terms).items():
            w = tuple(w)
            if any(not (0 <= i < n) for i in w):
                raise ValueError(f"word {w} uses an index outside the generator set")
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            clean[w] = clean.get(w, 0) + c
        self._init(gens, modulus, _normalize(clean, modulus))

    def _init(self, gens, modulus, terms):
        self.gens = gens
        self.modulus = modulus
        self._terms = terms
        self._hash = None

    @classmethod
    def _make(cls, gens, modulus, terms):
        # trusted path: terms already canonical for this class
        obj = cls.__new__(cls)
        obj._init(gens, modulus, terms)
        return obj

    def _new(self, terms):
        return type(self)._make(self.gens, self.modulus, _normalize(terms, self.modulus))

    # -- mapping-like access --------------------------------------------------
    @property
    def terms(self) -> Mapping[Word, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, int]]:
        """Terms in degree-then-lex order."""
        for w in sorted(self._terms, key=word_key):
            yield w, self._terms[w]

    def coeff(self, w: Word) -> int:
        return self._terms.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    # -- equality -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FreePoly):
            return NotImplemented
        return (self.gens == other.gens and self.modulus == other.modulus
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, self.modulus, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        ring = "Z" if self.modulus is None else f"Z/{self.modulus}"
        return f"{type(self).__name__}({format_poly(self)!r} over {ring})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "FreePoly") -> None:
        if not isinstance(other, FreePoly):
            raise TypeError(f"expected FreePoly, got {type(other).__name__}")
        if self.gens != other.gens:
            raise RingMismatchError(f"generator sets differ: {self.gens.symbols} vs {other.gens.symbols}")
        if self.modulus != other.modulus:
            raise RingMismatchError(f"coefficient rings differ: {self.modulus} vs {other.modulus}")

    def __add__(self, other):
        if isinstance(other, int):
            other = FreePoly._make(self.gens, self.modulus, _normalize({(): other}, self.modulus))
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) - c
        return self._new(acc)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "FreePoly":
        return self._new({w: k * c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        self._check(other)
        acc = {}
        get = acc.get
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = get(w, 0) + c1 * c2
        return FreePoly._make(self.gens, self.modulus, _normalize(acc, self.modulus))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = FreePoly._make(self.gens, self.modulus, _normalize({(): 1}, self.modulus))
        base = self
        # square-and-multiply; only powers of one element occur, so order is harmless
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reduce_mod(self, m: int) -> "FreePoly":
        return reduce_mod(self, m)


def _normalize(terms: dict, modulus: Optional[int]) -> dict:
    if modulus is None:
        return {w: c for w, c in terms.items() if c}
    out = {}
    for w, c in terms.items():
        c %= modulus
        if c:
            out[w] = c
    return out


def arith(f: FreePoly, g: FreePoly, kind: str) -> FreePoly:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        f._check(g)
        return f * g
    raise ValueError(f"unknown operation {kind!r}")


def commutator(f: FreePoly, g: FreePoly) -> FreePoly:
    f._check(g)
    return f * g - g * f


def reduce_mod(f: FreePoly, m: int) -> FreePoly:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    if f.modulus is not None:
        raise RingMismatchError("reduce_mod expects integer coefficients")
    return FreePoly(f.gens, f._terms, m)


def change_ring(f: FreePoly, modulus: Optional[int]) -> FreePoly:
    """Reduce an integer poly into Z/m; identity if already there."""
    if f.modulus == modulus:
        return f
    if f.modulus is None:
        return reduce_mod(f, modulus)
    raise RingMismatchError(f"cannot move Z/{f.modulus} coefficients to {modulus}")


def format_poly(f: FreePoly) -> str:
    """Render in degree-then-lex order, e.g. ``X*X - 2*X*Y + 1``."""
    if not f:
        return "0"
    parts = []
    for w, c in f.items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not w:
            body = str(a)
        elif a == 1:
            body = f.gens.format_word(w)
        else:
            body = f"{a}*{f.gens.format_word(w)}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), pos))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", pos)
            toks.append((ch, ch, pos))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    # binding: '^' > unary '-' > '*' > binary '+ -'

    def __init__(self, text, gens, modulus):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = gens
        self.modulus = modulus

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> FreePoly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        result = self.sum()
        self.take("end")
        return result

    def sum(self):
        left = self.product()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            right = self.product()
            left = left + right if op == "+" else left - right
        return left

    def product(self):
        left = self.unary()
        while self.peek()[0] == "*":
            self.take()
            left = left * self.unary()
        return left

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponent", tok[2])
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer literal", tok[2])
            self.take()
            base = base ** tok[1]
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return FreePoly(self.gens, {(): val}, self.modulus)
        if kind == "name":
            self.take()
            if val not in self.gens.symbols:
                raise UnknownGeneratorError(f"unknown generator {val!r}", pos)
            return FreePoly._make(self.gens, self.modulus,
                                  _normalize({(self.gens.index(val),): 1}, self.modulus))
        if kind == "(":
            self.take()
            inner = self.sum()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse(text: str, gens: GeneratorSet = XY, modulus: Optional[int] = None) -> FreePoly:
    _check_modulus(modulus)
    return _Parser(text, gens, modulus).parse()


# -- matrix evaluation ---------------------------------------------------------

def _mat_mul(a: Matrix, b: Matrix, modulus: Optional[int]) -> Matrix:
    cols = list(zip(*b))
    rows = []
    for row in a:
        r = []
        for col in cols:
            s = sum(x * y for x, y in zip(row, col))
            r.append(s % modulus if modulus else s)
        rows.append(tuple(r))
    return tuple(rows)


def identity_matrix(d: int, modulus: Optional[int] = None) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def trace(m: Matrix, modulus: Optional[int] = None) -> int:
    t = sum(m[i][i] for i in range(len(m)))
    return t % modulus if modulus else t


@dataclass(frozen=True)
class MatrixAssignment:
    """One d x d matrix per generator, all over the same coefficient ring."""

    dimension: int
    modulus: Optional[int]
    matrices: Mapping[str, Matrix]

    def __init__(self, dimension: int, modulus: Optional[int], matrices: Mapping[str, Sequence[Sequence[int]]]):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        _check_modulus(modulus)
        clean = {}
        for name, m in matrices.items():
            rows = tuple(tuple(int(x) for x in row) for row in m)
            if len(rows) != dimension or any(len(r) != dimension for r in rows):
                raise ValueError(f"matrix for {name!r} is not {dimension}x{dimension}")
            if modulus:
                rows = tuple(tuple(x % modulus for x in r) for r in rows)
            clean[name] = rows
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "matrices", clean)

    def __hash__(self):
        return hash((self.dimension, self.modulus, tuple(sorted(self.matrices.items()))))


def eval_matrix(f: FreePoly, asg: MatrixAssignment) -> Matrix:
    """Substitute matrices for generators.

    An integer poly may be evaluated in a modular matrix ring (coefficients are
    reduced); any other ring combination must match exactly.
    """
    if f.modulus is not None and f.modulus != asg.modulus:
        raise RingMismatchError(f"cannot evaluate Z/{f.modulus} poly in matrices over {asg.modulus}")
    d, mod = asg.dimension, asg.modulus
    used = {i for w in f._terms for i in w}
    mats = {}
    for i in used:
        name = f.gens.symbols[i]
        if name not in asg.matrices:
            raise ValueError(f"no matrix assigned to generator {name!r}")
        mats[i] = asg.matrices[name]
    acc = [[0] * d for _ in range(d)]
    # share prefix products between words
    cache = {(): identity_matrix(d)}

    def word_matrix(w):
        k = len(w)
        while w[:k] not in cache:
            k -= 1
        m = cache[w[:k]]
        for j in range(k, len(w)):
            m = _mat_mul(m, mats[w[j]], mod)
            cache[w[:j + 1]] = m
        return m

    for w, c in f.items():
        m = word_matrix(w)
        for i in range(d):
            for j in range(d):
                acc[i][j] += c * m[i][j]
    if mod:
        acc = [[x % mod for x in row] for row in acc]
    return tuple(tuple(row) for row in acc)
