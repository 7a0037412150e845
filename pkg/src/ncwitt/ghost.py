"""Witt polynomials, ghost maps, and classical integer Witt vector arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .algebra import FreePoly, RingMismatchError
from .necklace import NecklacePoly, necklace_reduce, project, require_prime


class NotInImage(ValueError):
    """A ghost vector has no integer Witt preimage (some division is inexact)."""

    def __init__(self, index: int, residue: int, divisor: int):
        super().__init__(f"ghost coordinate {index} is not divisible: {residue} / {divisor}")
        self.index = index


class WittInvariantError(RuntimeError):
    """Integrality of the Witt group law was violated: a library bug, not bad input."""


def _p_power_towers(a: FreePoly, p: int, n: int):
    # a, a^p, a^{p^2}, ..., a^{p^{n-1}}
    out = [a]
    for _ in range(n - 1):
        out.append(out[-1] ** p)
    return out


def ghost_components(coords: Sequence[FreePoly], p: int) -> Tuple[FreePoly, ...]:
    """``w_k = sum_{i<=k} p^i a_i^{p^(k-i)}`` for k < len(coords), over Z."""
    require_prime(p)
    coords = tuple(coords)
    if not coords:
        return ()
    for a in coords:
        if a.modulus is not None:
            raise RingMismatchError("ghost components need integer coefficients")
        coords[0]._check(a)
    n = len(coords)
    towers = [_p_power_towers(a, p, n - i) for i, a in enumerate(coords)]
    return tuple(
        _sum(coords[0].gens.zero(), (towers[i][k - i].scale(p ** i) for i in range(k + 1)))
        for k in range(n)
    )


def _sum(zero, polys):
    acc = {}
    for f in polys:
        for w, c in f._terms.items():
            acc[w] = acc.get(w, 0) + c
    return zero._new(acc)


@dataclass(frozen=True)
class GhostVector:
    """A point of (A/[A,A])^n; the common target of all ghost maps."""

    p: int
    coords: Tuple[NecklacePoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        for c in self.coords:
            if not isinstance(c, NecklacePoly):
                raise TypeError("ghost coordinates must be NecklacePoly classes")
            self.coords[0]._check(c)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def _match(self, other):
        if not isinstance(other, GhostVector):
            raise TypeError(f"expected GhostVector, got {type(other).__name__}")
        if self.p != other.p or len(self) != len(other):
            raise ValueError("ghost vectors differ in prime or length")

    def __add__(self, other):
        self._match(other)
        return GhostVector(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._match(other)
        return GhostVector(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GhostVector(self.p, tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def reduce_mod(self, m: int) -> "GhostVector":
        return GhostVector(self.p, tuple(necklace_reduce(c, m) for c in self.coords))

    @classmethod
    def zero(cls, gens, p: int, n: int, modulus=None) -> "GhostVector":
        return cls(p, tuple(NecklacePoly(gens, {}, modulus) for _ in range(n)))


def ghost_map(coords: Sequence[FreePoly], p: int) -> GhostVector:
    return GhostVector(p, tuple(project(w) for w in ghost_components(coords, p)))


# -- classical Witt vectors over Z ---------------------------------------------

@dataclass(frozen=True)
class IntWittVector:
    p: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        coords = tuple(self.coords)
        if any(not isinstance(c, int) for c in coords):
            raise TypeError("integer Witt vector coordinates must be ints")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def ghost(self) -> Tuple[int, ...]:
        return ghost_int(self.coords, self.p)


def ghost_int(coords: Sequence[int], p: int) -> Tuple[int, ...]:
    return tuple(
        sum(p ** i * coords[i] ** (p ** (k - i)) for i in range(k + 1))
        for k in range(len(coords))
    )


def ghost_inverse_int(w: Sequence[int], p: int) -> IntWittVector:
    """Recover Witt coordinates from ghost components by exact division, in order."""
    require_prime(p)
    a = []
    for i, wi in enumerate(w):
        r = wi - sum(p ** j * a[j] ** (p ** (i - j)) for j in range(i))
        q, rem = divmod(r, p ** i)
        if rem:
            raise NotInImage(i, r, p ** i)
        a.append(q)
    return IntWittVector(p, tuple(a))


def _combine(a: IntWittVector, b: IntWittVector, p, op) -> IntWittVector:
    if p is None:
        p = a.p
    if a.p != p or b.p != p:
        raise ValueError("Witt vectors over different primes")
    if len(a) != len(b):
        raise ValueError("Witt vectors of different lengths")
    g = tuple(op(x, y) for x, y in zip(a.ghost(), b.ghost()))
    try:
        return ghost_inverse_int(g, p)
    except NotInImage as e:
        raise WittInvariantError(str(e)) from e


def witt_add_int(a: IntWittVector, b: IntWittVector, p: int = None) -> IntWittVector:
    return _combine(a, b, p, lambda x, y: x + y)


def witt_mul_int(a: IntWittVector, b: IntWittVector, p: int = None) -> IntWittVector:
    return _combine(a, b, p, lambda x, y: x * y)


def witt_neg_int(a: IntWittVector) -> IntWittVector:
    return ghost_inverse_int(tuple(-x for x in a.ghost()), a.p)
