"""The commutator quotient A/[A,A] of a free algebra, via necklace words.

[A,A] is spanned by ``uv - vu`` for words u, v, so two words agree in the
quotient exactly when they are cyclic rotations of each other.  Each class is
represented by its lexicographically least rotation.
"""
from __future__ import annotations

from typing import Optional

from .algebra import FreePoly, RingMismatchError, Word, _normalize


def least_rotation_index(w: Word) -> int:
    """Booth's algorithm: start of the least rotation of ``w`` in O(len(w))."""
    n = len(w)
    if n == 0:
        return 0
    s = w + w
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = s[j]
        i = fail[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != s[k + i + 1]:
            # here i == -1
            if c < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def min_rotation(w: Word) -> Word:
    w = tuple(w)
    k = least_rotation_index(w)
    return w[k:] + w[:k]


def is_necklace(w: Word) -> bool:
    return min_rotation(w) == tuple(w)


class NecklacePoly(FreePoly):
    """A FreePoly whose words are all minimal rotations: an element of A/[A,A].

    Only the additive structure is available; the quotient is not a ring.
    """

    __slots__ = ()

    def __init__(self, gens, terms=(), modulus: Optional[int] = None):
        super().__init__(gens, terms, modulus)
        for w in self._terms:
            if min_rotation(w) != w:
                raise ValueError(f"word {w} is not a minimal rotation")

    def _check(self, other):
        super()._check(other)
        if not isinstance(other, NecklacePoly):
            raise TypeError("necklace classes only combine with necklace classes; project() first")

    def __add__(self, other):
        if isinstance(other, int):
            other = NecklacePoly._make(self.gens, self.modulus, _normalize({(): other}, self.modulus))
        return super().__add__(other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        raise TypeError("A/[A,A] has no product; multiply representatives instead")

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        raise TypeError("A/[A,A] has no product; use frobenius_p or powers of a representative")

    def to_free(self) -> FreePoly:
        """The canonical representative as an ordinary FreePoly."""
        return FreePoly._make(self.gens, self.modulus, dict(self._terms))


def project(f: FreePoly) -> NecklacePoly:
    acc = {}
    for w, c in f._terms.items():
        r = min_rotation(w)
        acc[r] = acc.get(r, 0) + c
    return NecklacePoly._make(f.gens, f.modulus, _normalize(acc, f.modulus))


def necklace_eq(f: FreePoly, g: FreePoly) -> bool:
    if isinstance(f, NecklacePoly):
        f = f.to_free()
    if isinstance(g, NecklacePoly):
        g = g.to_free()
    f._check(g)
    return project(f - g).is_zero()


def necklace_reduce(f: NecklacePoly, m: int) -> NecklacePoly:
    """Coefficientwise reduction of an integer class into (Z/m)<gens>/[ , ]."""
    if f.modulus is not None:
        raise RingMismatchError("necklace_reduce expects integer coefficients")
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    return NecklacePoly._make(f.gens, m, _normalize(dict(f._terms), m))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def frobenius_p(f: NecklacePoly, p: int) -> NecklacePoly:
    """The p-th power map on A/([A,A] + pA).

    Works on any representative; the result does not depend on the choice.
    """
    require_prime(p)
    if f.modulus != p:
        raise RingMismatchError(f"frobenius_p needs coefficients mod {p}, got {f.modulus}")
    rep = f.to_free() if isinstance(f, NecklacePoly) else f
    return project(rep ** p)
