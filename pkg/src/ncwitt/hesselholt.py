"""Truncated Witt vectors W_n(A) for non-commutative A, compared through ghosts.

Coordinates are a chosen preimage under the set map A^n -> W_n(A).  Equality is
decided on ghost images, which is sound when A/[A,A] has no p-torsion (true
for free algebras over Z, whose quotient is free on necklaces).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebra import FreePoly, RingMismatchError
from .ghost import GhostVector, ghost_map
from .necklace import require_prime


@dataclass(frozen=True)
class WittVector:
    p: int
    coords: Tuple[FreePoly, ...]

    def __post_init__(self):
        require_prime(self.p)
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("Witt vector needs at least one coordinate")
        for a in coords:
            if a.modulus is not None:
                raise RingMismatchError("Witt vectors here need integer coefficients")
            coords[0]._check(a)
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    @property
    def gens(self):
        return self.coords[0].gens


def teichmuller(a: FreePoly, n: int, p: int) -> WittVector:
    if n < 1:
        raise ValueError("truncation must be >= 1")
    zero = a.gens.zero(a.modulus)
    return WittVector(p, (a,) + (zero,) * (n - 1))


def verschiebung(w: WittVector) -> WittVector:
    # fixed truncation: the last coordinate falls off
    zero = w.gens.zero()
    return WittVector(w.p, (zero,) + w.coords[:-1])


def ghost_image(w: WittVector) -> GhostVector:
    return ghost_map(w.coords, w.p)


def witt_eq(w1: WittVector, w2: WittVector) -> bool:
    if w1.p != w2.p or len(w1) != len(w2):
        raise ValueError("Witt vectors differ in prime or truncation")
    return ghost_image(w1) == ghost_image(w2)

