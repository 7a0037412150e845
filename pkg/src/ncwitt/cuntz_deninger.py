"""Cuntz-Deninger objects at truncation n.

Elements of X_n(A) carry a certificate: an integer combination of generator
witnesses ``V^m(<a_1>...<a_r>)`` together with the realized coordinate vector
in A^n.  E_n(A) elements (``ESymbol``) are witness combinations over brackets
``[r]`` of the monoid algebra ZA; they are only ever pushed to ghost space.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Sequence, Tuple

from .algebra import FreePoly, RingMismatchError
from .ghost import GhostVector, ghost_components
from .necklace import project, require_prime


def cd_teichmuller(a: FreePoly, n: int, p: int) -> Tuple[FreePoly, ...]:
    """(a, a^p, a^{p^2}, ..., a^{p^{n-1}})."""
    require_prime(p)
    out = [a]
    for _ in range(n - 1):
        out.append(out[-1] ** p)
    return tuple(out[:n])


def cd_verschiebung(v: Sequence[FreePoly], p: int) -> Tuple[FreePoly, ...]:
    """(a_0, a_1, ...) -> (0, p a_0, p a_1, ...), same length."""
    v = tuple(v)
    if not v:
        return v
    return (v[0].gens.zero(v[0].modulus),) + tuple(a.scale(p) for a in v[:-1])


@dataclass(frozen=True)
class TeichWitness:
    """The generator ``V^shift(<f_1> ... <f_r>)``."""

    shift: int
    factors: Tuple[FreePoly, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        if not factors:
            raise ValueError("a witness needs at least one factor")
        for f in factors:
            factors[0]._check(f)
        object.__setattr__(self, "factors", factors)

    @property
    def gens(self):
        return self.factors[0].gens

    @property
    def modulus(self):
        return self.factors[0].modulus


def realize(w: TeichWitness, n: int, p: int) -> Tuple[FreePoly, ...]:
    """Coordinates of the witness in A^n.

    Coordinate k is ``p^m * prod_j f_j^(p^(k-m))`` for k >= m and 0 below.
    """
    require_prime(p)
    m = w.shift
    zero = w.gens.zero(w.modulus)
    if m >= n:
        return (zero,) * n
    towers = [cd_teichmuller(f, n - m, p) for f in w.factors]
    body = []
    for k in range(n - m):
        prod = towers[0][k]
        for t in towers[1:]:
            prod = prod * t[k]
        body.append(prod.scale(p ** m))
    return (zero,) * m + tuple(body)


def _add_coords(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _clean_combo(combo) -> Dict[TeichWitness, int]:
    return {w: c for w, c in combo.items() if c}


@dataclass(frozen=True)
class XElement:
    """An element of X_n(A) together with its membership certificate."""

    p: int
    n: int
    combo: Mapping[TeichWitness, int]
    realized: Tuple[FreePoly, ...] = field(compare=False)

    @classmethod
    def from_combo(cls, combo: Mapping[TeichWitness, int], n: int, p: int, gens, modulus=None) -> "XElement":
        combo = _clean_combo(dict(combo))
        acc = (gens.zero(modulus),) * n
        for w, c in combo.items():
            acc = _add_coords(acc, tuple(x.scale(c) for x in realize(w, n, p)))
        return cls(p, n, combo, acc)

    def __post_init__(self):
        require_prime(self.p)
        if len(self.realized) != self.n:
            raise ValueError("realized vector has the wrong length")

    def verify(self) -> bool:
        """Recompute the realization from the certificate."""
        gens = self.realized[0].gens
        again = XElement.from_combo(self.combo, self.n, self.p, gens, self.realized[0].modulus)
        return again.realized == self.realized

    def __add__(self, other: "XElement") -> "XElement":
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("X elements differ in prime or truncation")
        combo = dict(self.combo)
        for w, c in other.combo.items():
            combo[w] = combo.get(w, 0) + c
        return XElement(self.p, self.n, _clean_combo(combo), _add_coords(self.realized, other.realized))

    def scale(self, k: int) -> "XElement":
        return XElement(self.p, self.n, _clean_combo({w: k * c for w, c in self.combo.items()}),
                        tuple(a.scale(k) for a in self.realized))


def omega_embed(coords: Sequence[FreePoly], p: int) -> XElement:
    """Omega(a) = sum_i V^i<a_i>, certified equal to the Witt polynomials of a."""
    coords = tuple(coords)
    if not coords:
        raise ValueError("need at least one coordinate")
    if any(a.modulus is not None for a in coords):
        raise RingMismatchError("omega_embed needs integer coefficients")
    n = len(coords)
    combo = {}
    for i, a in enumerate(coords):
        if a:
            w = TeichWitness(i, (a,))
            combo[w] = combo.get(w, 0) + 1
    x = XElement.from_combo(combo, n, p, coords[0].gens)
    if x.realized != ghost_components(coords, p):
        raise AssertionError("omega_embed certificate does not match the Witt polynomials")
    return x


def gamma_bar(v, p: int = None) -> GhostVector:
    """Project each coordinate of a vector in A^n (or an XElement) to A/[A,A]."""
    if isinstance(v, XElement):
        p, v = v.p, v.realized
    if p is None:
        raise ValueError("prime required for a bare coordinate vector")
    return GhostVector(p, tuple(project(a) for a in v))


# -- E_n(A) = X_n(ZA) / X_n(I) --------------------------------------------------

@dataclass(frozen=True)
class Bracket:
    """The basis element [r] of the monoid algebra ZA (so [X+Y] != [X] + [Y])."""

    value: FreePoly

    def __str__(self):
        return f"[{self.value}]"


@dataclass(frozen=True)
class EWitness:
    shift: int
    factors: Tuple[Bracket, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.shift < 0 or not self.factors:
            raise ValueError("bad witness")

    def to_a(self) -> TeichWitness:
        # the ring map ZA -> A sends [r] to r
        return TeichWitness(self.shift, tuple(b.value for b in self.factors))


@dataclass(frozen=True)
class ESymbol:
    p: int
    n: int
    combo: Mapping[EWitness, int]

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "combo", _clean_combo(dict(self.combo)))

    @classmethod
    def teichmuller(cls, a: FreePoly, n: int, p: int) -> "ESymbol":
        return cls(p, n, {EWitness(0, (Bracket(a),)): 1})

    def __add__(self, other: "ESymbol") -> "ESymbol":
        self._match(other)
        combo = dict(self.combo)
        for w, c in other.combo.items():
            combo[w] = combo.get(w, 0) + c
        return ESymbol(self.p, self.n, combo)

    def scale(self, k: int) -> "ESymbol":
        return ESymbol(self.p, self.n, {w: k * c for w, c in self.combo.items()})

    def __mul__(self, other: "ESymbol") -> "ESymbol":
        # only products of unshifted Teichmuller words stay witnesses
        self._match(other)
        combo = {}
        for w1, c1 in self.combo.items():
            for w2, c2 in other.combo.items():
                if w1.shift or w2.shift:
                    raise ValueError("products involving V are not formed at the witness level")
                w = EWitness(0, w1.factors + w2.factors)
                combo[w] = combo.get(w, 0) + c1 * c2
        return ESymbol(self.p, self.n, combo)

    def verschiebung(self) -> "ESymbol":
        return ESymbol(self.p, self.n, {EWitness(w.shift + 1, w.factors): c for w, c in self.combo.items()})

    def _match(self, other):
        if not isinstance(other, ESymbol) or (self.p, self.n) != (other.p, other.n):
            raise ValueError("E symbols differ in prime or truncation")


def eta_bar(e: ESymbol, gens=None) -> GhostVector:
    """Ghost image of an E_n(A) element: map brackets to A, realize, project."""
    if not e.combo:
        if gens is None:
            raise ValueError("generator set needed for the zero symbol")
        return GhostVector.zero(gens, e.p, e.n)
    combo = {}
    for w, c in e.combo.items():
        tw = w.to_a()
        combo[tw] = combo.get(tw, 0) + c
    first = next(iter(combo))
    x = XElement.from_combo(combo, e.n, e.p, first.gens, first.modulus)
    return gamma_bar(x, e.p)
