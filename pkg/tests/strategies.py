"""Hypothesis strategies and brute-force oracles shared by the test modules."""
from math import gcd

import hypothesis.strategies as st

from ncwitt.algebra import XY, FreePoly


def words(max_len=6, ngens=2):
    return st.lists(st.integers(0, ngens - 1), max_size=max_len).map(tuple)


@st.composite
def polys(draw, max_deg=6, max_terms=8, modulus=None, coeff=20, gens=XY):
    terms = draw(st.dictionaries(words(max_deg, len(gens)), st.integers(-coeff, coeff), max_size=max_terms))
    return FreePoly(gens, terms, modulus)


def poly_triples(**kw):
    return st.tuples(polys(**kw), polys(**kw), polys(**kw))


def matrices(d=2, lo=-3, hi=3):
    row = st.tuples(*[st.integers(lo, hi)] * d)
    return st.tuples(*[row] * d)


# -- oracles ---------------------------------------------------------------------

def brute_min_rotation(w):
    w = tuple(w)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def burnside_necklaces(n, k):
    """Number of binary-or-k-ary necklaces of length n: (1/n) sum_{d|n} phi(d) k^(n/d)."""
    def phi(m):
        return sum(1 for i in range(1, m + 1) if gcd(i, m) == 1)
    return sum(phi(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def mat2_mul(a, b, m=None):
    """Explicit 2x2 product, written out entry by entry."""
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    r = ((a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
         (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11))
    if m:
        r = tuple(tuple(x % m for x in row) for row in r)
    return r


def mat2_pow(a, k, m=None):
    r = ((1, 0), (0, 1))
    for _ in range(k):
        r = mat2_mul(r, a, m)
    return r


@st.composite
def witt_coords(draw, n, p, budget=600, max_deg=2, coeff=5):
    """n symbolic coordinates; coordinate i gets raised to p^(n-1-i), so its term
    count is capped to keep that power's expansion under ``budget`` words."""
    out = []
    for i in range(n):
        e = p ** (n - 1 - i)
        t = 1
        while (t + 1) ** e <= budget and t < 3:
            t += 1
        out.append(draw(polys(max_deg=max_deg, max_terms=t, coeff=coeff)))
    return out
