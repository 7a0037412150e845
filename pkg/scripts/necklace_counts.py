"""Count distinct necklaces by minimal-rotation canonicalization and compare with
Burnside's formula (1/n) sum_{d | n} phi(d) k^(n/d)."""
import argparse
from itertools import product
from math import gcd

from ncwitt.necklace import min_rotation


def burnside(n, k):
    phi = lambda m: sum(1 for i in range(1, m + 1) if gcd(i, m) == 1)  # noqa: E731
    return sum(phi(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--alphabet", type=int, default=2)
    args = ap.parse_args()
    k = args.alphabet
    ok = True
    for n in range(1, args.max_len + 1):
        counted = len({min_rotation(w) for w in product(range(k), repeat=n)})
        expected = burnside(n, k)
        ok &= counted == expected
        print(f"n={n:>2}  canonical={counted:>6}  burnside={expected:>6}  {'ok' if counted == expected else 'MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
