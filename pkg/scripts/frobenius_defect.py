"""How far is <X><Y> from a Teichmuller-shaped ghost vector, mod p?

For each prime, print the class (XY)^p - X^p Y^p in F_p<X,Y>/[ , ] together with
its size, i.e. the coordinate-1 defect that the obstruction engines report.
"""
import argparse

from ncwitt.algebra import XY, format_poly, reduce_mod
from ncwitt.necklace import project
from ncwitt.verify import primes_upto


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-prime", type=int, default=13)
    args = ap.parse_args()
    X, Y = XY.var("X"), XY.var("Y")
    for p in primes_upto(args.max_prime):
        d = project(reduce_mod((X * Y) ** p - X ** p * Y ** p, p))
        print(f"p={p:>3}  terms={len(d)}  {format_poly(d)}")


if __name__ == "__main__":
    main()
