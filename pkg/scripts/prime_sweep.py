"""Run every verification check for all primes up to a bound and tabulate timings.

    python scripts/prime_sweep.py --max-prime 61 --trunc 3
"""
import argparse

from ncwitt.verify import sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-prime", type=int, default=31)
    ap.add_argument("--trunc", type=int, default=2)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    reports = sweep(args.max_prime, args.trunc, args.jobs)
    print(f"{'p':>4}  {'check':<16}{'verdict':<8}{'time (ms)':>10}")
    for r in reports:
        print(f"{r.prime:>4}  {r.check:<16}{r.verdict:<8}{1000 * r.wall_time:>10.2f}")
    bad = [r for r in reports if not r.holds]
    print(f"\n{len(reports) - len(bad)}/{len(reports)} checks hold")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
