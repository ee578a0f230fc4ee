"""Sweep every idempotent theorem over 2x2 integer idempotents with entries in [-B, B]
and print a verdict-pattern table per theorem.

    python scripts/integer_sweep.py --bound 2 --jobs 4
"""

import argparse
import collections
import time

from drazin.rings import IdempotentFamily
from drazin.theorems import PAIR_THEOREMS, sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=2)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    fam = IdempotentFamily.parametrized(args.bound)
    failed = False
    for label in PAIR_THEOREMS:
        start = time.perf_counter()
        s = sweep(label, fam, fam, parallelism=args.jobs)
        patterns = collections.Counter(
            " ".join("M" if c.decision.is_member else "N" for c in r.conditions) for r in s.reports
        )
        print(f"{label}: {s.pairs_checked} pairs, {len(s.violations)} violations, "
              f"{s.negatives} negative, {time.perf_counter() - start:.1f}s")
        for pattern, count in sorted(patterns.items()):
            print(f"    {pattern}: {count}")
        failed |= bool(s.violations)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
