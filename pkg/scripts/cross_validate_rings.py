"""Compare the engine with the brute-force oracle over a batch of finite rings.

    python scripts/cross_validate_rings.py --max-n 64
"""

import argparse
import time

from drazin.oracle import cross_validate
from drazin.rings import Matrix, Modular, PrimeField, Product


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=64, help="largest modulus for Z_n")
    args = parser.parse_args()

    rings = [Modular(n) for n in range(2, args.max_n + 1)]
    rings += [Matrix(2, PrimeField(2)), Matrix(2, PrimeField(3)), Matrix(2, Modular(4)),
              Product(Modular(2), Modular(3)), Product(Modular(4), Matrix(2, PrimeField(2)))]
    total = bad = 0
    start = time.perf_counter()
    for ring in rings:
        res = cross_validate(ring)
        total += res.elements_checked
        bad += len(res.mismatches)
        if res.mismatches:
            print(f"{ring.describe()}: {len(res.mismatches)} mismatches")
    print(f"{len(rings)} rings, {total} elements, {bad} mismatches, {time.perf_counter() - start:.2f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
