"""Exhaustive (2,1) sweep: decide against both oracles for every tuple up to n.

    python scripts/sweep_small.py --max-n 5 --alphabet abc
"""

import argparse
import itertools
import time

from overlap_chain import Instance, decide, extract_certificate, oracle_backtrack, oracle_permutations, verify_certificate


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--alphabet", default="abc")
    args = parser.parse_args()

    words = ["".join(w) for w in itertools.product(args.alphabet, repeat=2)]
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        total = yes = bad = 0
        for combo in itertools.product(words, repeat=n):
            u = Instance(combo, 2, 1)
            d = decide(u).answer
            c = extract_certificate(u)
            ok = d == oracle_backtrack(u) == oracle_permutations(u) and (c is not None) == d
            ok = ok and (c is None or bool(verify_certificate(u, c)))
            total += 1
            yes += d
            bad += not ok
        print(f"n={n}: {total} instances, {yes} YES, {bad} mismatches, {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
