#!/usr/bin/env python3
"""Measure transport word sizes over seeded random tuple pairs.

For each tuple size k, sample random source/destination pairs from
pairwise distinct orbits, build the transport word, verify it by exact
replay, and report word-length statistics."""

import argparse
import random
import statistics

from fourshift.core import Config, DomainError, validate_tuple
from fourshift.transporter import transport, verify


def rand_tuple(rng, k, span, max_cells):
    while True:
        comps = tuple(
            Config.from_cells({rng.randrange(-span, span + 1):
                               rng.randrange(1, 4)
                               for _ in range(rng.randrange(1, max_cells + 1))}
                              or {0: 1})
            for _ in range(k))
        try:
            return validate_tuple(comps)
        except DomainError:
            continue


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=50,
                    help="pairs per tuple size")
    ap.add_argument("--max-k", type=int, default=5)
    ap.add_argument("--span", type=int, default=5)
    ap.add_argument("--max-cells", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'k':>2} {'trials':>6} {'min':>5} {'median':>7} {'max':>5}")
    for k in range(1, args.max_k + 1):
        sizes = []
        for _ in range(args.trials):
            src = rand_tuple(rng, k, args.span, args.max_cells)
            dst = rand_tuple(rng, k, args.span, args.max_cells)
            word = transport(src, dst)
            assert verify(word, src, dst)
            sizes.append(len(word.steps))
        print(f"{k:>2} {len(sizes):>6} {min(sizes):>5} "
              f"{statistics.median(sizes):>7.1f} {max(sizes):>5}")


if __name__ == "__main__":
    main()
