#!/usr/bin/env python3
"""Rough timing of the exact oracles over seeded random graphs.

Useful when tuning cutoffs: prints mean and worst milliseconds for diss,
alpha, nu_s, and the induced-matching detour.
"""

import argparse
import statistics
import time

from dissolab.corpus import random_graph_corpus
from dissolab.exact import (
    diss_via_induced_matchings,
    dissociation_number_exact,
    independence_number_exact,
    induced_matching_number_exact,
)


def bench(fn, graphs):
    times = []
    for g in graphs:
        start = time.perf_counter()
        fn(g)
        times.append(1000 * (time.perf_counter() - start))
    return statistics.mean(times), max(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--max-n", type=int, default=16)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    graphs = random_graph_corpus(args.count, args.max_n, args.seed)
    solvers = [
        ("diss", lambda g: dissociation_number_exact(g, cutoff=args.max_n)),
        ("alpha", lambda g: independence_number_exact(g, cutoff=args.max_n)),
        ("nu_s", lambda g: induced_matching_number_exact(g, cutoff=args.max_n)),
        ("detour", lambda g: diss_via_induced_matchings(g, cutoff=args.max_n)),
    ]
    print(f"{args.count} graphs, n <= {args.max_n}, seed {args.seed}")
    for name, fn in solvers:
        mean, worst = bench(fn, graphs)
        print(f"{name:>7}: mean {mean:7.2f} ms   worst {worst:7.2f} ms")


if __name__ == "__main__":
    main()
