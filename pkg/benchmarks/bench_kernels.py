"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from patternclass._backend import available
from patternclass.generators import random_graph, random_k_tree
from patternclass.patterns import FamilyBits, catalog_pattern


def workloads(quick: bool):
    scale = 1 if quick else 5
    big = random_k_tree(4000 * scale, 6, seed=1)
    big_order = None
    # a chordal graph in LexBFS order has no occurrence of pattern 4, so the scan is exhaustive
    chordal = random_k_tree(40 * scale, 3, seed=2)
    perm = available()["python"].lexbfs(chordal.indptr, chordal.indices, chordal.n)
    permuted = chordal.dense()[np.ix_(perm, perm)]
    pat = catalog_pattern(4).matrix()
    small = random_graph(9, 0.5, seed=4).dense()
    fam = [catalog_pattern(i).matrix() for i in FamilyBits.of(4, 5).indices()]

    def lexbfs(k):
        return k.lexbfs(big.indptr, big.indices, big.n)

    def peo(k):
        nonlocal big_order
        if big_order is None:
            big_order = np.ascontiguousarray(lexbfs(k))
        return k.peo_violation(big.indptr, big.indices, big_order)

    return {
        f"lexbfs (n={big.n}, m={big.m})": lexbfs,
        f"peo_violation (n={big.n})": peo,
        f"first_violation (n={chordal.n}, no occurrence)": lambda k: k.first_violation(permuted, pat),
        "oracle_search (n=9, family {4,5})": lambda k: k.oracle_search(small, fam),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    backends = available()
    print(f"{'kernel':<44}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in workloads(args.quick).items():
        times = {name: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for name, k in backends.items()}
        row = f"{label:<44}" + "".join(f"{t:>11.4f}s" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / max(times['cython'], 1e-9):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
