#!/usr/bin/env python3
"""Benchmark the similarity engines under each kernel backend.

Builds a synthetic nested-world triple set, groups it, then times the
inverted-index and exhaustive engines with the compiled and the pure-Python
kernels. Run from the repository root:

    python3 benchmarks/bench_kernels.py            # full run
    python3 benchmarks/bench_kernels.py --quick    # smaller input
"""

import argparse
import random
import sys
import time

from kghier import kernels
from kghier.grouping import generate_groups
from kghier.ingest import SymbolTable, TripleSet
from kghier.similarity import all_pairs_bruteforce, all_pairs_indexed

import numpy as np


def synthetic_triples(n_triples: int, seed: int = 1234) -> TripleSet:
    """Nested location chains plus hobbies; groups overlap heavily."""
    rng = random.Random(seed)
    continents = [f"continent{i}" for i in range(6)]
    countries = {f"country{i}": continents[i % 6] for i in range(40)}
    cities = {f"city{i}": f"country{i % 40}" for i in range(240)}
    city_names = sorted(cities)
    sports = [f"sport{i}" for i in range(80)]
    symbols = SymbolTable()
    live = symbols.intern_predicate("LiveIn")
    plays = symbols.intern_predicate("Plays")
    rows = []
    entity = 0
    while len(rows) < n_triples:
        e = symbols.intern_entity(f"e{entity}")
        entity += 1
        city = rng.choice(city_names)
        chain = (city, cities[city], countries[cities[city]])
        for obj in chain:
            if rng.random() >= 0.05:
                rows.append((e, live, symbols.intern_entity(obj)))
        rows.append((e, plays, symbols.intern_entity(rng.choice(sports))))
    return TripleSet(np.array(rows[:n_triples], dtype=np.int64), symbols)


def bench(func, *args, repeat=3, **kwargs):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--jobs", type=int, nargs="+", default=[1, 4])
    args = parser.parse_args(argv)

    n_triples = 30_000 if args.quick else 150_000
    triples = synthetic_triples(n_triples)
    table = generate_groups(triples, alpha=10)
    sizes = table.sizes()
    print(f"triples={len(triples)} groups={len(table)} "
          f"members: total={int(sizes.sum())} max={int(sizes.max())}")

    backends = kernels.available_backends()
    if backends == ["python"]:
        print("note: compiled backend not built, timing pure Python only")

    engines = [("indexed", all_pairs_indexed), ("bruteforce", all_pairs_bruteforce)]
    reference = None
    print(f"\n{'engine':<12} {'backend':<8} {'jobs':<5} {'seconds':>9}   records")
    for engine_name, engine in engines:
        for backend in backends:
            kernels.use_backend(backend)
            for jobs in args.jobs:
                repeat = 1 if backend == "python" and engine_name == "bruteforce" else 3
                elapsed, matrix = bench(engine, table, jobs=jobs, repeat=repeat)
                print(f"{engine_name:<12} {backend:<8} {jobs:<5} {elapsed:>9.3f}   {len(matrix)}")
                if reference is None:
                    reference = matrix
                elif matrix != reference:
                    print("ERROR: engines/backends disagree", file=sys.stderr)
                    return 1
    kernels.use_backend("auto")
    print("\nall engine/backend combinations returned identical matrices")
    return 0


if __name__ == "__main__":
    sys.exit(main())
