"""Compare the compiled and pure-Python search kernels.

Runs each kernel on the same seeded random graphs with both backends,
checks the answers agree, and prints per-kernel timings and the speedup.

    python3 benchmarks/bench_kernels.py --sizes 20 30 40 --graphs 5
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from toeplitz.core import DenseGraph, new_spec, to_dense
from toeplitz.kernels import _pykernels

try:
    from toeplitz.kernels import _ckernels
except ImportError:
    _ckernels = None


def random_graph(n: int, p: float, rng: random.Random) -> DenseGraph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return DenseGraph.from_edges(n, edges)


def random_toeplitz(n: int, rng: random.Random) -> DenseGraph:
    k = rng.randint(2, max(2, n // 4))
    return to_dense(new_spec(n, rng.sample(range(1, n), k)), cap=n)


def _maximal_cliques(g: DenseGraph) -> list[int]:
    from toeplitz.oracle import maximal_cliques

    return [c for c in maximal_cliques(g) if c.bit_count() >= 2]


KERNELS = {
    "max_clique": lambda impl, g, _: impl.max_clique(g.rows, g.n),
    "chromatic": lambda impl, g, _: impl.chromatic(g.rows, g.n),
    "find_hole": lambda impl, g, _: impl.find_hole(g.rows, g.n, False),
    "find_odd_hole": lambda impl, g, _: impl.find_hole(g.rows, g.n, True),
    "edge_clique_cover": lambda impl, g, cl: len(impl.edge_clique_cover(g.rows, g.n, cl)),
}


def _time(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 24, 32])
    parser.add_argument("--graphs", type=int, default=4, help="graphs per size and family")
    parser.add_argument("--density", type=float, default=0.3)
    parser.add_argument("--cover-max-n", type=int, default=16, help="skip the edge cover kernel above this n")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':<18} {'family':<9} {'n':>4} {'python ms':>11} {'cython ms':>11} {'speedup':>8}")
    for n in args.sizes:
        families = {
            "random": [random_graph(n, args.density, rng) for _ in range(args.graphs)],
            "toeplitz": [random_toeplitz(n, rng) for _ in range(args.graphs)],
        }
        for family, graphs in families.items():
            cliques = [_maximal_cliques(g) if n <= args.cover_max_n else None for g in graphs]
            for name, kernel in KERNELS.items():
                if name == "edge_clique_cover" and n > args.cover_max_n:
                    continue
                py_times, c_times = [], []
                for g, cl in zip(graphs, cliques):
                    tp, rp = _time(lambda: kernel(_pykernels, g, cl), args.repeat)
                    tc, rc = _time(lambda: kernel(_ckernels, g, cl), args.repeat)
                    if rp != rc:
                        print(f"backends disagree on {name} for n={n}: {rp!r} vs {rc!r}", file=sys.stderr)
                        return 1
                    py_times.append(tp)
                    c_times.append(tc)
                py, c = statistics.mean(py_times), statistics.mean(c_times)
                print(f"{name:<18} {family:<9} {n:>4} {py * 1e3:>11.3f} {c * 1e3:>11.3f} {py / c if c else float('inf'):>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
