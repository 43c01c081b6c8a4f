"""Compiled vs pure-Python kernels on a generated power-law graph.

    python3 benchmarks/bench_backends.py --vertices 20000 --k 3 4 --repeat 3
"""
import argparse
import time

from kclique import CountConfig, count_cliques
from kclique._backend import COMPILED_AVAILABLE, get
from kclique.generators import power_law_graph
from kclique.ordering import directionalize


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=20000)
    ap.add_argument("--avg-degree", type=float, default=20.0)
    ap.add_argument("--k", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if not COMPILED_AVAILABLE:
        raise SystemExit("compiled kernels are not built; nothing to compare")

    g = power_law_graph(args.vertices, args.avg_degree, seed=args.seed)
    print(f"graph: vertices={g.num_vertices} edges={g.num_edges}")
    print(f"{'phase':<28}{'python_s':>12}{'compiled_s':>12}{'speedup':>10}")

    def row(name, fns):
        (tp, rp), (tc, rc) = (best_of(f, args.repeat) for f in fns)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree ({rp} vs {rc})")
        print(f"{name:<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}")

    row("degree orientation", [lambda b=b: directionalize(g, "degree", backend=b).num_edges
                               for b in ("python", "compiled")])
    row("core order", [lambda b=b: get(b).core_order(g.offsets, g.neighbors).tolist()
                       for b in ("python", "compiled")])
    for k in args.k:
        for strategy in ("citron", "baseline"):
            row(f"count k={k} {strategy}",
                [lambda b=b: count_cliques(g, CountConfig(k=k, strategy=strategy, backend=b))[0]
                 for b in ("python", "compiled")])


if __name__ == "__main__":
    main()
