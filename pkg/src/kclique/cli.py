"""``kclique`` command line: count, validate, bench, convert.

Exit codes: 0 ok, 1 validation mismatch, 2 usage/input error, 3 count
overflow, 4 graph too large for the oracle.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import __version__
from .count import CountConfig, PruneMode, Schedule, Strategy, count_cliques
from .errors import CliqueOverflowError, FormatError, OracleGuardError, ParseError, UsageError
from .graph import max_out_degree
from .ingest import load_graph, save_csr
from .metrics import load_imbalance
from .oracle import MAX_VERTICES, brute_force_count
from .ordering import OrderingKind

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_OVERFLOW, EXIT_GUARD = 0, 1, 2, 3, 4

RECORD_KEYS = ("graph", "k", "ordering", "strategy", "workers", "trial",
               "ordering_s", "counting_s", "total_s", "cliques")


def parse_k_list(text):
    """'5' -> [5]; '3,4,6' -> [3, 4, 6]; '3..6' -> [3, 4, 5, 6]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks:
        raise argparse.ArgumentTypeError("empty k list")
    return ks


def _schedule(text):
    try:
        return Schedule.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    p = argparse.ArgumentParser(prog="kclique", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k_list=False):
        sp.add_argument("--graph", required=True, help="edge list or .csrbin cache")
        if k_list:
            sp.add_argument("-k", required=True, type=parse_k_list, help="e.g. 4, 3,4,5 or 3..6")
        else:
            sp.add_argument("-k", required=True, type=int)
        sp.add_argument("--ordering", choices=[o.value for o in OrderingKind], default="degree")
        sp.add_argument("--strategy", choices=[s.value for s in Strategy], default="citron")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--schedule", type=_schedule, default=Schedule(),
                        help="static, cyclic or dynamic:N (default dynamic:64)")
        sp.add_argument("--trials", type=int, default=1)
        sp.add_argument("--prune", choices=[m.value for m in PruneMode], default="on")
        sp.add_argument("--instrument", action="store_true")
        sp.add_argument("--output", choices=["human", "records"], default="human")
        sp.add_argument("--backend", choices=["compiled", "python"], default=None)

    common(sub.add_parser("count", help="count k-cliques"))
    common(sub.add_parser("validate", help="check every engine against the oracle"), k_list=True)
    bench = sub.add_parser("bench", help="worker-count scaling sweep")
    common(bench, k_list=True)
    bench.set_defaults(workers=os.cpu_count() or 1)
    conv = sub.add_parser("convert", help="write a .csrbin cache")
    conv.add_argument("--graph", required=True)
    conv.add_argument("--out", default=None, help="default: input path with .csrbin suffix")
    return p


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def format_record(fields):
    return " ".join(f"{key}={_fmt(value)}" for key, value in fields.items())


def _record(args, k, workers, trial, stats, cliques):
    rec = {
        "graph": Path(args.graph).name,
        "k": k,
        "ordering": args.ordering,
        "strategy": args.strategy,
        "workers": workers,
        "trial": trial,
        "ordering_s": stats["ordering_time"],
        "counting_s": stats["counting_time"],
        "total_s": stats["total_time"],
        "cliques": cliques,
    }
    if stats.get("array_accesses") is not None:
        rec["array_accesses"] = stats["array_accesses"]
        rec["work_model"] = stats["work_model"]
    return rec


def _config(args, k, workers=None):
    return CountConfig(k=k, ordering=args.ordering, strategy=args.strategy,
                       workers=workers or args.workers, schedule=args.schedule,
                       prune=args.prune, instrument=args.instrument, backend=args.backend)


def _mean_stats(runs):
    keys = ("ordering_time", "counting_time", "total_time")
    out = dict(runs[0].as_dict())
    for key in keys:
        out[key] = sum(getattr(r, key) for r in runs) / len(runs)
    return out


def _run_trials(g, cfg, trials):
    counts, runs = [], []
    for _ in range(trials):
        c, stats = count_cliques(g, cfg)
        counts.append(c)
        runs.append(stats)
    if len(set(counts)) != 1:
        raise RuntimeError(f"nondeterministic counts across trials: {counts}")
    return counts[0], runs


def _load(args, out):
    t0 = time.perf_counter()
    g = load_graph(args.graph)
    load_s = time.perf_counter() - t0
    if args.output == "human":
        print(f"graph={args.graph} vertices={g.num_vertices} edges={g.num_edges} "
              f"load_s={load_s:.6f}", file=out)
    return g


def cmd_count(args, out=None):
    out = out or sys.stdout
    if args.k < 3:
        raise UsageError(f"-k must be >= 3, got {args.k}")
    cfg = _config(args, args.k)
    g = _load(args, out)
    cliques, runs = _run_trials(g, cfg, args.trials)
    if args.output == "records":
        for i, st in enumerate(runs):
            print(format_record(_record(args, args.k, args.workers, i, st.as_dict(), cliques)), file=out)
        print(format_record(_record(args, args.k, args.workers, "mean", _mean_stats(runs), cliques)),
              file=out)
        return EXIT_OK
    for i, st in enumerate(runs):
        print(f"trial={i} ordering_s={st.ordering_time:.6f} counting_s={st.counting_time:.6f} "
              f"total_s={st.total_time:.6f}", file=out)
    m = _mean_stats(runs)
    print(f"mean ordering_s={m['ordering_time']:.6f} counting_s={m['counting_time']:.6f} "
          f"total_s={m['total_time']:.6f}", file=out)
    print(f"cliques={cliques}", file=out)
    st = runs[-1]
    print(f"max_out_degree={st.max_out_degree}", file=out)
    if args.instrument:
        print(f"array_accesses={st.array_accesses}", file=out)
        print(f"work_model={st.work_model}", file=out)
        print(f"max_subgraph_bytes={st.max_subgraph_bytes}", file=out)
        print(f"load_imbalance={load_imbalance(st):.6f}", file=out)
        print("per_worker_iterations=" + ",".join(map(str, st.per_worker_iterations)), file=out)
    return EXIT_OK


def cmd_validate(args, out=None):
    out = out or sys.stdout
    if min(args.k) < 3:
        raise UsageError("validate needs k >= 3")
    g = _load(args, out)
    if g.num_vertices > MAX_VERTICES:
        raise OracleGuardError(
            f"{g.num_vertices} vertices exceed the oracle limit of {MAX_VERTICES}")
    rows = []
    for k in args.k:
        expected = brute_force_count(g, k)
        for ordering in OrderingKind:
            for strategy in Strategy:
                cfg = CountConfig(k=k, ordering=ordering, strategy=strategy, workers=args.workers,
                                  schedule=args.schedule, prune=args.prune, backend=args.backend)
                got, _ = count_cliques(g, cfg)
                rows.append((k, ordering.value, strategy.value, got, expected))
    bad = [r for r in rows if r[3] != r[4]]
    for k, o, s, got, exp in rows:
        status = "ok" if got == exp else "MISMATCH"
        print(f"k={k} ordering={o} strategy={s} cliques={got} oracle={exp} status={status}", file=out)
    if bad:
        print(f"{len(bad)} of {len(rows)} configurations disagree with the oracle", file=out)
        return EXIT_MISMATCH
    print(f"all {len(rows)} configurations agree with the oracle", file=out)
    return EXIT_OK


def worker_sweep(max_workers):
    sweep, w = [], 1
    while w < max_workers:
        sweep.append(w)
        w *= 2
    sweep.append(max_workers)
    return sweep


def cmd_bench(args, out=None):
    out = out or sys.stdout
    if min(args.k) < 3:
        raise UsageError("bench needs k >= 3")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    g = _load(args, out)
    for k in args.k:
        base_time = None
        column = set()
        for w in worker_sweep(args.workers):
            cliques, runs = _run_trials(g, _config(args, k, w), args.trials)
            column.add(cliques)
            m = _mean_stats(runs)
            if base_time is None:
                base_time = m["counting_time"]
            speedup = base_time / m["counting_time"] if m["counting_time"] > 0 else float("inf")
            rec = _record(args, k, w, "mean", m, cliques)
            rec["speedup"] = speedup
            if args.output == "records":
                print(format_record(rec), file=out)
            else:
                print(f"k={k} workers={w:<3d} counting_s={m['counting_time']:.6f} "
                      f"speedup={speedup:6.2f} cliques={cliques}", file=out)
        if len(column) != 1:
            print(f"error: k={k} counts differ across worker counts: {sorted(column)}",
                  file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_convert(args, out=None):
    out = out or sys.stdout
    g = load_graph(args.graph)
    dest = args.out or str(Path(args.graph).with_suffix(".csrbin"))
    save_csr(g, dest)
    maxdeg = int(g.degrees().max(initial=0)) if g.num_vertices else 0
    print(f"vertices={g.num_vertices} edges={g.num_edges} max_degree={maxdeg} output={dest}",
          file=out)
    return EXIT_OK


COMMANDS = {"count": cmd_count, "validate": cmd_validate, "bench": cmd_bench,
            "convert": cmd_convert}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "trials", 1) < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CliqueOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except OracleGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
