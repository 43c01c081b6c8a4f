"""Acceptance suite: one or more tests per criterion, summarized per criterion
at the end of the run (see conftest.py)."""
import itertools
import os
import time

import numpy as np
import pytest

from kclique import (
    COMPILED_AVAILABLE,
    CountConfig,
    brute_force_count,
    count_cliques,
    directionalize,
    load_graph,
    max_out_degree,
    work_model,
)
from kclique.generators import complete_graph, erdos_renyi, example_graph, relabel
from kclique.graph import RankAssignment
from kclique.ordering import degree_ranks

COMBOS = list(itertools.product(["core", "degree"], ["baseline", "citron"]))
PRUNES = ["on", "off", "paper"]

EXAMPLE_DEGREE_DAG = {(0, 1), (0, 3), (0, 4), (1, 4), (2, 1), (2, 5), (3, 1), (3, 4),
                   (5, 4), (6, 4), (6, 5)}


def random_graphs(count, seed):
    rng = np.random.default_rng(seed)
    probs = (0.1, 0.3, 0.6)
    for i in range(count):
        n = int(rng.integers(5, 65))
        yield erdos_renyi(n, probs[i % 3], seed=int(rng.integers(2**32)))


def naive_degeneracy(g):
    """Peel a minimum-degree vertex at a time with plain sets."""
    adj = {u: set(g.neighborhood(u).tolist()) for u in range(g.num_vertices)}
    best = 0
    while adj:
        u = min(adj, key=lambda x: len(adj[x]))
        best = max(best, len(adj[u]))
        for v in adj.pop(u):
            adj[v].discard(u)
    return best


def direct_work_model(d):
    out = [d.out_neighborhood(u).tolist() for u in range(d.num_vertices)]
    return sum(len(out[u]) * sum(len(out[v]) for v in out[u]) for u in range(d.num_vertices))


# ---------------------------------------------------------------- 1

@pytest.mark.criterion(1, "oracle equivalence on 200 random graphs + example graph, k=3..8, 4 combos x 3 prune modes")
def test_oracle_equivalence():
    t0 = time.perf_counter()
    graphs = [example_graph()] + list(random_graphs(200, seed=2024))
    checked = 0
    for g in graphs:
        for k in range(3, 9):
            expected = brute_force_count(g, k)
            for (ordering, strategy), prune in itertools.product(COMBOS, PRUNES):
                cfg = CountConfig(k=k, ordering=ordering, strategy=strategy, prune=prune)
                got, _ = count_cliques(g, cfg)
                assert got == expected, (g.num_vertices, g.num_edges, k, ordering, strategy, prune)
                checked += 1
    elapsed = time.perf_counter() - t0
    print(f"criterion 1: {checked} runs agree with the oracle in {elapsed:.1f}s")
    assert elapsed < 60


# ---------------------------------------------------------------- 2

@pytest.mark.criterion(2, "example graph golden values")
def test_example_golden(example):
    assert [brute_force_count(example, k) for k in (3, 4, 5)] == [5, 1, 0]
    for (ordering, strategy), prune in itertools.product(COMBOS, PRUNES):
        got = [count_cliques(example, CountConfig(k=k, ordering=ordering, strategy=strategy,
                                               prune=prune))[0] for k in (3, 4, 5)]
        assert got == [5, 1, 0], (ordering, strategy, prune)
    dag = directionalize(example, "degree")
    assert dag.edge_set() == EXAMPLE_DEGREE_DAG
    assert max_out_degree(dag) == 3
    assert max_out_degree(directionalize(example, "core")) == 3


# ---------------------------------------------------------------- 3

@pytest.mark.criterion(3, "core ordering attains the degeneracy; degree ordering never beats it")
def test_core_ordering_optimal():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    for i in range(100):
        n = int(rng.integers(2, 80))
        p = float(rng.choice([0.05, 0.1, 0.2, 0.4, 0.7]))
        g = erdos_renyi(n, p, seed=1000 + i)
        c = naive_degeneracy(g)
        assert max_out_degree(directionalize(g, "core")) == c
        assert max_out_degree(directionalize(g, "degree")) >= c
    assert time.perf_counter() - t0 < 10


# ---------------------------------------------------------------- 4

def _worker_counts():
    return sorted({1, 2, 4, 8, os.cpu_count() or 1})


@pytest.mark.criterion(4, "counts identical across worker counts and schedules on the power-law graph")
@pytest.mark.slow
def test_schedule_invariance(power_law):
    t0 = time.perf_counter()
    for k in (3, 4, 5):
        seen = {}
        for w in _worker_counts():
            for sched in ("static", "cyclic", "dynamic:64", "dynamic:1"):
                for strategy in ("citron", "baseline"):
                    cfg = CountConfig(k=k, workers=w, schedule=sched, strategy=strategy)
                    seen[(w, sched, strategy)], stats = count_cliques(power_law, cfg)
                    assert len(stats.per_worker_iterations) == w
        values = set(seen.values())
        print(f"criterion 4: k={k} count={values} over {len(seen)} configurations")
        assert len(values) == 1, seen
    assert time.perf_counter() - t0 < 300


# ---------------------------------------------------------------- 5

def _traffic(g, k, prune="on"):
    out = {}
    for strategy in ("citron", "baseline"):
        cfg = CountConfig(k=k, strategy=strategy, instrument=True, prune=prune)
        _, st = count_cliques(g, cfg)
        out[strategy] = (st.array_accesses, st.max_subgraph_bytes)
    return out


def _test_graphs():
    yield "example", example_graph()
    for n in (4, 6, 10):
        yield f"K{n}", complete_graph(n)
    for i, g in enumerate(random_graphs(30, seed=99)):
        if g.num_edges:
            yield f"er{i}", g


@pytest.mark.criterion(5, "CITRON moves fewer array elements and smaller subgraphs than the baseline")
def test_traffic_direction_small():
    # pruning off: every first-level subgraph gets built by both engines, so
    # no k leaves both counters at zero
    for name, g in _test_graphs():
        for k in (3, 4, 5):
            t = _traffic(g, k, prune="off")
            assert t["citron"][0] < t["baseline"][0], (name, k, t)
            assert t["citron"][1] < t["baseline"][1], (name, k, t)


@pytest.mark.criterion(5, "CITRON moves fewer array elements and smaller subgraphs than the baseline")
@pytest.mark.slow
def test_traffic_ratio_power_law(power_law):
    t0 = time.perf_counter()
    for k in (3, 4):
        t = _traffic(power_law, k)
        ratio = t["baseline"][0] / t["citron"][0]
        print(f"criterion 5: k={k} accesses baseline={t['baseline'][0]} citron={t['citron'][0]} "
              f"ratio={ratio:.3f} bytes baseline={t['baseline'][1]} citron={t['citron'][1]}")
        assert t["citron"][1] < t["baseline"][1]
        assert ratio > 1.5
    assert time.perf_counter() - t0 < 300


# ---------------------------------------------------------------- 6

def _best_orientation_time(g, workers, trials=5):
    best = float("inf")
    for _ in range(trials):
        t0 = time.perf_counter()
        directionalize(g, "degree", workers=workers)
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.mark.criterion(6, "degree orientation speedup >= 3x at 8 workers vs 1")
@pytest.mark.slow
def test_orientation_speedup(power_law):
    t0 = time.perf_counter()
    directionalize(power_law, "degree", workers=8)  # warm the thread pool
    t1 = _best_orientation_time(power_law, 1)
    t8 = _best_orientation_time(power_law, 8)
    speedup = t1 / t8
    print(f"criterion 6: backend compiled={COMPILED_AVAILABLE} cpus={os.cpu_count()} "
          f"t1={t1:.4f}s t8={t8:.4f}s speedup={speedup:.2f}")
    assert time.perf_counter() - t0 < 60
    assert speedup >= 3.0


# ---------------------------------------------------------------- 7

@pytest.mark.criterion(7, "work model value on example graph and relabeling invariance")
def test_work_model(example):
    t0 = time.perf_counter()
    dag = directionalize(example, "degree")
    assert direct_work_model(dag) == 17
    assert work_model(dag) == 17
    core = directionalize(example, "core")
    assert work_model(core) == direct_work_model(core)

    rng = np.random.default_rng(31)
    g = erdos_renyi(40, 0.3, seed=5)
    base_ranks = degree_ranks(g).ranks
    base = work_model(directionalize(g, "degree"))
    base_count = count_cliques(g, CountConfig(k=4))[0]
    for _ in range(50):
        perm = rng.permutation(g.num_vertices)
        h = relabel(g, perm)
        # carry each vertex's rank over to its new name
        ranks = np.empty_like(base_ranks)
        ranks[perm] = base_ranks
        d = directionalize(h, "core", ranks=RankAssignment(ranks))
        assert work_model(d) == base
        assert count_cliques(h, CountConfig(k=4))[0] == base_count
        hf = relabel(example, rng.permutation(example.num_vertices))
        assert brute_force_count(hf, 3) == 5
    assert time.perf_counter() - t0 < 5


# ---------------------------------------------------------------- 8

@pytest.mark.criterion(8, "Cit-Patents: configurations agree, CITRON counts faster (optional)")
@pytest.mark.slow
def test_cit_patents():
    path = os.environ.get("KCLIQUE_CIT_PATENTS")
    if not path or not os.path.exists(path):
        pytest.skip("set KCLIQUE_CIT_PATENTS to a local copy of cit-Patents.txt(.csrbin)")
    g = load_graph(path)
    workers = os.cpu_count() or 1
    counts, times = {}, {}
    for ordering, strategy in COMBOS:
        c, st = count_cliques(g, CountConfig(k=3, ordering=ordering, strategy=strategy,
                                             workers=workers, schedule="cyclic"))
        counts[(ordering, strategy)] = c
        times[(ordering, strategy)] = st.counting_time
    print(f"criterion 8: counts={counts} times={times}")
    assert len(set(counts.values())) == 1
    assert times[("degree", "citron")] < times[("degree", "baseline")]
