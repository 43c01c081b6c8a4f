"""Pure-Python kernels, interface-compatible with ``_ckernels``.

Used when the compiled extension is missing (or forced through
``KCLIQUE_BACKEND=python``).  Workers are simulated: vertices are split across
``workers`` partitions exactly as the schedule would hand them out, then each
partition runs in turn.  Results and per-worker accounting keep the same
shape as the compiled path; only wall time differs.
"""
from __future__ import annotations

import heapq

import numpy as np

from .subgraph import (
    DagLevel,
    LabelWorkspace,
    SubgraphWorkspace,
    Tally,
    _baseline_first,
    _baseline_next,
    _build_child,
    degrees_only_citron,
    release_baseline,
)

NAME = "python"

STATIC, CYCLIC, DYNAMIC = 0, 1, 2


def orient_degree(offsets, neighbors, workers=1):
    n = len(offsets) - 1
    deg = np.diff(offsets)
    src = np.repeat(np.arange(n, dtype=np.int64), deg)
    dst = neighbors.astype(np.int64)
    keep = (deg[src] < deg[dst]) | ((deg[src] == deg[dst]) & (src < dst))
    return _assemble(n, src[keep], dst[keep])


def orient_rank(offsets, neighbors, ranks, workers=1):
    n = len(offsets) - 1
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(offsets))
    dst = neighbors.astype(np.int64)
    keep = ranks[src] < ranks[dst]
    return _assemble(n, src[keep], dst[keep])


def _assemble(n, src, dst):
    off = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=off[1:])
    return off, dst.astype(np.int32)


def core_order(offsets, neighbors):
    """Matula-Beck peeling; ties go to the smallest id (lazy-deletion heap)."""
    n = len(offsets) - 1
    off = offsets.tolist()
    adj = neighbors.tolist()
    deg = np.diff(offsets).tolist()
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for e in range(off[v], off[v + 1]):
            w = adj[e]
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return np.array(order, dtype=np.int64)


def partition(n, workers, schedule, chunk):
    """Vertex lists per worker, as the given loop schedule would assign them."""
    if schedule == STATIC:
        return [list(p) for p in np.array_split(np.arange(n), workers)]
    if schedule == CYCLIC:
        return [list(range(w, n, workers)) for w in range(workers)]
    parts = [[] for _ in range(workers)]
    for c, start in enumerate(range(0, n, chunk)):
        parts[c % workers].extend(range(start, min(start + chunk, n)))
    return parts


class Accumulator:
    __slots__ = ("value", "tally")

    def __init__(self, tally=None):
        self.value = 0
        self.tally = tally if tally is not None else Tally(track=False)


def recurse(level, sub, ws, acc, need):
    """Count the cliques completed inside ``sub``, which enters at ``level``.

    ``need[l]`` is the smallest subgraph that may enter level ``l``; pass all
    zeros to disable pruning.
    """
    tally = acc.tally
    if level == 2:
        acc.value += sub.num_edges
        return
    off = sub.off
    if level == 3:
        for i in range(sub.n):
            if off[i + 1] - off[i] < need[2]:
                continue
            acc.value += sum(degrees_only_citron(sub, i, tally))
        return
    for i in range(sub.n):
        if off[i + 1] - off[i] < need[level - 1]:
            continue
        child = _build_child(sub, i, ws, level - 1, tally)
        recurse(level - 1, child, ws, acc, need)


def _citron_vertex(parent, u, k, ws, acc, need, instrument):
    tally = acc.tally
    na = parent.off[u + 1] - parent.off[u]
    if na < need[k - 1]:
        return 0
    tally.track = instrument
    if k == 3:
        sizes = degrees_only_citron(parent, u, tally)
        tally.track = False
        e = sum(sizes)
        acc.value += e
        return (na + 1) * 8 + e * 4
    sub = _build_child(parent, u, ws, k - 1, tally)
    tally.track = False
    recurse(k - 1, sub, ws, acc, need)
    return sub.nbytes()


def count_citron(dag_off, dag_adj, k, workers, schedule, chunk, need, instrument, edge_cap):
    from .graph import Dag

    dag = Dag(dag_off, dag_adj)
    n = dag.num_vertices
    c = int(np.diff(dag_off).max(initial=0))
    parent = DagLevel(dag, k)
    partials, iterations = [], []
    accesses = max_bytes = 0
    for part in partition(n, workers, schedule, chunk):
        ws = SubgraphWorkspace(k, c, edge_cap)
        acc = Accumulator(Tally(track=False))
        for u in part:
            max_bytes = max(max_bytes, _citron_vertex(parent, u, k, ws, acc, need, instrument))
        partials.append(acc.value)
        iterations.append(acc.tally.iterations)
        accesses += acc.tally.accesses
    return partials, iterations, accesses, max_bytes, False


def _baseline_recurse(lw, level, need, tally):
    if level == 2:
        d = lw.degrees[2]
        nodes = lw.nodes[2]
        return sum(d[nodes[i]] for i in range(lw.size[2]))
    total = 0
    d = lw.degrees[level]
    nodes = lw.nodes[level]
    for i in range(lw.size[level]):
        u = nodes[i]
        if d[u] < need[level - 1]:
            continue
        child = _baseline_next(lw, level, u, tally)
        total += _baseline_recurse(lw, level - 1, need, tally)
        release_baseline(child)
    return total


def count_baseline(dag_off, dag_adj, k, workers, schedule, chunk, need, instrument):
    from .graph import Dag

    dag = Dag(dag_off, dag_adj)
    n = dag.num_vertices
    c = int(np.diff(dag_off).max(initial=0))
    parent = DagLevel(dag, k)
    partials, iterations = [], []
    accesses = 0
    max_bytes = 0
    for part in partition(n, workers, schedule, chunk):
        lw = LabelWorkspace(n, k, c)
        tally = Tally(track=False)
        total = 0
        for u in part:
            if parent.off[u + 1] - parent.off[u] < need[k - 1]:
                continue
            tally.track = instrument
            _baseline_first(parent, u, lw, tally)
            tally.track = False
            max_bytes = lw.nbytes()
            total += _baseline_recurse(lw, k - 1, need, tally)
        partials.append(total)
        iterations.append(tally.iterations)
        accesses += tally.accesses
    return partials, iterations, accesses, max_bytes, False
