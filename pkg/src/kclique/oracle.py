"""Brute-force k-clique counter used as ground truth in tests.

Deliberately shares nothing with the counting engines: no DAG, no ordering,
no subgraph workspaces.  Neighborhoods are Python-int bitsets and each clique
is grown only through higher-id vertices, so it is counted once.
"""
from __future__ import annotations

from .errors import OracleGuardError, UsageError

MAX_VERTICES = 10_000


def _higher_neighbor_masks(g):
    off = g.offsets.tolist()
    adj = g.neighbors.tolist()
    masks = []
    for u in range(g.num_vertices):
        m = 0
        for e in range(off[u], off[u + 1]):
            v = adj[e]
            if v > u:
                m |= 1 << v
        masks.append(m)
    return masks


def brute_force_count(g, k, max_vertices=MAX_VERTICES):
    if k < 1:
        raise UsageError("k must be >= 1")
    if g.num_vertices > max_vertices:
        raise OracleGuardError(
            f"oracle refuses graphs with more than {max_vertices} vertices "
            f"(got {g.num_vertices})")
    if k == 1:
        return g.num_vertices
    if k == 2:
        return g.num_edges
    up = _higher_neighbor_masks(g)

    def extend(cand, depth):
        # cand: vertices adjacent to every chosen vertex and above all of them
        if depth == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & up[v]
            if nxt.bit_count() >= depth - 1:
                total += extend(nxt, depth - 1)
        return total

    return sum(extend(up[u], k - 1) for u in range(g.num_vertices)
               if up[u].bit_count() >= k - 1)


def triangle_trace(g):
    """trace(A^3) / 6 on a dense adjacency matrix."""
    import numpy as np

    n = g.num_vertices
    a = np.zeros((n, n), dtype=np.int64)
    src = np.repeat(np.arange(n), g.degrees())
    a[src, g.neighbors] = 1
    return int(np.trace(a @ a @ a)) // 6
