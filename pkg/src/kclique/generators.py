"""Small graph fixtures and seeded random generators."""
from __future__ import annotations

import itertools

import numpy as np

from .ingest import build_undirected

# undirected example graph with 7 vertices and 11 edges
EXAMPLE_EDGES = [
    (0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (1, 2),
    (2, 5), (3, 4), (4, 6), (4, 5), (5, 6),
]


def example_graph():
    return build_undirected(EXAMPLE_EDGES)


def complete_graph(n):
    return build_undirected(list(itertools.combinations(range(n), 2)))


def empty_graph(n=0):
    """``n`` isolated vertices (CSR only; ingest never creates these)."""
    from .graph import UndirectedGraph

    return UndirectedGraph(np.zeros(n + 1, np.int64), np.empty(0, np.int32))


def erdos_renyi(n, p, seed=None):
    """G(n, p) on exactly ``n`` vertices (isolated vertices kept)."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return _from_pairs(n, iu[keep], ju[keep])


def power_law_graph(n, avg_degree=20.0, exponent=2.5, seed=None):
    """Chung-Lu style graph with power-law expected degrees.

    Endpoints of ``n * avg_degree / 2`` candidate edges are drawn with
    probability proportional to weights ``w_i ~ (i + i0)^(-1/(exponent-1))``;
    self-loops and repeats are dropped, so the realized edge count is a bit
    lower than requested.
    """
    rng = np.random.default_rng(seed)
    alpha = 1.0 / (exponent - 1.0)
    i0 = max(1.0, n ** 0.1)
    w = (np.arange(n) + i0) ** (-alpha)
    p = w / w.sum()
    m = int(n * avg_degree / 2)
    u = rng.choice(n, size=m, p=p)
    v = rng.choice(n, size=m, p=p)
    # scatter hubs across the id space so id order carries no degree signal
    perm = rng.permutation(n)
    return _from_pairs(n, perm[u], perm[v])


def _from_pairs(n, u, v):
    from .graph import UndirectedGraph

    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    keep = u != v
    u, v = u[keep], v[keep]
    keys = np.unique(np.concatenate([u * n + v, v * n + u]))
    src, dst = np.divmod(keys, n)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return UndirectedGraph(offsets, dst.astype(np.int32))


def relabel(g, perm):
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    perm = np.asarray(perm, dtype=np.int64)
    e = g.edges().astype(np.int64)
    return _from_pairs(g.num_vertices, perm[e[:, 0]], perm[e[:, 1]])
