"""Vertex orderings and directionalization of the undirected graph."""
from __future__ import annotations

import enum

import numpy as np

from . import _backend
from .errors import UsageError
from .graph import Dag, RankAssignment, _check_vertex


class OrderingKind(enum.Enum):
    CORE = "core"
    DEGREE = "degree"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown ordering {value!r}") from None


def core_ordering(g, backend=None):
    """Degeneracy ordering: ranks follow removal order of min-degree peeling.

    Earlier-removed vertices get lower ranks, so orienting edges from low to
    high rank bounds every out-degree by the degeneracy.  Ties between
    minimum-degree vertices go to the smaller id.
    """
    order = _backend.get(backend).core_order(g.offsets, g.neighbors)
    return RankAssignment.from_order(order)


def degree_ranks(g):
    """RankAssignment of the degree order (degree, then id)."""
    deg = g.degrees()
    return RankAssignment.from_order(np.lexsort((np.arange(g.num_vertices), deg)))


def degree_rank_less(g, u, v):
    if u == v:
        raise UsageError("degree_rank_less needs two distinct vertices")
    _check_vertex(g.num_vertices, u)
    _check_vertex(g.num_vertices, v)
    du = g.offsets[u + 1] - g.offsets[u]
    dv = g.offsets[v + 1] - g.offsets[v]
    return bool(du < dv or (du == dv and u < v))


def directionalize(g, kind=OrderingKind.DEGREE, workers=1, backend=None, ranks=None):
    """Orient every edge from lower to higher rank.

    Degree orientation compares degrees directly in both parallel passes;
    core orientation first peels the graph (sequential) and then orients by
    rank.  Out-neighbor lists keep the input's ascending id order.
    """
    kind = OrderingKind.parse(kind)
    if workers < 1:
        raise UsageError("workers must be >= 1")
    k = _backend.get(backend)
    if kind is OrderingKind.DEGREE:
        off, adj = k.orient_degree(g.offsets, g.neighbors, workers)
    else:
        if ranks is None:
            ranks = core_ordering(g, backend=backend)
        off, adj = k.orient_rank(g.offsets, g.neighbors, ranks.ranks, workers)
    return Dag(off, adj)


def degeneracy(g):
    """Degeneracy via the core ordering (max min-degree seen while peeling)."""
    d = directionalize(g, OrderingKind.CORE)
    return int(d.out_degrees().max(initial=0))
