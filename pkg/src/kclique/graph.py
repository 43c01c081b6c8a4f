"""CSR graph containers and their invariant checks.

Both containers use 64-bit offsets and 32-bit vertex ids.  They are treated as
immutable once built; nothing in the package writes into their arrays.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import UsageError

OFFSET_DTYPE = np.int64
VERTEX_DTYPE = np.int32


@dataclass(frozen=True)
class Violation:
    invariant: str
    witness: tuple

    def __str__(self):
        return f"{self.invariant}: {self.witness}"


def _as_offsets(a):
    return np.ascontiguousarray(a, dtype=OFFSET_DTYPE)


def _as_vertices(a):
    return np.ascontiguousarray(a, dtype=VERTEX_DTYPE)


@dataclass(frozen=True, eq=False)
class UndirectedGraph:
    """Symmetric CSR adjacency; every undirected edge is stored twice."""

    offsets: np.ndarray
    neighbors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offsets", _as_offsets(self.offsets))
        object.__setattr__(self, "neighbors", _as_vertices(self.neighbors))

    @property
    def num_vertices(self):
        return len(self.offsets) - 1

    @property
    def num_edges(self):
        return len(self.neighbors) // 2

    def degrees(self):
        return np.diff(self.offsets)

    def neighborhood(self, u):
        _check_vertex(self.num_vertices, u)
        return self.neighbors[self.offsets[u]:self.offsets[u + 1]]

    def edges(self):
        """Each undirected edge once, as an (m, 2) array with u < v."""
        src = np.repeat(np.arange(self.num_vertices, dtype=VERTEX_DTYPE), self.degrees())
        keep = src < self.neighbors
        return np.column_stack([src[keep], self.neighbors[keep]])

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return (np.array_equal(self.offsets, other.offsets)
                and np.array_equal(self.neighbors, other.neighbors))

    def __repr__(self):
        return f"UndirectedGraph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


@dataclass(frozen=True, eq=False)
class Dag:
    """Directed CSR; each undirected edge appears once, lists sorted by id."""

    offsets: np.ndarray
    out_neighbors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offsets", _as_offsets(self.offsets))
        object.__setattr__(self, "out_neighbors", _as_vertices(self.out_neighbors))

    @property
    def num_vertices(self):
        return len(self.offsets) - 1

    @property
    def num_edges(self):
        return len(self.out_neighbors)

    def out_degrees(self):
        return np.diff(self.offsets)

    def out_neighborhood(self, u):
        _check_vertex(self.num_vertices, u)
        return self.out_neighbors[self.offsets[u]:self.offsets[u + 1]]

    def edge_set(self):
        src = np.repeat(np.arange(self.num_vertices), self.out_degrees())
        return set(zip(src.tolist(), self.out_neighbors.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Dag):
            return NotImplemented
        return (np.array_equal(self.offsets, other.offsets)
                and np.array_equal(self.out_neighbors, other.out_neighbors))

    def __repr__(self):
        return f"Dag(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


@dataclass(frozen=True, eq=False)
class RankAssignment:
    """ranks[v] is v's position in the total order; edges go low -> high."""

    ranks: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "ranks", np.ascontiguousarray(self.ranks, dtype=np.int64))

    @classmethod
    def from_order(cls, order):
        order = np.asarray(order, dtype=np.int64)
        ranks = np.empty(len(order), dtype=np.int64)
        ranks[order] = np.arange(len(order), dtype=np.int64)
        return cls(ranks)

    def order(self):
        return np.argsort(self.ranks, kind="stable")

    def is_bijection(self):
        n = len(self.ranks)
        if n == 0:
            return True
        if self.ranks.min() < 0 or self.ranks.max() >= n:
            return False
        return bool(np.all(np.bincount(self.ranks, minlength=n) == 1))

    def __len__(self):
        return len(self.ranks)

    def __getitem__(self, v):
        return int(self.ranks[v])


def _check_vertex(n, u):
    if not (0 <= int(u) < n):
        raise UsageError(f"vertex {u} out of range for graph with {n} vertices")


def degree(g, u):
    _check_vertex(g.num_vertices, u)
    return int(g.offsets[u + 1] - g.offsets[u])


def out_degree(d, u):
    _check_vertex(d.num_vertices, u)
    return int(d.offsets[u + 1] - d.offsets[u])


def max_out_degree(d):
    if d.num_vertices == 0:
        return 0
    return int(np.diff(d.offsets).max(initial=0))


def _csr_violations(offsets, targets, n):
    out = []
    if len(offsets) == 0:
        return [Violation("offsets length", ("len(offsets)", 0))]
    if offsets[0] != 0:
        out.append(Violation("offsets[0] == 0", ("offsets[0]", int(offsets[0]))))
    if offsets[-1] != len(targets):
        out.append(Violation("offsets[|V|] == len(neighbors)", (int(offsets[-1]), len(targets))))
    steps = np.diff(offsets)
    bad = np.flatnonzero(steps < 0)
    if len(bad):
        out.append(Violation("offsets non-decreasing", ("vertex", int(bad[0]))))
    if out:
        # the per-list checks below assume sane offsets
        return out
    if len(targets):
        oob = np.flatnonzero((targets < 0) | (targets >= n))
        if len(oob):
            out.append(Violation("neighbor id in range", ("entry", int(oob[0]), int(targets[oob[0]]))))
            return out
    src = np.repeat(np.arange(n, dtype=np.int64), steps)
    loops = np.flatnonzero(src == targets)
    if len(loops):
        out.append(Violation("no self-loops", ("vertex", int(src[loops[0]]))))
    if len(targets) > 1:
        same = src[1:] == src[:-1]
        unsorted = np.flatnonzero(same & (targets[1:] < targets[:-1]))
        if len(unsorted):
            out.append(Violation("unsorted list", ("vertex", int(src[unsorted[0]]))))
        dups = np.flatnonzero(same & (targets[1:] == targets[:-1]))
        if len(dups):
            out.append(Violation("duplicate neighbor",
                                 ("vertex", int(src[dups[0]]), int(targets[dups[0]]))))
    return out


def _find_cycle_vertex(d):
    n = d.num_vertices
    indeg = np.bincount(d.out_neighbors, minlength=n).tolist()
    off = d.offsets.tolist()
    adj = d.out_neighbors.tolist()
    queue = deque(v for v in range(n) if indeg[v] == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for e in range(off[u], off[u + 1]):
            w = adj[e]
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen == n:
        return None
    return next(v for v in range(n) if indeg[v] > 0)


def validate(g, reference=None):
    """Return every broken invariant of ``g`` as a list of Violations.

    For a Dag, pass the UndirectedGraph it was built from as ``reference`` to
    also check the edge count and that each undirected edge kept exactly one
    direction.
    """
    if isinstance(g, UndirectedGraph):
        out = _csr_violations(g.offsets, g.neighbors, g.num_vertices)
        if out:
            return out
        src = np.repeat(np.arange(g.num_vertices, dtype=np.int64), g.degrees())
        n = max(g.num_vertices, 1)
        fwd = np.sort(src * n + g.neighbors)
        rev = np.sort(g.neighbors.astype(np.int64) * n + src)
        if not np.array_equal(fwd, rev):
            diff = np.setdiff1d(fwd, rev)
            u, v = divmod(int(diff[0]), n)
            out.append(Violation("symmetry", ("edge", u, v)))
        return out
    if isinstance(g, Dag):
        out = _csr_violations(g.offsets, g.out_neighbors, g.num_vertices)
        if out:
            return out
        witness = _find_cycle_vertex(g)
        if witness is not None:
            out.append(Violation("cycle", ("vertex", witness)))
        if reference is not None:
            if g.num_edges != reference.num_edges:
                out.append(Violation("edge count", (g.num_edges, reference.num_edges)))
            n = max(g.num_vertices, 1)
            src = np.repeat(np.arange(g.num_vertices, dtype=np.int64), g.out_degrees())
            dst = g.out_neighbors.astype(np.int64)
            directed = np.sort(np.minimum(src, dst) * n + np.maximum(src, dst))
            ue = reference.edges().astype(np.int64)
            undirected = np.sort(ue[:, 0] * n + ue[:, 1])
            if not np.array_equal(directed, undirected):
                out.append(Violation("edge partition", ("directed edges do not match graph",)))
        return out
    raise UsageError(f"cannot validate {type(g).__name__}")
