"""Induced-subgraph builders for the counting recursion (pure Python).

Two interchangeable strategies live here:

* the compact sorted-CSR builder ("citron"): a subgraph is an offsets array
  plus an append-only adjacency buffer, filled by merge-intersecting sorted
  neighbor slices.  Vertices of a child are identified by their position in
  the parent's slice, so children never need a vertex array or a remap.
* the label-vector builder ("baseline"), a faithful re-creation of kClist:
  a global label array marks membership, ids are remapped into ``[0, c)`` at
  the first level, each member owns a ``c``-strided slot in one flat
  adjacency array, and deeper levels partition those slots in place.

The compiled kernels in ``_ckernels.pyx`` implement the same procedures and
the same access-counting rule, so the two backends can be cross-checked
exactly.

Access-counting rule: one element read or one element write to an adjacency,
offsets, label, remap, degree or vertex-set array counts as one access.  A
value is loaded once and then kept in a register, so a linear merge loads
each element it looks at exactly once; a galloping search counts one load per
probe plus the search key and the final equality check.
"""
from __future__ import annotations

from .graph import Dag


class Tally:
    """Per-worker work counters.

    ``iterations`` counts inner-loop iterations (merge steps or neighbor
    scans).  ``accesses`` is only updated while ``track`` is set, which the
    engines do while building first-level subgraphs.
    """

    __slots__ = ("accesses", "iterations", "track")

    def __init__(self, track=True):
        self.accesses = 0
        self.iterations = 0
        self.track = track


# galloping replaces the linear merge once one side is this many times longer
GALLOP_RATIO = 8


def _gallop(a, lo, n, y):
    """First index in ``a[lo:n]`` holding a value >= ``y``; returns (index, probes)."""
    probes = 0
    left, right = lo, n
    step = 1
    while True:
        p = lo + step - 1
        if p >= n:
            break
        probes += 1
        if a[p] >= y:
            right = p
            break
        left = p + 1
        step <<= 1
    while left < right:
        mid = (left + right) >> 1
        probes += 1
        if a[mid] >= y:
            right = mid
        else:
            left = mid + 1
    return left, probes


def _gallop_intersect(a, b, out, pos):
    """Intersection for skewed inputs; searches the longer list per element
    of the shorter one.  Reports positions in ``a`` like the merge does."""
    na, nb = len(a), len(b)
    m = probes = 0
    if na >= nb:
        i = 0
        for y in b:
            i, p = _gallop(a, i, na, y)
            probes += p + 2
            if i == na:
                break
            if a[i] == y:
                if out is not None:
                    out[pos + m] = i
                m += 1
                i += 1
    else:
        j = 0
        for i in range(na):
            x = a[i]
            j, p = _gallop(b, j, nb, x)
            probes += p + 2
            if j == nb:
                break
            if b[j] == x:
                if out is not None:
                    out[pos + m] = i
                m += 1
                j += 1
    return m, probes, probes


def _skewed(na, nb):
    return na > GALLOP_RATIO * nb or nb > GALLOP_RATIO * na


def merge_positions(a, b, out, pos):
    """Intersection of sorted ``a`` and ``b``.

    Writes the indices ``i`` with ``a[i]`` in ``b`` to ``out[pos:]``.
    Returns ``(matches, iterations, loads)``.  A two-pointer merge is used
    unless the lengths are skewed, in which case the shorter list gallops
    through the longer one.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0, 0, 0
    if _skewed(na, nb):
        return _gallop_intersect(a, b, out, pos)
    i = j = m = it = 0
    neq = 0
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        it += 1
        if x < y:
            i += 1
            neq = 1
        elif x > y:
            j += 1
            neq = 1
        else:
            out[pos + m] = i
            m += 1
            i += 1
            j += 1
            neq = 0
    return m, it, i + j + neq


def merge_count(a, b):
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0, 0, 0
    if _skewed(na, nb):
        return _gallop_intersect(a, b, None, 0)
    i = j = m = it = 0
    neq = 0
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        it += 1
        if x < y:
            i += 1
            neq = 1
        elif x > y:
            j += 1
            neq = 1
        else:
            m += 1
            i += 1
            j += 1
            neq = 0
    return m, it, i + j + neq


class DagLevel:
    """A Dag seen as the parent structure of every first-level subgraph."""

    def __init__(self, dag, k):
        self.dag = dag
        self.level = k
        self.n = dag.num_vertices
        self.off = dag.offsets.tolist()
        self.adj = dag.out_neighbors.tolist()

    def vertex(self, i):
        return i

    def neighbors(self, i):
        return self.adj[self.off[i]:self.off[i + 1]]


def _as_parent(structure, k):
    if isinstance(structure, Dag):
        return DagLevel(structure, k)
    return structure


class Subgraph:
    """Handle to a compact subgraph held in a workspace level.

    Valid until the same workspace level is rebuilt.  ``members[i]`` is the
    parent-local index of vertex ``i``; adjacency entries are local indices.
    """

    __slots__ = ("level", "n", "off", "adj", "parent", "members")

    def __init__(self, level, n, off, adj, parent, members):
        self.level = level
        self.n = n
        self.off = off
        self.adj = adj
        self.parent = parent
        self.members = members

    def vertex(self, i):
        return self.parent.vertex(self.members[i])

    @property
    def vertices(self):
        return [self.vertex(i) for i in range(self.n)]

    @property
    def offsets(self):
        return self.off[:self.n + 1]

    @property
    def adjacency(self):
        return self.adj[:self.off[self.n]] if self.n else []

    @property
    def degrees(self):
        off = self.off
        return [off[i + 1] - off[i] for i in range(self.n)]

    @property
    def num_edges(self):
        return self.off[self.n] if self.n else 0

    def neighbors(self, i):
        return self.adj[self.off[i]:self.off[i + 1]]

    def edges(self):
        """Edge set in DAG vertex ids."""
        return {(self.vertex(i), self.vertex(j))
                for i in range(self.n) for j in self.neighbors(i)}

    def nbytes(self):
        # 64-bit offsets, 32-bit adjacency; the vertex set is a view of the parent
        return (self.n + 1) * 8 + self.num_edges * 4


class SubgraphWorkspace:
    """Preallocated per-level buffers for one worker (levels 2 .. k-1)."""

    def __init__(self, k, max_vertices, max_edges):
        self.k = k
        self.max_vertices = max_vertices
        self.max_edges = max_edges
        self.offsets = [None] * k
        self.adjacency = [None] * k
        for level in range(2, k):
            self.offsets[level] = [0] * (max_vertices + 1)
            self.adjacency[level] = [0] * max(max_edges, 1)


def _build_child(parent, i, ws, level, tally):
    off_p, adj_p = parent.off, parent.adj
    lo, hi = off_p[i], off_p[i + 1]
    members = adj_p[lo:hi]
    na = hi - lo
    if na > ws.max_vertices:
        raise ValueError(f"subgraph of {na} vertices exceeds workspace capacity {ws.max_vertices}")
    off = ws.offsets[level]
    adj = ws.adjacency[level]
    off[0] = 0
    pos = its = loads = 0
    for t in range(na):
        w = members[t]
        m, it, ld = merge_positions(members, adj_p[off_p[w]:off_p[w + 1]], adj, pos)
        pos += m
        off[t + 1] = pos
        its += it
        loads += ld
    if tally is not None:
        tally.iterations += its
        if tally.track:
            tally.accesses += 3 + 4 * na + loads + pos
    return Subgraph(level, na, off, adj, parent, members)


def build_first_level_citron(d, u, ws, tally=None):
    """Subgraph induced by the out-neighbors of ``u``, at level ``ws.k - 1``."""
    return _build_child(_as_parent(d, ws.k), u, ws, ws.k - 1, tally)


def build_next_level_citron(parent, v, ws, tally=None):
    """Child of ``parent`` induced by the slice of its ``v``-th vertex."""
    if parent.level <= 3:
        raise ValueError("level 3 subgraphs only feed degrees_only_citron")
    return _build_child(parent, v, ws, parent.level - 1, tally)


def degrees_only_citron(parent, v, tally=None):
    """Degree array of the would-be child at ``v``, without building it.

    ``parent`` may also be a Dag (or DagLevel), for k = 3 counting.
    """
    parent = _as_parent(parent, 3)
    off_p, adj_p = parent.off, parent.adj
    lo, hi = off_p[v], off_p[v + 1]
    members = adj_p[lo:hi]
    sizes = []
    its = loads = 0
    for w in members:
        m, it, ld = merge_count(members, adj_p[off_p[w]:off_p[w + 1]])
        sizes.append(m)
        its += it
        loads += ld
    if tally is not None:
        tally.iterations += its
        if tally.track:
            tally.accesses += 2 + 3 * len(members) + loads
    return sizes


class LabelWorkspace:
    """kClist-style per-worker state.

    ``labels``/``remap`` span all DAG vertices; everything else lives in the
    remapped id space ``[0, core)`` where ``core`` is the DAG's max out-degree.
    """

    def __init__(self, num_vertices, k, core):
        self.k = k
        self.core = core
        self.labels = [k] * num_vertices
        self.remap = [-1] * num_vertices
        self.old = [0] * core
        self.adj = [0] * (core * core)
        self.sublabels = [0] * core
        self.degrees = [None] * k
        self.nodes = [None] * k
        self.size = [0] * k
        for level in range(2, k):
            self.degrees[level] = [0] * core
            self.nodes[level] = [0] * core

    def nbytes(self):
        """Footprint of the first-level subgraph structure (int32 entries)."""
        c = self.core
        return 4 * c * c + 16 * c


class BaselineSubgraph:
    """Handle to one level of a LabelWorkspace."""

    __slots__ = ("level", "lw")

    def __init__(self, level, lw):
        self.level = level
        self.lw = lw

    @property
    def n(self):
        return self.lw.size[self.level]

    def local_ids(self):
        return self.lw.nodes[self.level][:self.n]

    @property
    def vertices(self):
        old = self.lw.old
        return [old[v] for v in self.local_ids()]

    @property
    def degrees(self):
        d = self.lw.degrees[self.level]
        return [d[v] for v in self.local_ids()]

    def neighbors_local(self, v):
        lw = self.lw
        base = v * lw.core
        return lw.adj[base:base + lw.degrees[self.level][v]]

    def edges(self):
        old = self.lw.old
        return {(old[v], old[w]) for v in self.local_ids() for w in self.neighbors_local(v)}


def _baseline_first(dag_level, u, lw, tally):
    k = lw.k
    c = lw.core
    lab, new, old, sub = lw.labels, lw.remap, lw.old, lw.sublabels
    off, adj = dag_level.off, dag_level.adj
    d = lw.degrees[k - 1]
    nodes = lw.nodes[k - 1]
    acc = 2
    n1 = 0
    for e in range(off[u], off[u + 1]):
        v = adj[e]
        acc += 2
        if lab[v] == k:
            lab[v] = k - 1
            new[v] = n1
            old[n1] = v
            sub[n1] = k - 1
            nodes[n1] = n1
            d[n1] = 0
            acc += 6
            n1 += 1
    lw.size[k - 1] = n1
    flat = lw.adj
    its = 0
    for i in range(n1):
        v = old[i]
        acc += 3
        base = i * c
        for e in range(off[v], off[v + 1]):
            w = adj[e]
            its += 1
            acc += 2
            if lab[w] == k - 1:
                flat[base + d[i]] = new[w]
                d[i] += 1
                acc += 4
    for i in range(n1):
        v = old[i]
        lab[v] = k
        new[v] = -1
        acc += 3
    if tally is not None:
        tally.iterations += its
        if tally.track:
            tally.accesses += acc
    return BaselineSubgraph(k - 1, lw)


def _baseline_next(lw, level, u, tally):
    """Build level-1 from local vertex ``u`` of ``level`` (kClist's inner step)."""
    c = lw.core
    sub, flat = lw.sublabels, lw.adj
    dl = lw.degrees[level]
    dn = lw.degrees[level - 1]
    nodes = lw.nodes[level - 1]
    n = 0
    base = u * c
    for j in range(base, base + dl[u]):
        v = flat[j]
        if sub[v] == level:
            sub[v] = level - 1
            nodes[n] = v
            n += 1
            dn[v] = 0
    lw.size[level - 1] = n
    its = 0
    for jj in range(n):
        v = nodes[jj]
        kk = c * v
        end = kk + dl[v]
        while kk < end:
            w = flat[kk]
            its += 1
            if sub[w] == level - 1:
                dn[v] += 1
                kk += 1
            else:
                # move non-members behind the members of v's slot
                end -= 1
                flat[kk] = flat[end]
                flat[end] = w
    if tally is not None:
        tally.iterations += its
    return BaselineSubgraph(level - 1, lw)


def release_baseline(sg):
    """Restore the labels touched when ``sg`` was built (level exit)."""
    lw = sg.lw
    sub = lw.sublabels
    up = sg.level + 1
    for v in sg.local_ids():
        sub[v] = up


def build_subgraph_baseline(structure, u, lw, level, tally=None):
    """kClist subgraph construction.

    At ``level == lw.k`` the structure is the Dag and ``u`` a DAG vertex;
    the first-level remap happens here and global labels are restored before
    returning.  Below that, ``structure`` is a BaselineSubgraph at ``level``
    and ``u`` indexes its vertex list; call :func:`release_baseline` on the
    result once its recursion is done.
    """
    if level == lw.k:
        return _baseline_first(_as_parent(structure, lw.k), u, lw, tally)
    if structure.level != level:
        raise ValueError(f"structure is at level {structure.level}, not {level}")
    return _baseline_next(lw, level, structure.local_ids()[u], tally)
