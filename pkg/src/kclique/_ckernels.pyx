# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: DAG orientation, core peeling and both counting engines.

Mirrors ``_pycore`` procedure for procedure, including the access-counting
rule, so results (and instrumented counters) match exactly.
"""
import numpy as np
cimport numpy as cnp
from cython.parallel cimport parallel, prange, threadid
from libc.stdint cimport int32_t, int64_t, uint64_t, UINT64_MAX
from libc.stdlib cimport calloc, free, malloc

cnp.import_array()

NAME = "compiled"

DEF STATIC = 0
DEF CYCLIC = 1
DEF DYNAMIC = 2


# ---------------------------------------------------------------- orientation

cdef inline bint degree_less(const int64_t* off, int64_t u, int64_t v) noexcept nogil:
    cdef int64_t du = off[u + 1] - off[u]
    cdef int64_t dv = off[v + 1] - off[v]
    return du < dv or (du == dv and u < v)


cdef int64_t count_degree_out(const int64_t* off, const int32_t* nbr, int64_t u) noexcept nogil:
    cdef int64_t e, c = 0
    for e in range(off[u], off[u + 1]):
        if degree_less(off, u, nbr[e]):
            c += 1
    return c


cdef void write_degree_out(const int64_t* off, const int32_t* nbr, int64_t u,
                           int64_t pos, int32_t* out) noexcept nogil:
    cdef int64_t e
    cdef int32_t v
    for e in range(off[u], off[u + 1]):
        v = nbr[e]
        if degree_less(off, u, v):
            out[pos] = v
            pos += 1


cdef int64_t count_rank_out(const int64_t* off, const int32_t* nbr, const int64_t* rank,
                            int64_t u) noexcept nogil:
    cdef int64_t e, c = 0
    for e in range(off[u], off[u + 1]):
        if rank[u] < rank[nbr[e]]:
            c += 1
    return c


cdef void write_rank_out(const int64_t* off, const int32_t* nbr, const int64_t* rank,
                         int64_t u, int64_t pos, int32_t* out) noexcept nogil:
    cdef int64_t e
    cdef int32_t v
    for e in range(off[u], off[u + 1]):
        v = nbr[e]
        if rank[u] < rank[v]:
            out[pos] = v
            pos += 1


def orient_degree(const int64_t[::1] offsets, const int32_t[::1] neighbors, int workers=1):
    """Two-pass degree orientation; both passes are vertex-parallel."""
    cdef int64_t n = offsets.shape[0] - 1
    cdef int64_t u
    counts = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] cnt = counts
    cdef const int64_t* off = &offsets[0]
    cdef const int32_t* nbr = &neighbors[0] if neighbors.shape[0] else NULL
    for u in prange(n, nogil=True, schedule="guided", num_threads=workers):
        cnt[u] = count_degree_out(off, nbr, u)
    out_off = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=out_off[1:])
    out_adj = np.empty(out_off[n], dtype=np.int32)
    cdef int64_t[::1] oo = out_off
    cdef int32_t[::1] oa = out_adj
    cdef int32_t* optr = &oa[0] if oa.shape[0] else NULL
    for u in prange(n, nogil=True, schedule="guided", num_threads=workers):
        write_degree_out(off, nbr, u, oo[u], optr)
    return out_off, out_adj


def orient_rank(const int64_t[::1] offsets, const int32_t[::1] neighbors,
                const int64_t[::1] ranks, int workers=1):
    cdef int64_t n = offsets.shape[0] - 1
    cdef int64_t u
    counts = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] cnt = counts
    cdef const int64_t* off = &offsets[0]
    cdef const int32_t* nbr = &neighbors[0] if neighbors.shape[0] else NULL
    cdef const int64_t* rk = &ranks[0] if ranks.shape[0] else NULL
    for u in prange(n, nogil=True, schedule="guided", num_threads=workers):
        cnt[u] = count_rank_out(off, nbr, rk, u)
    out_off = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=out_off[1:])
    out_adj = np.empty(out_off[n], dtype=np.int32)
    cdef int64_t[::1] oo = out_off
    cdef int32_t[::1] oa = out_adj
    cdef int32_t* optr = &oa[0] if oa.shape[0] else NULL
    for u in prange(n, nogil=True, schedule="guided", num_threads=workers):
        write_rank_out(off, nbr, rk, u, oo[u], optr)
    return out_off, out_adj


# ---------------------------------------------------------------- core peeling

cdef inline bint key_less(const int64_t* deg, int64_t a, int64_t b) noexcept nogil:
    return deg[a] < deg[b] or (deg[a] == deg[b] and a < b)


cdef void sift_up(int64_t* heap, int64_t* pos, const int64_t* deg, int64_t i) noexcept nogil:
    cdef int64_t v = heap[i], p
    while i > 0:
        p = (i - 1) >> 1
        if not key_less(deg, v, heap[p]):
            break
        heap[i] = heap[p]
        pos[heap[i]] = i
        i = p
    heap[i] = v
    pos[v] = i


cdef void sift_down(int64_t* heap, int64_t* pos, const int64_t* deg, int64_t i,
                    int64_t size) noexcept nogil:
    cdef int64_t v = heap[i], c
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        if c + 1 < size and key_less(deg, heap[c + 1], heap[c]):
            c += 1
        if not key_less(deg, heap[c], v):
            break
        heap[i] = heap[c]
        pos[heap[i]] = i
        i = c
    heap[i] = v
    pos[v] = i


def core_order(const int64_t[::1] offsets, const int32_t[::1] neighbors):
    """Removal order of min-degree peeling, smallest id first among ties."""
    cdef int64_t n = offsets.shape[0] - 1
    deg_arr = np.diff(np.asarray(offsets))
    heap_arr = np.lexsort((np.arange(n), deg_arr)).astype(np.int64)
    pos_arr = np.empty(n, dtype=np.int64)
    pos_arr[heap_arr] = np.arange(n, dtype=np.int64)
    removed_arr = np.zeros(n, dtype=np.uint8)
    order_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] deg = deg_arr
    cdef int64_t[::1] heap = heap_arr
    cdef int64_t[::1] pos = pos_arr
    cdef unsigned char[::1] removed = removed_arr
    cdef int64_t[::1] order = order_arr
    cdef int64_t size = n, r, v, e, w
    if n == 0:
        return order_arr
    with nogil:
        for r in range(n):
            v = heap[0]
            order[r] = v
            removed[v] = 1
            size -= 1
            if size > 0:
                heap[0] = heap[size]
                pos[heap[0]] = 0
                sift_down(&heap[0], &pos[0], &deg[0], 0, size)
            for e in range(offsets[v], offsets[v + 1]):
                w = neighbors[e]
                if not removed[w]:
                    deg[w] -= 1
                    sift_up(&heap[0], &pos[0], &deg[0], pos[w])
    return order_arr


# ---------------------------------------------------------------- merges

DEF GALLOP_RATIO = 8


cdef inline int64_t gallop(const int32_t* a, int64_t lo, int64_t n, int32_t y,
                           int64_t* probes) noexcept nogil:
    """First index in a[lo:n] with a value >= y."""
    cdef int64_t left = lo, right = n, step = 1, p, mid
    while True:
        p = lo + step - 1
        if p >= n:
            break
        probes[0] += 1
        if a[p] >= y:
            right = p
            break
        left = p + 1
        step <<= 1
    while left < right:
        mid = (left + right) >> 1
        probes[0] += 1
        if a[mid] >= y:
            right = mid
        else:
            left = mid + 1
    return left


cdef int64_t gallop_intersect(const int32_t* a, int64_t na, const int32_t* b, int64_t nb,
                              int32_t* out, int64_t* its, int64_t* loads) noexcept nogil:
    cdef int64_t i = 0, j = 0, m = 0, probes = 0
    cdef int32_t x
    if na >= nb:
        for j in range(nb):
            x = b[j]
            i = gallop(a, i, na, x, &probes)
            probes += 2
            if i == na:
                break
            if a[i] == x:
                if out != NULL:
                    out[m] = <int32_t>i
                m += 1
                i += 1
    else:
        for i in range(na):
            x = a[i]
            j = gallop(b, j, nb, x, &probes)
            probes += 2
            if j == nb:
                break
            if b[j] == x:
                if out != NULL:
                    out[m] = <int32_t>i
                m += 1
                j += 1
    its[0] += probes
    loads[0] += probes
    return m


cdef inline bint skewed(int64_t na, int64_t nb) noexcept nogil:
    return na > GALLOP_RATIO * nb or nb > GALLOP_RATIO * na


cdef inline int64_t merge_pos(const int32_t* a, int64_t na, const int32_t* b, int64_t nb,
                              int32_t* out, int64_t* its, int64_t* loads) noexcept nogil:
    cdef int64_t i = 0, j = 0, m = 0, it = 0
    cdef int neq = 0
    cdef int32_t x, y
    if na == 0 or nb == 0:
        return 0
    if skewed(na, nb):
        return gallop_intersect(a, na, b, nb, out, its, loads)
    # branch-free step: same advancement as the textbook merge
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        it += 1
        out[m] = <int32_t>i
        m += x == y
        neq = x != y
        i += x <= y
        j += y <= x
    its[0] += it
    loads[0] += i + j + neq
    return m


cdef inline int64_t merge_cnt(const int32_t* a, int64_t na, const int32_t* b, int64_t nb,
                              int64_t* its, int64_t* loads) noexcept nogil:
    cdef int64_t i = 0, j = 0, m = 0, it = 0
    cdef int neq = 0
    cdef int32_t x, y
    if na == 0 or nb == 0:
        return 0
    if skewed(na, nb):
        return gallop_intersect(a, na, b, nb, NULL, its, loads)
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        it += 1
        m += x == y
        neq = x != y
        i += x <= y
        j += y <= x
    its[0] += it
    loads[0] += i + j + neq
    return m


# ---------------------------------------------------------------- CITRON engine

cdef struct CitronWS:
    int k
    int64_t** off
    int32_t** adj
    const int64_t* need
    uint64_t count
    int overflow
    int instrument
    int64_t iterations
    int64_t accesses
    int64_t scratch
    int64_t max_bytes


cdef CitronWS* citron_alloc(int k, int64_t c, int64_t edge_cap, const int64_t* need,
                            int instrument) noexcept nogil:
    cdef CitronWS* ws = <CitronWS*>calloc(1, sizeof(CitronWS))
    cdef int L
    if ws == NULL:
        return NULL
    ws.k = k
    ws.need = need
    ws.instrument = instrument
    ws.off = <int64_t**>calloc(k + 1, sizeof(int64_t*))
    ws.adj = <int32_t**>calloc(k + 1, sizeof(int32_t*))
    if ws.off == NULL or ws.adj == NULL:
        citron_free(ws)
        return NULL
    for L in range(3, k):
        ws.off[L] = <int64_t*>malloc((c + 1) * sizeof(int64_t))
        # +1: the branch-free merge stores one slot past the last match
        ws.adj[L] = <int32_t*>malloc((edge_cap + 1) * sizeof(int32_t))
        if ws.off[L] == NULL or ws.adj[L] == NULL:
            citron_free(ws)
            return NULL
    return ws


cdef void citron_free(CitronWS* ws) noexcept nogil:
    cdef int L
    if ws == NULL:
        return
    if ws.off != NULL:
        for L in range(ws.k + 1):
            free(ws.off[L])
        free(ws.off)
    if ws.adj != NULL:
        for L in range(ws.k + 1):
            free(ws.adj[L])
        free(ws.adj)
    free(ws)


cdef inline void add_count(CitronWS* ws, uint64_t x) noexcept nogil:
    if ws.count > UINT64_MAX - x:
        ws.overflow = 1
    else:
        ws.count += x


cdef void citron_level(CitronWS* ws, int L, int64_t n) noexcept nogil:
    """Subgraph stored at level L (n vertices) enters recurse(L), L >= 3."""
    cdef int64_t* off = ws.off[L]
    cdef int32_t* adj = ws.adj[L]
    cdef int64_t* coff
    cdef int32_t* cadj
    cdef int64_t i, t, d, lo, w, pos
    cdef uint64_t e
    if L == 3:
        for i in range(n):
            lo = off[i]
            d = off[i + 1] - lo
            if d < ws.need[2]:
                continue
            e = 0
            for t in range(d):
                w = adj[lo + t]
                e += merge_cnt(adj + lo, d, adj + off[w], off[w + 1] - off[w],
                               &ws.iterations, &ws.scratch)
            add_count(ws, e)
        return
    coff = ws.off[L - 1]
    cadj = ws.adj[L - 1]
    for i in range(n):
        if ws.overflow:
            return
        lo = off[i]
        d = off[i + 1] - lo
        if d < ws.need[L - 1]:
            continue
        coff[0] = 0
        pos = 0
        for t in range(d):
            w = adj[lo + t]
            pos += merge_pos(adj + lo, d, adj + off[w], off[w + 1] - off[w], cadj + pos,
                             &ws.iterations, &ws.scratch)
            coff[t + 1] = pos
        citron_level(ws, L - 1, d)


cdef void citron_vertex(CitronWS* ws, const int64_t* doff, const int32_t* dadj,
                        int64_t u) noexcept nogil:
    cdef int k = ws.k
    cdef int64_t lo = doff[u]
    cdef int64_t na = doff[u + 1] - lo
    cdef const int32_t* A = dadj + lo
    cdef int64_t t, w, pos = 0, loads = 0, nbytes
    cdef int64_t* off
    cdef int32_t* adj
    if ws.overflow or na < ws.need[k - 1]:
        return
    if k == 3:
        for t in range(na):
            w = A[t]
            pos += merge_cnt(A, na, dadj + doff[w], doff[w + 1] - doff[w],
                             &ws.iterations, &loads)
        if ws.instrument:
            ws.accesses += 2 + 3 * na + loads
        add_count(ws, <uint64_t>pos)
    else:
        off = ws.off[k - 1]
        adj = ws.adj[k - 1]
        off[0] = 0
        for t in range(na):
            w = A[t]
            pos += merge_pos(A, na, dadj + doff[w], doff[w + 1] - doff[w], adj + pos,
                             &ws.iterations, &loads)
            off[t + 1] = pos
        if ws.instrument:
            ws.accesses += 3 + 4 * na + loads + pos
        citron_level(ws, k - 1, na)
    nbytes = (na + 1) * 8 + pos * 4
    if nbytes > ws.max_bytes:
        ws.max_bytes = nbytes


def count_citron(const int64_t[::1] dag_off, const int32_t[::1] dag_adj, int k, int workers,
                 int schedule, int chunk, const int64_t[::1] need, bint instrument,
                 int64_t edge_cap):
    cdef int64_t n = dag_off.shape[0] - 1
    cdef int64_t c = int(np.diff(np.asarray(dag_off)).max(initial=0))
    cdef const int64_t* doff = &dag_off[0]
    cdef const int32_t* dadj = &dag_adj[0] if dag_adj.shape[0] else NULL
    cdef const int64_t* nd = &need[0]
    partial_arr = np.zeros(workers, dtype=np.uint64)
    iters_arr = np.zeros(workers, dtype=np.int64)
    acc_arr = np.zeros(workers, dtype=np.int64)
    bytes_arr = np.zeros(workers, dtype=np.int64)
    flags_arr = np.zeros(workers, dtype=np.int32)
    cdef uint64_t[::1] partial = partial_arr
    cdef int64_t[::1] iters = iters_arr
    cdef int64_t[::1] accs = acc_arr
    cdef int64_t[::1] nbytes = bytes_arr
    cdef int32_t[::1] flags = flags_arr
    cdef CitronWS* ws
    cdef int tid
    cdef int64_t u
    cdef int inst = instrument
    with nogil, parallel(num_threads=workers):
        tid = threadid()
        ws = citron_alloc(k, c, edge_cap, nd, inst)
        if ws == NULL:
            flags[tid] = 2
        if schedule == STATIC:
            for u in prange(n, schedule="static"):
                if ws != NULL:
                    citron_vertex(ws, doff, dadj, u)
        elif schedule == CYCLIC:
            for u in prange(n, schedule="static", chunksize=1):
                if ws != NULL:
                    citron_vertex(ws, doff, dadj, u)
        else:
            for u in prange(n, schedule="dynamic", chunksize=chunk):
                if ws != NULL:
                    citron_vertex(ws, doff, dadj, u)
        if ws != NULL:
            partial[tid] = ws.count
            iters[tid] = ws.iterations
            accs[tid] = ws.accesses
            nbytes[tid] = ws.max_bytes
            if ws.overflow:
                flags[tid] = 1
            citron_free(ws)
    if (flags_arr == 2).any():
        raise MemoryError("could not allocate counting workspace")
    return ([int(x) for x in partial_arr], iters_arr.tolist(), int(acc_arr.sum()),
            int(bytes_arr.max(initial=0)), bool((flags_arr == 1).any()))


# ---------------------------------------------------------------- kClist baseline

cdef struct BaseWS:
    int k
    int64_t c
    int32_t* labels
    int32_t* remap
    int32_t* old
    int32_t* flat
    int32_t* sub
    int32_t** deg
    int32_t** nodes
    int64_t* size
    const int64_t* need
    uint64_t count
    int overflow
    int instrument
    int64_t iterations
    int64_t accesses
    int built


cdef void base_free(BaseWS* ws) noexcept nogil:
    cdef int L
    if ws == NULL:
        return
    free(ws.labels)
    free(ws.remap)
    free(ws.old)
    free(ws.flat)
    free(ws.sub)
    free(ws.size)
    if ws.deg != NULL:
        for L in range(ws.k + 1):
            free(ws.deg[L])
        free(ws.deg)
    if ws.nodes != NULL:
        for L in range(ws.k + 1):
            free(ws.nodes[L])
        free(ws.nodes)
    free(ws)


cdef BaseWS* base_alloc(int64_t nv, int k, int64_t c, const int64_t* need,
                        int instrument) noexcept nogil:
    cdef BaseWS* ws = <BaseWS*>calloc(1, sizeof(BaseWS))
    cdef int64_t i, cc = c if c > 0 else 1
    cdef int L
    if ws == NULL:
        return NULL
    ws.k = k
    ws.c = c
    ws.need = need
    ws.instrument = instrument
    ws.labels = <int32_t*>malloc((nv if nv > 0 else 1) * sizeof(int32_t))
    ws.remap = <int32_t*>malloc((nv if nv > 0 else 1) * sizeof(int32_t))
    ws.old = <int32_t*>malloc(cc * sizeof(int32_t))
    ws.flat = <int32_t*>malloc(cc * cc * sizeof(int32_t))
    ws.sub = <int32_t*>malloc(cc * sizeof(int32_t))
    ws.size = <int64_t*>calloc(k + 1, sizeof(int64_t))
    ws.deg = <int32_t**>calloc(k + 1, sizeof(int32_t*))
    ws.nodes = <int32_t**>calloc(k + 1, sizeof(int32_t*))
    if (ws.labels == NULL or ws.remap == NULL or ws.old == NULL or ws.flat == NULL
            or ws.sub == NULL or ws.size == NULL or ws.deg == NULL or ws.nodes == NULL):
        base_free(ws)
        return NULL
    for L in range(2, k):
        ws.deg[L] = <int32_t*>malloc(cc * sizeof(int32_t))
        ws.nodes[L] = <int32_t*>malloc(cc * sizeof(int32_t))
        if ws.deg[L] == NULL or ws.nodes[L] == NULL:
            base_free(ws)
            return NULL
    for i in range(nv):
        ws.labels[i] = k
        ws.remap[i] = -1
    return ws


cdef void base_first(BaseWS* ws, const int64_t* off, const int32_t* adj, int64_t u) noexcept nogil:
    cdef int k = ws.k
    cdef int64_t c = ws.c
    cdef int32_t* lab = ws.labels
    cdef int32_t* new = ws.remap
    cdef int32_t* old = ws.old
    cdef int32_t* sub = ws.sub
    cdef int32_t* d = ws.deg[k - 1]
    cdef int32_t* nodes = ws.nodes[k - 1]
    cdef int32_t* flat = ws.flat
    cdef int64_t acc = 2, n1 = 0, e, i, base, its = 0
    cdef int32_t v, w
    for e in range(off[u], off[u + 1]):
        v = adj[e]
        acc += 2
        if lab[v] == k:
            lab[v] = k - 1
            new[v] = <int32_t>n1
            old[n1] = v
            sub[n1] = k - 1
            nodes[n1] = <int32_t>n1
            d[n1] = 0
            acc += 6
            n1 += 1
    ws.size[k - 1] = n1
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
    ws.iterations += its
    if ws.instrument:
        ws.accesses += acc


cdef void base_next(BaseWS* ws, int L, int32_t u) noexcept nogil:
    cdef int64_t c = ws.c
    cdef int32_t* sub = ws.sub
    cdef int32_t* flat = ws.flat
    cdef int32_t* dl = ws.deg[L]
    cdef int32_t* dn = ws.deg[L - 1]
    cdef int32_t* nodes = ws.nodes[L - 1]
    cdef int64_t n = 0, j, jj, kk, end, base = u * c, its = 0
    cdef int32_t v, w
    for j in range(base, base + dl[u]):
        v = flat[j]
        if sub[v] == L:
            sub[v] = L - 1
            nodes[n] = v
            n += 1
            dn[v] = 0
    ws.size[L - 1] = n
    for jj in range(n):
        v = nodes[jj]
        kk = c * v
        end = kk + dl[v]
        while kk < end:
            w = flat[kk]
            its += 1
            if sub[w] == L - 1:
                dn[v] += 1
                kk += 1
            else:
                end -= 1
                flat[kk] = flat[end]
                flat[end] = w
    ws.iterations += its


cdef uint64_t base_recurse(BaseWS* ws, int L) noexcept nogil:
    cdef int32_t* d = ws.deg[L]
    cdef int32_t* nodes = ws.nodes[L]
    cdef int32_t* child
    cdef int64_t i, j, n = ws.size[L]
    cdef uint64_t total = 0, part
    cdef int32_t u
    if L == 2:
        for i in range(n):
            total += <uint64_t>d[nodes[i]]
        return total
    for i in range(n):
        u = nodes[i]
        if d[u] < ws.need[L - 1]:
            continue
        base_next(ws, L, u)
        part = base_recurse(ws, L - 1)
        if total > UINT64_MAX - part:
            ws.overflow = 1
        total += part
        child = ws.nodes[L - 1]
        for j in range(ws.size[L - 1]):
            ws.sub[child[j]] = L
    return total


cdef void base_vertex(BaseWS* ws, const int64_t* doff, const int32_t* dadj,
                      int64_t u) noexcept nogil:
    cdef uint64_t x
    if ws.overflow or doff[u + 1] - doff[u] < ws.need[ws.k - 1]:
        return
    base_first(ws, doff, dadj, u)
    ws.built = 1
    x = base_recurse(ws, ws.k - 1)
    if ws.count > UINT64_MAX - x:
        ws.overflow = 1
    else:
        ws.count += x


def count_baseline(const int64_t[::1] dag_off, const int32_t[::1] dag_adj, int k, int workers,
                   int schedule, int chunk, const int64_t[::1] need, bint instrument):
    cdef int64_t n = dag_off.shape[0] - 1
    cdef int64_t c = int(np.diff(np.asarray(dag_off)).max(initial=0))
    cdef const int64_t* doff = &dag_off[0]
    cdef const int32_t* dadj = &dag_adj[0] if dag_adj.shape[0] else NULL
    cdef const int64_t* nd = &need[0]
    partial_arr = np.zeros(workers, dtype=np.uint64)
    iters_arr = np.zeros(workers, dtype=np.int64)
    acc_arr = np.zeros(workers, dtype=np.int64)
    flags_arr = np.zeros(workers, dtype=np.int32)
    built_arr = np.zeros(workers, dtype=np.int32)
    cdef uint64_t[::1] partial = partial_arr
    cdef int64_t[::1] iters = iters_arr
    cdef int64_t[::1] accs = acc_arr
    cdef int32_t[::1] flags = flags_arr
    cdef int32_t[::1] built = built_arr
    cdef BaseWS* ws
    cdef int tid
    cdef int64_t u
    cdef int inst = instrument
    with nogil, parallel(num_threads=workers):
        tid = threadid()
        ws = base_alloc(n, k, c, nd, inst)
        if ws == NULL:
            flags[tid] = 2
        if schedule == STATIC:
            for u in prange(n, schedule="static"):
                if ws != NULL:
                    base_vertex(ws, doff, dadj, u)
        elif schedule == CYCLIC:
            for u in prange(n, schedule="static", chunksize=1):
                if ws != NULL:
                    base_vertex(ws, doff, dadj, u)
        else:
            for u in prange(n, schedule="dynamic", chunksize=chunk):
                if ws != NULL:
                    base_vertex(ws, doff, dadj, u)
        if ws != NULL:
            partial[tid] = ws.count
            iters[tid] = ws.iterations
            accs[tid] = ws.accesses
            built[tid] = ws.built
            if ws.overflow:
                flags[tid] = 1
            base_free(ws)
    if (flags_arr == 2).any():
        raise MemoryError("could not allocate counting workspace")
    nbytes = 4 * c * c + 16 * c if built_arr.any() else 0
    return ([int(x) for x in partial_arr], iters_arr.tolist(), int(acc_arr.sum()),
            int(nbytes), bool((flags_arr == 1).any()))
