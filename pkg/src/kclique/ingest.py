"""Edge-list parsing, symmetrization and the binary CSR cache (.csrbin)."""
from __future__ import annotations

import io
import os
import struct

import numpy as np

from .errors import FormatError, ParseError
from .graph import OFFSET_DTYPE, VERTEX_DTYPE, UndirectedGraph

MAGIC = b"KCSRBIN\x00"
FORMAT_VERSION = 1
# magic, version, reserved, |V|, number of CSR entries
_HEADER = struct.Struct("<8sIIQQ")


def parse_edge_list(stream):
    """Read SNAP-style ``u v`` lines into an (m, 2) int64 array, in file order.

    Lines starting with ``#`` or ``%`` and blank lines are skipped.
    """
    if isinstance(stream, (str, bytes)):
        stream = io.StringIO(stream.decode() if isinstance(stream, bytes) else stream)
    pairs = []
    append = pairs.append
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        tok = s.split()
        if len(tok) != 2:
            raise ParseError(lineno, f"expected 2 fields, got {len(tok)}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {s!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex ids must be non-negative")
        append((u, v))
    if not pairs:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(pairs, dtype=np.int64)


def build_undirected(edges):
    """Compact ids, drop self-loops and duplicates, and symmetrize.

    Raw ids are mapped to ``0..|V|-1`` in ascending raw-id order.  Only ids
    that occur as an endpoint become vertices.
    """
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if len(edges) == 0:
        return UndirectedGraph(np.zeros(1, OFFSET_DTYPE), np.empty(0, VERTEX_DTYPE))
    raw_ids, dense = np.unique(edges.ravel(), return_inverse=True)
    if len(raw_ids) > np.iinfo(VERTEX_DTYPE).max:
        raise ValueError(f"{len(raw_ids)} vertices exceed the 32-bit id space")
    dense = dense.reshape(-1, 2)
    n = len(raw_ids)
    u, v = dense[:, 0], dense[:, 1]
    keep = u != v
    u, v = u[keep], v[keep]
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    keys = np.unique(src * n + dst)
    src, dst = np.divmod(keys, n)
    offsets = np.zeros(n + 1, dtype=OFFSET_DTYPE)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return UndirectedGraph(offsets, dst.astype(VERTEX_DTYPE))


def load_edge_list(path):
    with open(path) as fh:
        return build_undirected(parse_edge_list(fh))


def write_edge_list(g, path):
    e = g.edges()
    with open(path, "w") as fh:
        fh.write(f"# {g.num_vertices} vertices, {g.num_edges} edges\n")
        np.savetxt(fh, e, fmt="%d", delimiter=" ")


def save_csr(g, path):
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, 0, g.num_vertices, len(g.neighbors))
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(g.offsets.astype("<i8", copy=False).tobytes())
        fh.write(g.neighbors.astype("<i4", copy=False).tobytes())


def load_csr(path):
    with open(path, "rb") as fh:
        head = fh.read(_HEADER.size)
        if len(head) < _HEADER.size:
            raise FormatError(f"{path}: truncated header")
        magic, version, _, n, m = _HEADER.unpack(head)
        if magic != MAGIC:
            raise FormatError(f"{path}: bad magic {magic!r}")
        if version != FORMAT_VERSION:
            raise FormatError(f"{path}: unsupported format version {version}")
        offsets = np.fromfile(fh, dtype="<i8", count=n + 1)
        neighbors = np.fromfile(fh, dtype="<i4", count=m)
        if len(offsets) != n + 1 or len(neighbors) != m:
            raise FormatError(f"{path}: truncated body")
        if fh.read(1):
            raise FormatError(f"{path}: trailing bytes after body")
    if offsets[0] != 0 or offsets[-1] != m:
        raise FormatError(f"{path}: offsets inconsistent with entry count")
    return UndirectedGraph(offsets.astype(OFFSET_DTYPE), neighbors.astype(VERTEX_DTYPE))


def load_graph(path):
    """Load ``.csrbin`` caches directly, anything else as a text edge list."""
    if os.fspath(path).endswith(".csrbin"):
        return load_csr(path)
    return load_edge_list(path)
