"""Run statistics and the analytic work model."""
from __future__ import annotations

import math
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import CliqueOverflowError

UINT64_MAX = 2**64 - 1


@dataclass
class RunStats:
    ordering_time: float = 0.0
    counting_time: float = 0.0
    total_time: float = 0.0
    array_accesses: int | None = None
    max_subgraph_bytes: int = 0
    max_out_degree: int = 0
    work_model: int | None = None
    per_worker_iterations: list = field(default_factory=list)

    def load_imbalance(self):
        return load_imbalance(self)

    def as_dict(self):
        return asdict(self)


@contextmanager
def stopwatch():
    """Yields a one-element list that receives the elapsed seconds."""
    box = [0.0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - t0


def work_model(d):
    """sum over u of outdeg(u) * (sum of outdeg(v) over out-neighbors v)."""
    outdeg = d.out_degrees()
    if d.num_edges == 0:
        return 0
    nbr_sum = np.zeros(d.num_vertices, dtype=np.int64)
    has = outdeg > 0
    nbr_sum[has] = np.add.reduceat(outdeg[d.out_neighbors], d.offsets[:-1][has])
    if int(outdeg.max()) * int(nbr_sum.max()) * d.num_vertices < 2**63:
        total = int(np.dot(outdeg, nbr_sum))
    else:
        total = sum(int(a) * int(b) for a, b in zip(outdeg.tolist(), nbr_sum.tolist()))
    if total > UINT64_MAX:
        raise CliqueOverflowError(f"work model {total} exceeds 64 bits")
    return total


def load_imbalance(stats_or_counts):
    """Population std-dev of per-worker iterations divided by their mean."""
    counts = getattr(stats_or_counts, "per_worker_iterations", stats_or_counts)
    if len(counts) == 0:
        raise ValueError("need at least one worker")
    mean = sum(counts) / len(counts)
    if mean == 0:
        return 0.0
    var = sum((c - mean) ** 2 for c in counts) / len(counts)
    return math.sqrt(var) / mean
