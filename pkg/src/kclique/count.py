"""k-clique counting entry point: configuration, pruning and aggregation."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from ._pycore import Accumulator, recurse  # noqa: F401  (reference recursion)
from .errors import CliqueOverflowError, UsageError
from .graph import max_out_degree
from .metrics import UINT64_MAX, RunStats, stopwatch, work_model
from .ordering import OrderingKind, directionalize


class Strategy(enum.Enum):
    BASELINE = "baseline"
    CITRON = "citron"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown strategy {value!r}") from None


class PruneMode(enum.Enum):
    OFF = "off"
    ON = "on"        # skip a subgraph entering level l when it has < l vertices
    PAPER = "paper"  # the looser published threshold, < l - 2

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if value is True:
            return cls.ON
        if value is False or value is None:
            return cls.OFF
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UsageError(f"unknown prune mode {value!r}") from None


_SCHEDULE_CODES = {"static": 0, "cyclic": 1, "dynamic": 2}


@dataclass(frozen=True)
class Schedule:
    kind: str = "dynamic"
    chunk: int = 64

    def __post_init__(self):
        if self.kind not in _SCHEDULE_CODES:
            raise UsageError(f"unknown schedule {self.kind!r}")
        if self.chunk < 1:
            raise UsageError("schedule chunk must be >= 1")

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        kind, _, chunk = str(text).lower().partition(":")
        if kind == "dynamic":
            try:
                return cls("dynamic", int(chunk) if chunk else 64)
            except ValueError:
                raise UsageError(f"bad dynamic chunk in {text!r}") from None
        if chunk:
            raise UsageError(f"schedule {kind!r} takes no chunk size")
        return cls(kind, 1)

    @property
    def code(self):
        return _SCHEDULE_CODES[self.kind]

    def __str__(self):
        return f"dynamic:{self.chunk}" if self.kind == "dynamic" else self.kind


@dataclass(frozen=True)
class CountConfig:
    k: int
    ordering: OrderingKind = OrderingKind.DEGREE
    strategy: Strategy = Strategy.CITRON
    workers: int = 1
    schedule: Schedule = field(default_factory=Schedule)
    prune: PruneMode = PruneMode.ON
    instrument: bool = False
    backend: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "ordering", OrderingKind.parse(self.ordering))
        object.__setattr__(self, "strategy", Strategy.parse(self.strategy))
        object.__setattr__(self, "schedule", Schedule.parse(self.schedule))
        object.__setattr__(self, "prune", PruneMode.parse(self.prune))
        if int(self.k) < 3:
            raise UsageError(f"k must be >= 3, got {self.k}")
        if int(self.workers) < 1:
            raise UsageError(f"workers must be >= 1, got {self.workers}")


def needed(level, mode=PruneMode.ON):
    """Smallest vertex count a subgraph entering ``level`` must have."""
    mode = PruneMode.parse(mode)
    if mode is PruneMode.ON:
        return level
    if mode is PruneMode.PAPER:
        return max(level - 2, 0)
    return 0


def prune_check(level, n, mode=PruneMode.ON):
    """True when a subgraph of ``n`` vertices entering ``level`` can be skipped."""
    return n < needed(level, mode)


def need_table(k, mode):
    return np.array([needed(level, mode) for level in range(k + 1)], dtype=np.int64)


def aggregate(partials):
    """Checked sum of per-worker partial counts."""
    total = 0
    for p in partials:
        p = int(p)
        if p < 0 or p > UINT64_MAX:
            raise CliqueOverflowError(f"partial count {p} outside the unsigned 64-bit range")
        total += p
        if total > UINT64_MAX:
            raise CliqueOverflowError("clique count exceeds 2**64 - 1")
    return total


def edge_capacity(dag):
    """Upper bound on the edges of any subgraph built while counting on ``dag``."""
    outdeg = dag.out_degrees()
    if dag.num_edges == 0:
        return 0
    c = int(outdeg.max())
    src = np.repeat(np.arange(dag.num_vertices), outdeg)
    per_edge = np.minimum(outdeg[dag.out_neighbors], outdeg[src] - 1)
    has = outdeg > 0
    bound = np.add.reduceat(per_edge, dag.offsets[:-1][has])
    return int(min(c * (c - 1) // 2, int(bound.max(initial=0))))


def count_on_dag(dag, cfg):
    """Counting phase only; returns (count, per-worker partials, kernel extras)."""
    kern = _backend.get(cfg.backend)
    need = need_table(cfg.k, cfg.prune)
    sched = cfg.schedule
    if cfg.strategy is Strategy.CITRON:
        out = kern.count_citron(dag.offsets, dag.out_neighbors, cfg.k, cfg.workers, sched.code,
                                sched.chunk, need, cfg.instrument, edge_capacity(dag))
    else:
        out = kern.count_baseline(dag.offsets, dag.out_neighbors, cfg.k, cfg.workers,
                                  sched.code, sched.chunk, need, cfg.instrument)
    partials, iterations, accesses, nbytes, overflow = out
    if overflow:
        raise CliqueOverflowError("clique count exceeds 2**64 - 1 in a worker", partial=True)
    return aggregate(partials), iterations, accesses, nbytes


def count_cliques(g, cfg):
    """Exact number of k-cliques of ``g``; returns (count, RunStats)."""
    if not isinstance(cfg, CountConfig):
        raise UsageError("cfg must be a CountConfig")
    with stopwatch() as t_all:
        with stopwatch() as t_ord:
            dag = directionalize(g, cfg.ordering, workers=cfg.workers, backend=cfg.backend)
        with stopwatch() as t_cnt:
            total, iterations, accesses, nbytes = count_on_dag(dag, cfg)
    stats = RunStats(
        ordering_time=t_ord[0],
        counting_time=t_cnt[0],
        total_time=t_all[0],
        array_accesses=accesses if cfg.instrument else None,
        max_subgraph_bytes=nbytes,
        max_out_degree=max_out_degree(dag),
        work_model=work_model(dag) if cfg.instrument else None,
        per_worker_iterations=list(iterations),
    )
    return total, stats
