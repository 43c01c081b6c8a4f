"""Exact k-clique counting with degree/core orientation and two subgraph engines."""
from ._backend import COMPILED_AVAILABLE, kernels as _kernels
from .count import CountConfig, PruneMode, Schedule, Strategy, aggregate, count_cliques, prune_check
from .errors import (
    CliqueOverflowError,
    FormatError,
    KCliqueError,
    OracleGuardError,
    ParseError,
    UsageError,
)
from .graph import Dag, RankAssignment, UndirectedGraph, degree, max_out_degree, out_degree, validate
from .ingest import build_undirected, load_csr, load_graph, parse_edge_list, save_csr
from .metrics import RunStats, load_imbalance, work_model
from .oracle import brute_force_count
from .ordering import OrderingKind, core_ordering, degree_rank_less, directionalize

BACKEND = _kernels.NAME

__version__ = "0.1.0"
