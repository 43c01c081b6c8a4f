import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kclique import OracleGuardError, UsageError, brute_force_count
from kclique.generators import complete_graph, empty_graph, erdos_renyi, relabel
from kclique.oracle import triangle_trace


def subsets_count(g, k):
    """C(n, k) enumeration; only for tiny graphs."""
    edges = {tuple(e) for e in g.edges().tolist()}
    return sum(all((a, b) in edges for a, b in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.num_vertices), k))


def test_examples(example):
    assert brute_force_count(example, 3) == 5 == triangle_trace(example)
    assert brute_force_count(example, 4) == 1
    assert brute_force_count(example, 2) == 11
    assert brute_force_count(example, 1) == 7
    assert brute_force_count(complete_graph(6), 6) == 1
    assert brute_force_count(complete_graph(6), 7) == 0
    assert brute_force_count(empty_graph(4), 3) == 0


def test_guard():
    with pytest.raises(OracleGuardError):
        brute_force_count(empty_graph(10_001), 3)
    with pytest.raises(OracleGuardError):
        brute_force_count(empty_graph(50), 3, max_vertices=10)
    with pytest.raises(UsageError):
        brute_force_count(empty_graph(3), 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.floats(0.0, 1.0), st.integers(0, 2**31))
def test_against_subset_enumeration(n, p, seed):
    g = erdos_renyi(n, p, seed=seed)
    for k in range(1, 6):
        assert brute_force_count(g, k) == subsets_count(g, k)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 60), st.floats(0.05, 0.7), st.integers(0, 2**31))
def test_triangles_match_trace(n, p, seed):
    g = erdos_renyi(n, p, seed=seed)
    assert brute_force_count(g, 3) == triangle_trace(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 40), st.floats(0.1, 0.7), st.integers(0, 2**31))
def test_relabel_invariance(n, p, seed):
    g = erdos_renyi(n, p, seed=seed)
    perm = np.random.default_rng(seed).permutation(n)
    h = relabel(g, perm)
    for k in (3, 4, 5):
        assert brute_force_count(h, k) == brute_force_count(g, k)
