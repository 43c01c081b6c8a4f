import numpy as np
import pytest

from kclique import Dag, UndirectedGraph, UsageError, degree, max_out_degree, out_degree, validate
from kclique.generators import complete_graph, empty_graph, erdos_renyi
from kclique.graph import RankAssignment
from kclique.ordering import directionalize


@pytest.fixture
def example_dag(example):
    return directionalize(example, "degree")


def test_degree_examples(example):
    assert degree(example, 4) == 5
    assert degree(example, 2) == 2
    assert degree(empty_graph(1), 0) == 0
    with pytest.raises(UsageError):
        degree(example, 7)
    with pytest.raises(UsageError):
        degree(example, -1)


def test_out_degree_examples(example_dag):
    assert out_degree(example_dag, 0) == 3
    assert out_degree(example_dag, 4) == 0
    assert [out_degree(example_dag, u) for u in range(7)] == [3, 1, 2, 2, 0, 1, 2]
    assert sum(out_degree(example_dag, u) for u in range(7)) == 11
    with pytest.raises(UsageError):
        out_degree(example_dag, 9)


def test_max_out_degree(example, example_dag):
    assert max_out_degree(example_dag) == 3
    assert max_out_degree(directionalize(example, "core")) == 3
    assert max_out_degree(directionalize(empty_graph(5), "degree")) == 0
    assert max_out_degree(directionalize(empty_graph(0), "degree")) == 0


def test_graph_basics(example):
    assert example.num_vertices == 7
    assert example.num_edges == 11
    assert len(example.neighbors) == 22
    assert example.neighborhood(4).tolist() == [0, 1, 3, 5, 6]
    assert len(example.edges()) == 11


def test_validate_clean(example, example_dag):
    assert validate(example) == []
    assert validate(example_dag) == []
    assert validate(example_dag, reference=example) == []


def test_validate_unsorted_list():
    # 0-1, 0-2 with vertex 0's list stored as [2, 1]
    g = UndirectedGraph(np.array([0, 2, 3, 4]), np.array([2, 1, 0, 0]))
    v = validate(g)
    assert [x.invariant for x in v] == ["unsorted list"]
    assert v[0].witness == ("vertex", 0)


def test_validate_two_cycle():
    d = Dag(np.array([0, 1, 2]), np.array([1, 0]))
    assert "cycle" in [x.invariant for x in validate(d)]


def test_validate_asymmetric_and_self_loop():
    g = UndirectedGraph(np.array([0, 1, 1]), np.array([1]))
    assert "symmetry" in [x.invariant for x in validate(g)]
    g = UndirectedGraph(np.array([0, 1]), np.array([0]))
    assert "no self-loops" in [x.invariant for x in validate(g)]


def test_validate_partition_against_reference(example, example_dag):
    # drop the last out-edge: the DAG no longer covers the graph
    bad = Dag(example_dag.offsets.copy(), example_dag.out_neighbors.copy())
    bad.offsets[-1] -= 1
    bad = Dag(bad.offsets, bad.out_neighbors[:-1])
    kinds = {x.invariant for x in validate(bad, reference=example)}
    assert kinds & {"edge count", "edge partition"}


def test_rank_assignment():
    r = RankAssignment.from_order([2, 0, 1])
    assert r.ranks.tolist() == [1, 2, 0]
    assert r.order().tolist() == [2, 0, 1]
    assert r.is_bijection()
    assert not RankAssignment(np.array([0, 0, 1])).is_bijection()


@pytest.mark.parametrize("seed", range(10))
def test_orientation_partitions_edges(seed):
    g = erdos_renyi(30, 0.25, seed=seed)
    for kind in ("degree", "core"):
        d = directionalize(g, kind)
        assert validate(d, reference=g) == []
        und = {tuple(e) for e in g.edges().tolist()}
        assert {(min(a, b), max(a, b)) for a, b in d.edge_set()} == und
        assert d.num_edges == g.num_edges


def test_k3_transitive():
    g = complete_graph(3)
    for kind in ("degree", "core"):
        d = directionalize(g, kind)
        assert d.num_edges == 3
        assert sorted(d.out_degrees().tolist()) == [0, 1, 2]
