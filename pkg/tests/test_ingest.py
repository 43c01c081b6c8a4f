import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kclique import FormatError, ParseError, build_undirected, load_csr, load_graph, parse_edge_list, save_csr
from kclique.generators import EXAMPLE_EDGES, _from_pairs
from kclique.graph import validate
from kclique.ingest import MAGIC, write_edge_list


def test_parse_examples():
    assert parse_edge_list("# comment\n0 1\n1 2\n").tolist() == [[0, 1], [1, 2]]
    assert parse_edge_list("0\t1\n").tolist() == [[0, 1]]
    assert parse_edge_list("% mtx-style comment\n\n3 4\n").tolist() == [[3, 4]]
    assert parse_edge_list("").shape == (0, 2)
    assert parse_edge_list(io.StringIO("7 8\n")).tolist() == [[7, 8]]


@pytest.mark.parametrize("text,lineno", [
    ("0 1 2\n", 1),
    ("0 1\n1\n", 2),
    ("# c\n0 1\nx 2\n", 3),
    ("0 -1\n", 1),
])
def test_parse_errors_carry_line(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_build_dedup_and_self_loops():
    g = build_undirected([(0, 1), (1, 0), (1, 1), (0, 1)])
    assert g.num_vertices == 2
    assert g.num_edges == 1
    assert g.edges().tolist() == [[0, 1]]


def test_build_example():
    g = build_undirected(EXAMPLE_EDGES)
    assert g.num_vertices == 7
    assert len(g.neighbors) == 22
    assert validate(g) == []


def test_id_compaction():
    g = build_undirected([(5, 9)])
    assert g.num_vertices == 2
    assert g.num_edges == 1
    assert g.edges().tolist() == [[0, 1]]


def test_build_empty():
    g = build_undirected([])
    assert g.num_vertices == 0 and g.num_edges == 0


def test_csr_roundtrip_example(tmp_path, example):
    p = tmp_path / "example.csrbin"
    save_csr(example, p)
    assert load_csr(p) == example
    assert load_graph(p) == example


def test_csr_roundtrip_large(tmp_path):
    rng = np.random.default_rng(3)
    n = 1_000_000
    g = _from_pairs(n, rng.integers(n, size=2_000_000), rng.integers(n, size=2_000_000))
    p = tmp_path / "big.csrbin"
    save_csr(g, p)
    h = load_csr(p)
    assert h.num_vertices == n
    assert h == g


def test_csr_format_errors(tmp_path, example):
    empty = tmp_path / "empty.csrbin"
    empty.write_bytes(b"")
    with pytest.raises(FormatError):
        load_csr(empty)

    good = tmp_path / "g.csrbin"
    save_csr(example, good)
    raw = good.read_bytes()

    bad_magic = tmp_path / "m.csrbin"
    bad_magic.write_bytes(b"NOTACSR\x00" + raw[len(MAGIC):])
    with pytest.raises(FormatError, match="magic"):
        load_csr(bad_magic)

    bad_version = tmp_path / "v.csrbin"
    bad_version.write_bytes(raw[:8] + (99).to_bytes(4, "little") + raw[12:])
    with pytest.raises(FormatError, match="version"):
        load_csr(bad_version)

    truncated = tmp_path / "t.csrbin"
    truncated.write_bytes(raw[:-3])
    with pytest.raises(FormatError, match="truncated"):
        load_csr(truncated)


def test_text_roundtrip(tmp_path, example):
    p = tmp_path / "example.txt"
    write_edge_list(example, p)
    assert load_graph(p) == example


edge_lists = st.lists(st.tuples(st.integers(0, 40), st.integers(0, 40)), max_size=120)


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_build_properties(pairs):
    g = build_undirected(pairs)
    assert validate(g) == []
    raw = {(min(a, b), max(a, b)) for a, b in pairs if a != b}
    assert g.num_edges == len(raw)
    # idempotent: rebuilding from the graph's own edges changes nothing
    # (isolated ids only come from self-loops and are dropped on rebuild)
    h = build_undirected(g.edges())
    assert h.num_edges == g.num_edges
    assert build_undirected(h.edges()) == h
