import pytest

from quadparts.graphio import (
    GraphParseError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
)
from quadparts.graphs import SimpleGraph, complete_graph, cycle_graph


def test_parse_c4():
    g = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n")
    assert g.edges == cycle_graph(4).edges


def test_comments_and_blank_lines():
    text = "# a square\n4\n\n0 1  # first\n1 2\n2 3\n3 0\n"
    assert parse_edge_list(text).edges == cycle_graph(4).edges


def test_round_trip_edge_list():
    g = complete_graph(5)
    assert parse_edge_list(emit_edge_list(g)).edges == g.edges


def test_self_loop_rejected_with_position():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("2\n0 0\n")
    assert "line 2" in str(exc.value)
    assert "self-loop" in str(exc.value)


def test_out_of_range_rejected():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("3\n0 3\n")
    assert "line 2" in str(exc.value)


def test_bad_header():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("x\n")
    assert "line 1" in str(exc.value)


def test_duplicate_edge_rejected():
    with pytest.raises(GraphParseError):
        parse_edge_list("3\n0 1\n1 0\n")


def test_graph6_k4():
    assert parse_graph6("C~").edges == complete_graph(4).edges


def test_graph6_round_trip():
    for g in (cycle_graph(4), complete_graph(6), SimpleGraph(3, frozenset())):
        assert parse_graph6(emit_graph6(g)).edges == g.edges
        assert parse_graph6(emit_graph6(g)).n == g.n


def test_graph6_bad_byte_position():
    with pytest.raises(GraphParseError) as exc:
        parse_graph6("C!")  # '!' is printable but below the graph6 range
    assert "byte 2" in str(exc.value)


def test_graph6_truncated_payload():
    with pytest.raises(GraphParseError):
        parse_graph6("C")


def test_auto_format_detection():
    assert parse_graph("C~", "auto").edges == complete_graph(4).edges
    assert parse_graph("4\n0 1\n1 2\n2 3\n0 3\n", "auto").edges == cycle_graph(4).edges
