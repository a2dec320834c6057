import pytest
from hypothesis import given

from backbone.graph import Digraph
from backbone.io import (ParseError, format_digraph, format_graph, parse_digraph, parse_graph,
                         read_graph, write_graph)
from helpers import digraphs, graphs


def test_parse_with_comments_and_blank_lines():
    g = parse_graph("# a path\n\nn 3\n0 1\n# middle\n1 2\n")
    assert g.n == 3 and g.edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text, line", [
    ("0 1\n", 1),
    ("n 3\n0 1\n1 x\n", 3),
    ("n 3\n0 5\n", 2),
    ("n 3\n1 1\n", 2),
    ("n 3\n0 1 2\n", 2),
    ("", 1),
])
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@given(graphs())
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@given(digraphs())
def test_digraph_round_trip(d):
    assert parse_digraph(format_digraph(d)) == d


def test_digraph_keeps_opposite_arcs():
    assert parse_digraph("n 2\n0 1\n1 0\n") == Digraph([0, 1], [(0, 1), (1, 0)])


def test_file_round_trip(tmp_path):
    g = parse_graph("n 4\n0 1\n2 3\n")
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
