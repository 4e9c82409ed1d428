import pytest

from rainbowsat.errors import ParseError
from rainbowsat.graph import ColoredGraph
from rainbowsat.io import (format_dot, format_graph, format_metadata, parse_graph, parse_metadata,
                           parse_pattern_text, read_graph, write_graph)


def test_round_trip(tmp_path):
    G = ColoredGraph(4, 3, [(2, 3, 1), (0, 1, 2), (0, 3, 3)])
    path = tmp_path / "g.txt"
    write_graph(G, path)
    assert path.read_bytes() == b"4 3\n0 1 2\n0 3 3\n2 3 1\n"
    assert read_graph(path) == G


def test_comments_and_blank_lines():
    G = parse_graph("# header\n3 2\n\n0 1 1\n# edge\n1 2 2\n")
    assert G.edges() == [(0, 1, 1), (1, 2, 2)]


@pytest.mark.parametrize("text,line", [
    ("", None), ("3\n", 1), ("3 2\n0 1\n", 2), ("3 2\n0 1 1\n0 1 2\n", 3),
    ("3 2\n0 1 9\n", 2), ("3 2\n0 a 1\n", 2), ("3 2\n0 3 1\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_dot_labels():
    dot = format_dot(ColoredGraph(2, 5, [(0, 1, 5)]))
    assert '0 -- 1 [label="5"];' in dot


def test_pattern_text_optional_colors():
    P = parse_pattern_text("3\n0 1\n1 2 7\n")
    assert P.n == 3 and P.edges == {(0, 1), (1, 2)}


def test_metadata_round_trip():
    meta = {"construction": "hkl", "k": 4, "fallback": False}
    text = format_metadata(meta)
    assert text == "construction=hkl\nk=4\nfallback=false\n"
    assert parse_metadata(text) == {"construction": "hkl", "k": "4", "fallback": "false"}


def test_format_is_sorted():
    G = ColoredGraph(3, 1, [(1, 2, 1), (0, 2, 1)])
    assert format_graph(G).splitlines()[1:] == ["0 2 1", "1 2 1"]
