
import networkx as nx
import pytest
from hypothesis import given, settings

import oracles
from conftest import colored_graphs, graphs
from kocay import (
    ColoredGraph,
    Graph6Error,
    InputError,
    complete,
    cycle,
    deck,
    empty,
    format_colored,
    parse_colored,
    parse_graph6,
    path,
    serialize_graph6,
    two_form,
)
from kocay.formats import describe, parse_any, read_deck, write_deck


@pytest.mark.parametrize("text, g", [
    ("A_", path(2)), ("A?", empty(2)), ("Bw", complete(3)), ("@", empty(1)),
])
def test_graph6_examples(text, g):
    assert parse_graph6(text) == g
    assert serialize_graph6(g) == text.encode()


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_graph6_matches_networkx(g):
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    assert serialize_graph6(g) == nx.to_graph6_bytes(ng, header=False).strip()
    assert parse_graph6(serialize_graph6(g)) == g


def test_graph6_round_trip_n5_exhaustive():
    for g in oracles.labelled_graphs(5):
        assert parse_graph6(serialize_graph6(g)) == g


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("A", 1),
    ("A__", 2),
    ("Bx", 1),
    ("A ", 1),
    ("J" + "?" * 8, 0),
    ("~~", 0),
])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte offset {offset}" in str(info.value)


def test_coloured_text():
    h = ColoredGraph(4, [(0, 1), (1, 2)], [(0, 2)])
    assert format_colored(h) == "n=4; R=0-1,1-2; B=0-2"
    assert parse_colored(" n = 4 ;R=0-1, 1-2;B= 0-2 ") == h
    assert parse_colored("n=3") == ColoredGraph(3, [], [])


@settings(max_examples=100, deadline=None)
@given(colored_graphs(max_n=6))
def test_coloured_round_trip(h):
    assert parse_colored(format_colored(h)) == h


@pytest.mark.parametrize("text", [
    "n=3; R=0-1; B=1-0", "R=0-1", "n=x", "n=3; R=0+1", "n=3; n=3", "n=3; Q=0-1",
])
def test_coloured_text_errors(text):
    with pytest.raises(InputError):
        parse_colored(text)


def test_parse_any_and_describe():
    assert parse_any("Bw") == complete(3)
    assert isinstance(parse_any("n=2; R=0-1; B="), ColoredGraph)
    assert describe(path(2)) == "A_"
    assert describe(two_form(path(2))) == "n=2; R=0-1; B="


def test_deck_files(tmp_path):
    d = deck(cycle(5))
    p = tmp_path / "c5.deck"
    p.write_text("# cards of C5\n\n" + write_deck(d))
    assert read_deck(p) == d
    (tmp_path / "mixed").write_text("A_\nn=2; R=0-1\n")
    with pytest.raises(InputError):
        read_deck(tmp_path / "mixed")
    (tmp_path / "empty").write_text("\n")
    with pytest.raises(InputError):
        read_deck(tmp_path / "empty")
