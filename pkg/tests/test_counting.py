import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import colored_graphs, graphs
from kocay import (
    ColoredDeck,
    ColoredGraph,
    ConsistencyError,
    Deck,
    Graph,
    InputError,
    PreconditionError,
    colored_deck,
    colored_kelly_count_from_deck,
    complement,
    complete,
    count_colored_induced,
    count_colored_subgraph,
    count_induced,
    count_subgraph,
    cycle,
    deck,
    deck_of_complement,
    empty,
    enumerate_graphs,
    kelly_count_from_deck,
    matching,
    path,
    red_graph,
    star,
    swap_colors,
    swap_deck_colors,
    two_form,
)
from kocay.graph import canonical_form


@pytest.mark.parametrize("host, pattern, expected", [
    (complete(4), path(3), 12),
    (path(5), matching(2), 3),
    (cycle(5), path(4), 5),
    (complete(5), path(5), 60),
    (cycle(5), path(5), 5),
    (complete(4), empty(2), 6),
])
def test_subgraph_counts(host, pattern, expected):
    assert count_subgraph(host, pattern) == expected
    assert oracles.count_subgraph(host, pattern) == expected


def test_induced_counts():
    assert count_induced(cycle(5), path(3)) == 5
    assert count_induced(complete(4), path(3)) == 0
    assert count_induced(path(4), empty(2)) == 3


def test_coloured_counts():
    assert count_colored_subgraph(two_form(path(4)), red_graph(path(3))) == 2
    gp = two_form(path(3))
    assert count_colored_induced(gp, ColoredGraph(2, [], [(0, 1)])) == 1


def test_kinds_are_not_mixed():
    with pytest.raises(InputError):
        count_subgraph(two_form(path(3)), path(2))
    with pytest.raises(InputError):
        count_colored_subgraph(path(3), red_graph(path(2)))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=4))
def test_counts_match_brute_force(g, h):
    assert count_subgraph(g, h) == oracles.count_subgraph(g, h)
    assert count_induced(g, h) == oracles.count_induced(g, h)


@settings(max_examples=40, deadline=None)
@given(colored_graphs(max_n=4), colored_graphs(max_n=3))
def test_coloured_counts_match_brute_force(g, h):
    assert count_colored_subgraph(g, h) == oracles.count_subgraph(g, h)
    assert count_colored_induced(g, h) == oracles.count_induced(g, h)


def test_deck_of_cycle():
    d = deck(cycle(4))
    assert d.n == 4
    assert d.multiplicities() == {canonical_form(path(3)): 4}
    assert kelly_count_from_deck(d, Graph(2, [(0, 1)])) == 4


def test_deck_of_complement():
    g = path(4)
    assert deck_of_complement(deck(g)) == deck(complement(g))


def test_swap_deck_colors():
    g = star(3)
    assert swap_deck_colors(colored_deck(two_form(g))) == colored_deck(swap_colors(two_form(g)))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=6), st.data())
def test_kelly_property(g, data):
    k = data.draw(st.integers(1, g.n - 1))
    h = data.draw(graphs(min_n=k, max_n=k))
    for mode, direct in (("subgraph", count_subgraph), ("induced", count_induced)):
        assert kelly_count_from_deck(deck(g), h, mode) == direct(g, h)


def test_coloured_kelly():
    gp = two_form(cycle(5))
    for h in (ColoredGraph(3, [(0, 1), (1, 2)], [(0, 2)]), ColoredGraph(2, [], [(0, 1)])):
        assert colored_kelly_count_from_deck(colored_deck(gp), h) == count_colored_subgraph(gp, h)


def test_kelly_rejects_large_patterns():
    with pytest.raises(PreconditionError):
        kelly_count_from_deck(deck(cycle(4)), path(4))


def test_inconsistent_deck_detected():
    # three P3 cards and a K3 hold 9 edges, which is not divisible by n - 2
    bad = Deck(tuple(sorted([canonical_form(path(3))] * 3 + [canonical_form(complete(3))])))
    with pytest.raises(ConsistencyError):
        kelly_count_from_deck(bad, Graph(2, [(0, 1)]))


def test_deck_validation():
    with pytest.raises(InputError):
        Deck((canonical_form(path(2)), canonical_form(path(3))))
    assert isinstance(colored_deck(two_form(path(3))), ColoredDeck)


def test_deck_is_an_isomorphism_invariant():
    for g in enumerate_graphs(4):
        assert deck(g) == deck(Graph(4, [(3 - u, 3 - v) for u, v in g.edges]))
