import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import colored_graphs, graphs
from kocay import (
    ColoredGraph,
    InputError,
    blue_graph,
    canonical_form,
    colored_automorphisms,
    colored_canonical_form,
    colored_isomorphic,
    colored_pair_orbit_size,
    complement,
    cycle,
    delete_pair,
    enumerate_colored_graphs,
    is_isomorphic,
    path,
    recolor,
    red_graph,
    swap_colors,
    two_form,
)
from kocay.colored import colored_permute


def test_basic_construction():
    h = ColoredGraph(3, [(0, 1)], [(1, 2)])
    assert h.color_of(0, 1) == "red"
    assert h.color_of(2, 1) == "blue"
    assert h.color_of(0, 2) is None
    assert not h.is_complete()
    assert two_form(path(3)).is_complete()


def test_overlapping_colours_rejected():
    with pytest.raises(InputError):
        ColoredGraph(3, [(0, 1)], [(1, 0)])


def test_two_form_of_path():
    t = two_form(path(4))
    assert t.red == path(4).edges
    assert t.blue == {(0, 2), (0, 3), (1, 3)}


def test_plain_and_coloured_forms_never_equal():
    assert canonical_form(path(2)) != colored_canonical_form(red_graph(path(2)))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 10), (4, 66)])
def test_coloured_class_counts(n, expected):
    assert len(list(enumerate_colored_graphs(n))) == expected


def test_enumeration_against_brute_force():
    reps = []
    for h in enumerate_colored_graphs(3):
        assert not any(oracles.iso(h, r) for r in reps)
        reps.append(h)


def test_colour_matters_for_isomorphism():
    a = ColoredGraph(3, [(0, 1)], [(1, 2)])
    b = ColoredGraph(3, [(0, 1), (1, 2)], [])
    assert not colored_isomorphic(a, b)
    assert colored_isomorphic(a, ColoredGraph(3, [(1, 2)], [(0, 1)]))


@settings(max_examples=150, deadline=None)
@given(colored_graphs(max_n=5), st.data())
def test_canonical_invariance(h, data):
    p = data.draw(st.permutations(range(h.n)))
    assert colored_canonical_form(colored_permute(h, p)) == colored_canonical_form(h)


@settings(max_examples=80, deadline=None)
@given(colored_graphs(max_n=4), colored_graphs(max_n=4))
def test_isomorphism_matches_brute_force(a, b):
    assert colored_isomorphic(a, b) == oracles.iso(a, b)


@settings(max_examples=80, deadline=None)
@given(colored_graphs(max_n=5))
def test_automorphisms_match_brute_force(h):
    assert set(colored_automorphisms(h)) == oracles.autos(h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_two_form_preserves_isomorphism(g, h):
    assert colored_isomorphic(two_form(g), two_form(h)) == is_isomorphic(g, h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6))
def test_swap_of_two_form_is_two_form_of_complement(g):
    assert swap_colors(two_form(g)) == two_form(complement(g))


@settings(max_examples=80, deadline=None)
@given(colored_graphs(min_n=2, max_n=5))
def test_orbit_sums(h):
    # each pair orbit contributes its size once per member
    pairs = [(u, v) for v in range(h.n) for u in range(v)]
    assert sum(1 / colored_pair_orbit_size(h, e) for e in pairs) == pytest.approx(
        len({frozenset(tuple(sorted((p[u], p[v]))) for p in oracles.autos(h)) for u, v in pairs})
    )


def test_pair_operations():
    h = two_form(cycle(4))
    m = delete_pair(h, (0, 1))
    assert m.color_of(0, 1) is None
    assert recolor(m, (0, 1), "blue").color_of(0, 1) == "blue"
    assert recolor(m, (1, 0), "red") == h
    with pytest.raises(InputError):
        recolor(m, (0, 1), "green")
    assert blue_graph(path(3)).blue == path(3).edges
