import random

import pytest

from kocay import (
    ColoredGraph,
    InputError,
    PreconditionError,
    Status,
    blue_descent_sequence,
    blue_graph,
    colored_canonical_form,
    colored_deck,
    complement,
    complete,
    count_colored_subgraph,
    count_subgraph,
    cycle,
    deck,
    edge_identity_check,
    empty,
    enumerate_colored_graphs,
    enumerate_graphs,
    enumerate_trees,
    path,
    permute,
    red_graph,
    reconstruct_path_count,
    star,
    swap_deck_colors,
    tree_combo_oracle,
    tree_descent,
    two_form,
)
from kocay.reconstruct import default_edge_ordering, descent_combination


def test_edge_identity_examples():
    rep = edge_identity_check(two_form(complete(3)), red_graph(path(2)), (0, 1))
    assert (rep.lhs, rep.rhs) == (3, 3)
    rep = edge_identity_check(two_form(path(3)), red_graph(path(2)), (0, 1))
    assert (rep.lhs, rep.rhs, rep.count_red, rep.count_blue) == (3, 3, 2, 1)
    rep = edge_identity_check(two_form(complete(4)), ColoredGraph(3, [(0, 1)], [(1, 2)]), (1, 2))
    assert rep.count_blue == 0 and rep.equal


def test_edge_identity_rejects_uncoloured_pair():
    with pytest.raises(InputError):
        edge_identity_check(two_form(path(3)), ColoredGraph(3, [(0, 1)], []), (0, 2))


@pytest.mark.parametrize("g, expected", [(path(5), 1), (cycle(5), 5), (complete(5), 60), (empty(6), 0)])
def test_path_examples(g, expected):
    rep = reconstruct_path_count(deck(g))
    assert rep.status is Status.EXACT
    assert rep.value == expected
    assert rep.ledger


def test_path_needs_n_above_four():
    with pytest.raises(PreconditionError):
        reconstruct_path_count(deck(path(4)))
    with pytest.raises(InputError):
        reconstruct_path_count(colored_deck(two_form(path(5))))


def test_descent_sequence_shapes():
    s = blue_descent_sequence(path(2))
    assert [(len(h.red), len(h.blue)) for h in s.stages] == [(1, 0), (0, 1)]
    s = blue_descent_sequence(path(3))
    assert len(s.stages) == 3
    assert (len(s.stages[1].red), len(s.stages[1].blue)) == (1, 1)
    for t in enumerate_trees(5):
        s = blue_descent_sequence(t)
        assert s.stages[-1] == blue_graph(t)
        g = cycle(5)
        assert count_colored_subgraph(two_form(g), s.stages[-1]) == count_subgraph(complement(g), t)


def test_descent_sequence_rejects_non_trees():
    with pytest.raises(InputError):
        blue_descent_sequence(cycle(4))
    with pytest.raises(InputError):
        blue_descent_sequence(path(3), [(0, 1)])


def test_default_ordering_is_labelling_independent():
    for t in enumerate_trees(6):
        base = blue_descent_sequence(t)
        q = permute(t, [5, 3, 1, 0, 2, 4])
        other = blue_descent_sequence(q)
        # both orderings must describe the same colouring stages up to isomorphism
        assert [colored_canonical_form(h) for h in base.stages] == \
               [colored_canonical_form(h) for h in other.stages]
        assert default_edge_ordering(t) == default_edge_ordering(t)


def test_tree_combo_oracle_examples():
    assert tree_combo_oracle(cycle(5), path(5)) == (5, 5)
    assert tree_combo_oracle(complete(4), path(4)) == (12, 0)
    assert tree_combo_oracle(empty(4), star(3)) == (0, 4)
    with pytest.raises(InputError):
        tree_combo_oracle(cycle(4), cycle(4))


def test_small_tree_is_exact_by_kelly():
    g = cycle(5)
    rep = tree_descent(colored_deck(two_form(g)), path(2))
    assert rep.status is Status.EXACT
    assert rep.values == {"G": 5, "complement": 5}


def test_spanning_path_on_c5():
    rep = tree_descent(colored_deck(two_form(cycle(5))), path(5))
    a, b = rep.coefficients
    assert a * 5 + b * 5 == rep.values["K"]


def test_swapped_deck_reverses_the_combination():
    for t in enumerate_trees(5):
        for g in list(enumerate_graphs(5))[::5]:
            a, b, k = descent_combination(two_form(g), t)
            a2, b2, k2 = descent_combination(two_form(complement(g)), t)
            assert (a2, b2) == (a, b)
            x0, x1 = tree_combo_oracle(g, t)
            assert a * x0 + b * x1 == k
            assert b * x0 + a * x1 == k2


def test_combo_only_without_complement_trick():
    d = colored_deck(two_form(path(5)))
    rep = tree_descent(d, path(5), complement_trick=False)
    assert rep.status is Status.COMBO_ONLY
    assert set(rep.values) == {"K"}
    with pytest.raises(ValueError):
        rep.value


def test_tree_descent_statuses():
    for n, status, coeffs in ((5, Status.DIFFERENCE_COMBO, (1, -1)), (6, Status.SUM_COMBO, (1, 1))):
        for t in enumerate_trees(n):
            rep = tree_descent(colored_deck(two_form(cycle(n))), t)
            assert (rep.status, rep.coefficients) == (status, coeffs)


def test_tree_descent_errors():
    d = colored_deck(two_form(cycle(5)))
    with pytest.raises(InputError):
        tree_descent(deck(cycle(5)), path(5))
    with pytest.raises(InputError):
        tree_descent(d, cycle(5))
    with pytest.raises(PreconditionError):
        tree_descent(d, path(6))


def test_tree_descent_report_is_serialisable():
    rep = tree_descent(swap_deck_colors(colored_deck(two_form(path(5)))), star(4))
    out = rep.to_dict()
    assert out["status"] == rep.status.value
    assert out["ordering"] and out["ledger"]


def test_edge_identity_on_five_vertex_patterns():
    rng = random.Random(11)
    patterns = [(h, e) for h in enumerate_colored_graphs(5) for e in sorted(h.red | h.blue)]
    hosts = [two_form(g) for g in enumerate_graphs(6)]
    for h, e in rng.sample(patterns, 300):
        gp = rng.choice(hosts)
        assert edge_identity_check(gp, h, e).equal
