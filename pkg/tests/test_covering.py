import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import graphs
from kocay import (
    InputError,
    PreconditionError,
    blue_graph,
    colored_deck,
    complete,
    cover_count,
    cycle,
    deck,
    disjoint_union,
    empty,
    enumerate_copies,
    enumerate_graphs,
    kocay_check,
    matching,
    order_n_sum,
    path,
    permute,
    red_graph,
    spanning_disconnected_sum,
    spanning_subgraph_count,
    two_form,
    union_classes,
)
from kocay.covering import direct_order_n_sum, direct_spanning_disconnected_sum

K1, K2 = empty(1), path(2)


def test_enumerate_copies():
    assert len(enumerate_copies(complete(3), K2)) == 3
    copies = enumerate_copies(path(3), empty(2))
    assert len(copies) == 3
    assert all(c.edges == (frozenset(),) for c in copies)
    assert all(c.graph() == empty(2) for c in copies)
    assert len(enumerate_copies(two_form(path(3)), blue_graph(K2))) == 1
    with pytest.raises(InputError):
        enumerate_copies(path(3), blue_graph(K2))


@pytest.mark.parametrize("seq, x, expected", [
    ((K2, K2), K2, 1),
    ((K2, K2), path(3), 2),
    ((matching(2), matching(2)), path(5), 2),
    ((K2,), path(3), 0),
    ((K1, K1), empty(2), 2),
])
def test_cover_count_examples(seq, x, expected):
    assert cover_count(seq, x) == expected
    assert oracles.cover_count(seq, x) == expected


def test_coloured_cover():
    x = two_form(path(3))
    seq = (red_graph(K2), red_graph(K2), blue_graph(K2))
    assert cover_count(seq, x) == oracles.cover_count(seq, x) == 2


_members = [g for k in range(1, 4) for g in enumerate_graphs(k)]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=4), st.lists(st.sampled_from(_members), min_size=1, max_size=3), st.data())
def test_cover_count_invariances(x, seq, data):
    want = oracles.cover_count(seq, x)
    assert cover_count(seq, x) == want
    assert cover_count(data.draw(st.permutations(seq)), x) == want
    assert cover_count(seq, permute(x, data.draw(st.permutations(range(x.n))))) == want


def test_cover_relabel_invariance_exhaustive():
    seqs = [(K2, K2), (path(3), K2), (K2, empty(2), K1)]
    for n in range(1, 6):
        for x in enumerate_graphs(n):
            for seq in seqs:
                base = cover_count(seq, x)
                for p in list(permutations(range(n)))[:: max(1, n * 5)]:
                    assert cover_count(seq, permute(x, p)) == base


def test_kocay_examples():
    rep = kocay_check(complete(3), (K2, K2))
    assert (rep.lhs, rep.rhs, rep.equal) == (9, 9, True)
    assert sorted((t.cover, t.count) for t in rep.terms) == [(1, 3), (2, 3)]
    assert kocay_check(cycle(5), (K1,)).lhs == 5
    rep = kocay_check(two_form(path(3)), (red_graph(K2), blue_graph(K2)))
    assert rep.lhs == rep.rhs == 2


def test_kocay_allows_large_members():
    rep = kocay_check(path(3), (complete(3), K2))
    assert rep.lhs == rep.rhs == 0
    rep = kocay_check(path(3), (path(3), path(3)))
    assert rep.equal and rep.lhs == 1


def test_union_classes_of_two_edges():
    got = {(cf.graph().n, len(cf.graph().edges)): c for cf, c in union_classes((K2, K2), 4)}
    assert got == {(2, 1): 1, (3, 2): 2, (4, 2): 2}


def test_order_n_sum_examples():
    assert order_n_sum(deck(path(3)), (K2, K2)) == 2
    assert order_n_sum(deck(cycle(5)), (K1,)) == 0
    gp = two_form(path(4))
    seq = (red_graph(K2),) * 3
    assert order_n_sum(colored_deck(gp), seq) == direct_order_n_sum(gp, seq)
    with pytest.raises(PreconditionError):
        order_n_sum(deck(path(3)), (path(3),))


def test_spanning_subgraph_count_examples():
    assert spanning_subgraph_count(deck(cycle(4)), matching(2)) == 2
    assert spanning_subgraph_count(deck(path(4)), matching(2)) == 1
    g = disjoint_union(complete(3), K1)
    assert spanning_subgraph_count(deck(g), disjoint_union(K2, empty(2))) == 3
    with pytest.raises(PreconditionError):
        spanning_subgraph_count(deck(cycle(4)), path(4))


def test_spanning_disconnected_sum_examples():
    assert spanning_disconnected_sum(deck(cycle(4)), (K2, K2)) == 4
    assert spanning_disconnected_sum(deck(path(4)), (K2, K2)) == 2
    assert spanning_disconnected_sum(deck(cycle(5)), (K2, K1)) == 0


def test_deck_sums_match_direct_on_random_cases():
    rng = random.Random(7)
    members = [g for k in range(1, 4) for g in enumerate_graphs(k)]
    for _ in range(25):
        n = rng.randint(4, 5)
        g = rng.choice(list(enumerate_graphs(n)))
        seq = tuple(rng.choice(members) for _ in range(rng.randint(1, 3)))
        d = deck(g)
        assert order_n_sum(d, seq) == direct_order_n_sum(g, seq)
        assert spanning_disconnected_sum(d, seq) == direct_spanning_disconnected_sum(g, seq)
