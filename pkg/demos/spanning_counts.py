"""
Spanning counts from a deck
===========================

Patterns with as many vertices as G are not covered by Kelly counting.  If
the pattern is disconnected, every way of placing its components that uses
all n vertices is the pattern itself, so its count is the deck-computable
order-n part of a Kocay product divided by one cover count.
"""

from kocay import (
    complete,
    cycle,
    deck,
    disjoint_union,
    empty,
    matching,
    order_n_sum,
    path,
    spanning_disconnected_sum,
    spanning_subgraph_count,
)

K2 = path(2)
print(order_n_sum(deck(path(3)), (K2, K2)))

print(spanning_subgraph_count(deck(cycle(4)), matching(2)))   # C4 has two perfect matchings
print(spanning_subgraph_count(deck(path(4)), matching(2)))
k3_k1 = disjoint_union(complete(3), empty(1))
print(spanning_subgraph_count(deck(k3_k1), disjoint_union(K2, empty(2))))

print(spanning_disconnected_sum(deck(cycle(4)), (K2, K2)))
