"""
Spanning trees by blue descent
==============================

Colour G's edges red and its non-edges blue.  Recolouring a spanning tree T
from all red to all blue one edge at a time links the count of T in G to
the count of T in the complement.  Each link involves a spanning forest,
which the coloured deck determines.  The chain ends in a*x + b*y = K with
x = count(G, T) and y = count(complement(G), T); the colour-swapped deck
gives b*x + a*y = K'.
"""

from collections import Counter

from kocay import colored_deck, cycle, enumerate_graphs, enumerate_trees, tree_combo_oracle, tree_descent, two_form
from kocay.formats import describe

g = cycle(6)
d = colored_deck(two_form(g))
for t in enumerate_trees(6):
    rep = tree_descent(d, t)
    print(describe(t), rep.status.value, rep.coefficients, rep.values, tree_combo_oracle(g, t))

# which kind of answer each tree shape gets, over all decks of each order
for n in (5, 6):
    seen = Counter()
    for t in enumerate_trees(n):
        for h in enumerate_graphs(n):
            rep = tree_descent(colored_deck(two_form(h)), t)
            seen[rep.status.value, rep.coefficients] += 1
    print(n, dict(seen))
