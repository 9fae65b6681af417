"""
Decks and Kelly counting
========================

The deck of a graph is the multiset of its vertex-deleted subgraphs.  Any
pattern with fewer vertices than the graph can be counted from the deck
alone, since each copy survives in exactly n - k cards.
"""

from kocay import Graph, count_subgraph, cycle, deck, kelly_count_from_deck, path, star
from kocay.formats import describe

g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])   # a pentagon with one chord
d = deck(g)
for cf, mult in sorted(d.multiplicities().items()):
    print(mult, "x", describe(cf), sorted(cf.graph().edges))

for h in (path(2), path(3), star(3), cycle(4)):
    print(describe(h), kelly_count_from_deck(d, h), count_subgraph(g, h))

# induced counts come out of the deck the same way
print(kelly_count_from_deck(d, path(3), "induced"))
