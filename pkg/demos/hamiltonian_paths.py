"""
Hamiltonian paths from a deck
=============================

With F = (aK2, bK2), a + b = n - 1, the only connected graph on n vertices
that is a union of one copy of each is the path P_n.  Everything else in
the Kocay expansion is either smaller than G or disconnected and spanning,
so the number of Hamiltonian paths follows from the deck.
"""

from kocay import complete, count_subgraph, cycle, deck, enumerate_graphs, path, reconstruct_path_count

for name, g in (("P5", path(5)), ("C5", cycle(5)), ("K5", complete(5))):
    rep = reconstruct_path_count(deck(g))
    print(name, rep.value)

rep = reconstruct_path_count(deck(cycle(6)))
for step in rep.ledger:
    print(step)

# agreement with direct counting over every graph on 6 vertices
bad = [g for g in enumerate_graphs(6)
       if reconstruct_path_count(deck(g)).value != count_subgraph(g, path(6))]
print("mismatches:", len(bad))
