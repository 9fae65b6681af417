"""
Canonical forms and automorphisms
=================================

Every graph here has at most 10 vertices, so a canonical code can be found
by search and two graphs are isomorphic exactly when their codes agree.
"""

from kocay import automorphisms, canonical_form, cycle, enumerate_graphs, path, permute
from kocay.formats import describe

# relabel a 5-cycle and check that the code does not move
c5 = cycle(5)
shuffled = permute(c5, [3, 0, 4, 1, 2])
print(sorted(shuffled.edges))
print(canonical_form(c5) == canonical_form(shuffled), describe(canonical_form(c5)))

# the dihedral group of the pentagon
print("|Aut(C5)| =", len(automorphisms(c5)))
print("|Aut(P4)| =", len(automorphisms(path(4))))

# isomorphism classes by order
for n in range(1, 8):
    print(n, sum(1 for _ in enumerate_graphs(n)))
