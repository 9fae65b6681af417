"""
Covers and the Kocay identity
=============================

For a sequence F of small graphs, the product of the counts of each F_i in
G is a weighted sum over the graphs X that can be written as a union of one
copy of each member.  The weight c(F, X) is the number of such covers.
"""

from kocay import (
    blue_graph,
    complete,
    cover_count,
    cycle,
    kocay_check,
    matching,
    path,
    red_graph,
    two_form,
    union_classes,
)
from kocay.formats import describe

K2 = path(2)
print(cover_count((K2, K2), path(3)), cover_count((matching(2), matching(2)), path(5)))

# the ways two edges can overlap
for cf, c in union_classes((K2, K2), 4):
    print(describe(cf), "covered", c, "ways")

rep = kocay_check(complete(3), (K2, K2))
print(rep.lhs, "=", " + ".join(f"{t.cover}*{t.count}" for t in rep.terms))

rep = kocay_check(cycle(5), (path(3), K2))
print(rep.lhs, rep.rhs, len(rep.terms), "classes")

# the same identity for coloured graphs: red edges are edges, blue are non-edges
gp = two_form(path(4))
rep = kocay_check(gp, (red_graph(K2), blue_graph(K2)))
print(rep.lhs, rep.rhs)
