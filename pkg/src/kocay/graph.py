"""Small simple undirected graphs: canonical forms, isomorphism, automorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import _engine
from ._engine import MAX_N, Pair, norm_pair
from .errors import InputError

Permutation = tuple[int, ...]


def _normalize_pairs(n: int, pairs: Iterable, what: str) -> frozenset[Pair]:
    out: set[Pair] = set()
    for e in pairs:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise InputError(f"{what}: {e!r} is not a vertex pair") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InputError(f"{what}: {e!r} has non-integer endpoints")
        if u == v:
            raise InputError(f"{what}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{what}: pair {e!r} out of range for n={n}")
        p = norm_pair(u, v)
        if p in out:
            raise InputError(f"{what}: duplicate pair {p}")
        out.add(p)
    return frozenset(out)


def _check_n(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise InputError(f"vertex count must be an integer in [1, {MAX_N}], got {n!r}")


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    Equality is labelled equality (same ``n``, same edge set); use
    :func:`is_isomorphic` for isomorphism.
    """

    n: int
    edges: frozenset[Pair] = frozenset()

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "edges", _normalize_pairs(self.n, self.edges, "edges"))

    @property
    def layers(self) -> tuple[frozenset[Pair]]:
        return (self.edges,)

    @classmethod
    def from_layers(cls, n: int, layers) -> "Graph":
        (edges,) = layers
        return cls(n, edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_pair(u, v) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: vertex count plus the minimal adjacency code.

    ``code`` is the upper-triangle adjacency bit string (graph6 column order)
    read as a binary number, minimised over all relabellings.
    """

    n: int
    code: int

    _nlayers = 1

    def graph(self) -> Graph:
        """The canonically labelled representative."""
        return Graph(self.n, _engine.layers_from_code(self.n, self.code, 1)[0])


# ---------------------------------------------------------------------------
# named graphs

def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching(k: int) -> Graph:
    """k disjoint edges, kK_2."""
    return Graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# ---------------------------------------------------------------------------
# operations

def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InputError(f"{perm!r} is not a permutation of range({g.n})")
    return Graph(g.n, _engine.relabel(g.layers, perm)[0])


def canonical_form(g: Graph) -> CanonicalForm:
    code, _ = _engine.canonical_labeling(g.n, g.layers)
    return CanonicalForm(g.n, code)


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> frozenset[Permutation]:
    """Every permutation mapping edges to edges (and hence non-edges to non-edges)."""
    return frozenset(_engine.automorphisms(g.n, g.layers))


def _check_pair(n: int, pair) -> Pair:
    try:
        u, v = pair
    except (TypeError, ValueError):
        raise InputError(f"{pair!r} is not a vertex pair") from None
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise InputError(f"pair {pair!r} is not a pair of distinct vertices of range({n})")
    return norm_pair(u, v)


def pair_orbit_size(g: Graph, pair) -> int:
    """Size of the orbit of an unordered vertex pair (edge or not) under Aut(g)."""
    p = _check_pair(g.n, pair)
    return len(_engine.pair_orbit(g.n, g.layers, p))


def complement(g: Graph) -> Graph:
    return Graph(g.n, (p for p in combinations(range(g.n), 2) if p not in g.edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    k, layers = _engine.restrict(g.n, g.layers, list(vertices))
    return Graph(k, layers[0])


def delete_vertex(g: Graph, v: int) -> Graph:
    if g.n < 2:
        raise InputError("cannot delete the only vertex")
    return induced_subgraph(g, [x for x in range(g.n) if x != v])


class Component(NamedTuple):
    vertices: tuple[int, ...]
    graph: Graph


def connected_components(g: Graph) -> list[Component]:
    """Components in order of their smallest vertex; each subgraph relabelled
    to ``0..k-1`` in increasing vertex order."""
    return [Component(vs, induced_subgraph(g, vs)) for vs in _engine.components(g.n, g.layers)]


def is_connected(g: Graph) -> bool:
    return len(_engine.components(g.n, g.layers)) == 1


def max_degree(g: Graph) -> int:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg)


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (canonical_form(Graph(1)),)
    found = set()
    for parent in _classes(n - 1):
        base = parent.graph().edges
        for mask in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            found.add(canonical_form(Graph(n, base | frozenset(extra))))
    return tuple(sorted(found))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on n
    vertices, in increasing code order.

    Classes on n vertices are obtained by adding a vertex, with every possible
    neighbourhood, to each class on n-1 vertices.
    """
    _check_n(n)
    for cf in _classes(n):
        yield cf.graph()


def enumerate_trees(n: int) -> Iterator[Graph]:
    for g in enumerate_graphs(n):
        if is_tree(g):
            yield g
