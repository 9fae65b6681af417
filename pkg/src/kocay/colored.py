"""2-edge-refined graphs: red pairs, blue pairs, and uncoloured pairs.

A :class:`ColoredGraph` need not be complete.  Subgraphs of a two-form keep
only the coloured pairs they contain; every other pair is uncoloured and
places no constraint when the graph is embedded somewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Literal

from . import _engine
from ._engine import Pair, norm_pair
from .errors import InputError
from .graph import (
    CanonicalForm,
    Component,
    Graph,
    Permutation,
    _check_n,
    _check_pair,
    _normalize_pairs,
    complement,
)

Color = Literal["red", "blue"]


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    red: frozenset[Pair] = frozenset()
    blue: frozenset[Pair] = frozenset()

    def __post_init__(self):
        _check_n(self.n)
        red = _normalize_pairs(self.n, self.red, "red")
        blue = _normalize_pairs(self.n, self.blue, "blue")
        both = red & blue
        if both:
            raise InputError(f"pairs coloured both red and blue: {sorted(both)}")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)

    @property
    def layers(self) -> tuple[frozenset[Pair], frozenset[Pair]]:
        return (self.red, self.blue)

    @classmethod
    def from_layers(cls, n: int, layers) -> "ColoredGraph":
        red, blue = layers
        return cls(n, red, blue)

    def color_of(self, u: int, v: int) -> Color | None:
        p = norm_pair(u, v)
        if p in self.red:
            return "red"
        if p in self.blue:
            return "blue"
        return None

    def is_complete(self) -> bool:
        return len(self.red) + len(self.blue) == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, red={sorted(self.red)}, blue={sorted(self.blue)})"


@dataclass(frozen=True, order=True)
class ColoredCanonicalForm(CanonicalForm):
    """Colour-preserving isomorphism key.

    ``code`` reads each pair (graph6 column order) as a base-3 digit, 0 for
    uncoloured, 1 for red, 2 for blue, minimised over relabellings.
    """

    _nlayers = 2

    def graph(self) -> ColoredGraph:
        red, blue = _engine.layers_from_code(self.n, self.code, 2)
        return ColoredGraph(self.n, red, blue)


def red_graph(g: Graph) -> ColoredGraph:
    """``g`` with every edge red and every non-edge uncoloured."""
    return ColoredGraph(g.n, g.edges)


def blue_graph(g: Graph) -> ColoredGraph:
    return ColoredGraph(g.n, (), g.edges)


def two_form(g: Graph) -> ColoredGraph:
    """Edges become red, non-edges blue."""
    return ColoredGraph(g.n, g.edges, complement(g).edges)


def colored_canonical_form(h: ColoredGraph) -> ColoredCanonicalForm:
    code, _ = _engine.canonical_labeling(h.n, h.layers)
    return ColoredCanonicalForm(h.n, code)


def colored_isomorphic(a: ColoredGraph, b: ColoredGraph) -> bool:
    if a.n != b.n or len(a.red) != len(b.red) or len(a.blue) != len(b.blue):
        return False
    return colored_canonical_form(a) == colored_canonical_form(b)


def colored_permute(h: ColoredGraph, perm) -> ColoredGraph:
    if sorted(perm) != list(range(h.n)):
        raise InputError(f"{perm!r} is not a permutation of range({h.n})")
    return ColoredGraph.from_layers(h.n, _engine.relabel(h.layers, perm))


def colored_automorphisms(h: ColoredGraph) -> frozenset[Permutation]:
    return frozenset(_engine.automorphisms(h.n, h.layers))


def colored_pair_orbit_size(h: ColoredGraph, pair) -> int:
    p = _check_pair(h.n, pair)
    return len(_engine.pair_orbit(h.n, h.layers, p))


def swap_colors(h: ColoredGraph) -> ColoredGraph:
    return ColoredGraph(h.n, h.blue, h.red)


def delete_pair(h: ColoredGraph, e) -> ColoredGraph:
    """Make the coloured pair ``e`` uncoloured; the vertex set is unchanged."""
    p = _check_pair(h.n, e)
    if p in h.red:
        return ColoredGraph(h.n, h.red - {p}, h.blue)
    if p in h.blue:
        return ColoredGraph(h.n, h.red, h.blue - {p})
    raise InputError(f"pair {p} is uncoloured; nothing to delete")


def recolor(h: ColoredGraph, e, color: Color) -> ColoredGraph:
    """Colour the currently uncoloured pair ``e``."""
    p = _check_pair(h.n, e)
    if p in h.red or p in h.blue:
        raise InputError(f"pair {p} is already coloured")
    if color == "red":
        return ColoredGraph(h.n, h.red | {p}, h.blue)
    if color == "blue":
        return ColoredGraph(h.n, h.red, h.blue | {p})
    raise InputError(f"colour must be 'red' or 'blue', got {color!r}")


def colored_induced_subgraph(h: ColoredGraph, vertices) -> ColoredGraph:
    k, layers = _engine.restrict(h.n, h.layers, list(vertices))
    return ColoredGraph.from_layers(k, layers)


def colored_delete_vertex(h: ColoredGraph, v: int) -> ColoredGraph:
    if h.n < 2:
        raise InputError("cannot delete the only vertex")
    return colored_induced_subgraph(h, [x for x in range(h.n) if x != v])


def colored_components(h: ColoredGraph) -> list[Component]:
    """Components under red-or-blue adjacency; uncoloured pairs do not connect."""
    return [
        Component(vs, colored_induced_subgraph(h, vs))
        for vs in _engine.components(h.n, h.layers)
    ]


def colored_disjoint_union(*graphs: ColoredGraph) -> ColoredGraph:
    red, blue = [], []
    offset = 0
    for g in graphs:
        red.extend((u + offset, v + offset) for u, v in g.red)
        blue.extend((u + offset, v + offset) for u, v in g.blue)
        offset += g.n
    return ColoredGraph(offset, red, blue)


@lru_cache(maxsize=None)
def _colored_classes(n: int) -> tuple[ColoredCanonicalForm, ...]:
    pairs = list(combinations(range(n), 2))
    found = set()
    for digits in product((0, 1, 2), repeat=len(pairs)):
        red = [p for p, d in zip(pairs, digits) if d == 1]
        blue = [p for p, d in zip(pairs, digits) if d == 2]
        found.add(colored_canonical_form(ColoredGraph(n, red, blue)))
    return tuple(sorted(found))


def enumerate_colored_graphs(n: int) -> Iterator[ColoredGraph]:
    """One representative per colour-isomorphism class (uncoloured pairs allowed).

    Brute force over all 3^C(n,2) labellings, so only practical for n <= 5.
    """
    _check_n(n)
    if n > 5:
        raise InputError("coloured enumeration is brute force; n must be <= 5")
    for cf in _colored_classes(n):
        yield cf.graph()
