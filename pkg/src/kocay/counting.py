"""Subgraph counts, decks, and Kelly-style counting from a deck.

``count_subgraph(g, h)`` is the number of distinct subgraphs of ``g`` (vertex
subset plus edge subset) isomorphic to ``h``; ``count_induced(g, h)`` counts
vertex subsets inducing ``h``.  The coloured versions embed red pairs on red
pairs and blue on blue; uncoloured pattern pairs are free in subgraph mode
and must land on uncoloured pairs in induced mode.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Union

from . import _engine
from .colored import (
    ColoredCanonicalForm,
    ColoredGraph,
    colored_canonical_form,
    colored_delete_vertex,
    swap_colors,
)
from .errors import ConsistencyError, InputError, PreconditionError
from .graph import CanonicalForm, Graph, canonical_form, complement, delete_vertex

AnyGraph = Union[Graph, ColoredGraph]
Mode = Literal["subgraph", "induced"]


def canonical_of(x: AnyGraph) -> CanonicalForm:
    if isinstance(x, ColoredGraph):
        return colored_canonical_form(x)
    if isinstance(x, Graph):
        return canonical_form(x)
    raise InputError(f"expected Graph or ColoredGraph, got {type(x).__name__}")


def same_kind(a: AnyGraph, b: AnyGraph) -> None:
    if type(a) is not type(b):
        raise InputError(
            f"kind mismatch: {type(a).__name__} vs {type(b).__name__}"
        )


@lru_cache(maxsize=None)
def _count(host: AnyGraph, pattern: AnyGraph, induced: bool) -> int:
    if pattern.n > host.n:
        return 0
    return _engine.count_copies(host, pattern, induced)


def count(host: AnyGraph, pattern: AnyGraph, mode: Mode = "subgraph") -> int:
    """Kind-generic count; both arguments plain or both coloured."""
    same_kind(host, pattern)
    if mode not in ("subgraph", "induced"):
        raise InputError(f"mode must be 'subgraph' or 'induced', got {mode!r}")
    return _count(host, pattern, mode == "induced")


def count_induced(g: Graph, h: Graph) -> int:
    """<g, h>: vertex subsets of ``g`` whose induced subgraph is isomorphic to ``h``."""
    _expect(g, Graph)
    _expect(h, Graph)
    return _count(g, h, True)


def count_subgraph(g: Graph, h: Graph) -> int:
    """(g, h): edge-preserving injections of ``h`` into ``g`` divided by |Aut(h)|."""
    _expect(g, Graph)
    _expect(h, Graph)
    return _count(g, h, False)


def count_colored_subgraph(gp: ColoredGraph, hp: ColoredGraph) -> int:
    _expect(gp, ColoredGraph)
    _expect(hp, ColoredGraph)
    return _count(gp, hp, False)


def count_colored_induced(gp: ColoredGraph, hp: ColoredGraph) -> int:
    _expect(gp, ColoredGraph)
    _expect(hp, ColoredGraph)
    return _count(gp, hp, True)


def _expect(x, cls) -> None:
    if type(x) is not cls:
        raise InputError(f"expected {cls.__name__}, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# decks

@dataclass(frozen=True)
class Deck:
    """Multiset of canonical one-vertex-deleted cards (stored sorted)."""

    cards: tuple[CanonicalForm, ...]

    _card_type = CanonicalForm

    def __post_init__(self):
        cards = tuple(sorted(self.cards))
        if len(cards) < 2:
            raise InputError("a deck needs at least 2 cards")
        for c in cards:
            if type(c) is not self._card_type:
                raise InputError(
                    f"{type(self).__name__} cards must be {self._card_type.__name__}, "
                    f"got {type(c).__name__}"
                )
            if c.n != len(cards) - 1:
                raise InputError(
                    f"card on {c.n} vertices in a deck of {len(cards)} cards"
                )
        object.__setattr__(self, "cards", cards)

    @property
    def n(self) -> int:
        """Order of the graph the deck came from (= number of cards)."""
        return len(self.cards)

    def multiplicities(self) -> Counter:
        return Counter(self.cards)

    def __repr__(self) -> str:
        body = ", ".join(f"{c.code}x{m}" for c, m in sorted(self.multiplicities().items()))
        return f"{type(self).__name__}(n={self.n}, cards=[{body}])"


@dataclass(frozen=True, repr=False)
class ColoredDeck(Deck):
    _card_type = ColoredCanonicalForm


def deck(g: Graph) -> Deck:
    _expect(g, Graph)
    if g.n < 2:
        raise InputError("deck needs a graph with at least 2 vertices")
    return Deck(tuple(canonical_form(delete_vertex(g, v)) for v in range(g.n)))


def colored_deck(gp: ColoredGraph) -> ColoredDeck:
    _expect(gp, ColoredGraph)
    if gp.n < 2:
        raise InputError("deck needs a graph with at least 2 vertices")
    return ColoredDeck(
        tuple(colored_canonical_form(colored_delete_vertex(gp, v)) for v in range(gp.n))
    )


def deck_of_complement(d: Deck) -> Deck:
    """Deck of the complement: complement every card."""
    _expect(d, Deck)
    return Deck(tuple(canonical_form(complement(c.graph())) for c in d.cards))


def swap_deck_colors(d: ColoredDeck) -> ColoredDeck:
    """For the deck of two_form(G) this is the deck of two_form(complement(G))."""
    _expect(d, ColoredDeck)
    return ColoredDeck(tuple(colored_canonical_form(swap_colors(c.graph())) for c in d.cards))


@lru_cache(maxsize=None)
def _kelly(d: Deck, h: AnyGraph, induced: bool) -> int:
    k = h.n
    n = d.n
    if k >= n:
        raise PreconditionError(
            f"pattern has {k} vertices; Kelly counting needs fewer than {n}"
        )
    total = sum(m * _count(card.graph(), h, induced) for card, m in d.multiplicities().items())
    q, r = divmod(total, n - k)
    if r:
        raise ConsistencyError(
            f"card total {total} not divisible by {n - k}; deck is inconsistent"
        )
    return q


def kelly_count_from_deck(d: Deck, h: Graph, mode: Mode = "subgraph") -> int:
    """Count of ``h`` in any graph with deck ``d``.

    Each copy of ``h`` survives on exactly ``n - |V(h)|`` cards, so
    ``(n - |V(h)|) * count(G, h) == sum over cards of count(card, h)``.
    """
    _expect(d, Deck)
    _expect(h, Graph)
    return _kelly(d, h, _induced_flag(mode))


def colored_kelly_count_from_deck(d: ColoredDeck, hp: ColoredGraph, mode: Mode = "subgraph") -> int:
    _expect(d, ColoredDeck)
    _expect(hp, ColoredGraph)
    return _kelly(d, hp, _induced_flag(mode))


def kelly_count(d: Deck, x: AnyGraph) -> int:
    """Kind-generic subgraph-mode Kelly count."""
    if isinstance(d, ColoredDeck):
        return colored_kelly_count_from_deck(d, x)
    return kelly_count_from_deck(d, x)


def _induced_flag(mode: str) -> bool:
    if mode not in ("subgraph", "induced"):
        raise InputError(f"mode must be 'subgraph' or 'induced', got {mode!r}")
    return mode == "induced"


def deck_for(x: AnyGraph) -> Deck:
    return colored_deck(x) if isinstance(x, ColoredGraph) else deck(x)
