"""Deck-only reconstruction pipelines.

* :func:`reconstruct_path_count` recovers the number of Hamiltonian paths
  from the deck by covering with two near-perfect matchings.
* :func:`edge_identity_check` evaluates the single-pair recolouring identity
  on an explicit coloured host.
* :func:`tree_descent` chains that identity along a tree, turning red edges
  blue one at a time, to recover ``count(G, T)`` or a sum/difference with
  ``count(complement(G), T)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional, Sequence

from .colored import (
    ColoredGraph,
    blue_graph,
    colored_pair_orbit_size,
    delete_pair,
    recolor,
    red_graph,
)
from .counting import (
    ColoredDeck,
    Deck,
    _count,
    colored_kelly_count_from_deck,
    count_subgraph,
    kelly_count_from_deck,
    swap_deck_colors,
)
from .covering import union_classes, spanning_subgraph_count
from .errors import ConsistencyError, InputError, PreconditionError
from .formats import describe
from .graph import (
    Graph,
    Pair,
    canonical_form,
    complement,
    induced_subgraph,
    is_connected,
    is_tree,
    matching,
    path,
)
from . import _engine


class Status(str, enum.Enum):
    EXACT = "exact"
    SUM_COMBO = "sum_combo"
    DIFFERENCE_COMBO = "difference_combo"
    COMBO_ONLY = "combo_only"


@dataclass(frozen=True)
class ReconstructionReport:
    """Result of a deck-only pipeline with the arithmetic that produced it.

    ``values`` maps names to reconstructed integers: ``"G"`` is the count in
    the deck's graph, ``"complement"`` the count in its complement, ``"sum"``
    and ``"difference"`` the combinations returned when only those are
    determined, ``"K"`` the right side of ``a*x_G + b*x_complement = K``.
    """

    target: str
    values: dict
    status: Status
    coefficients: Optional[tuple[int, int]] = None
    ledger: tuple[dict, ...] = ()
    ordering: Optional[tuple[Pair, ...]] = None

    @property
    def value(self) -> int:
        """The single reconstructed number for exact reports."""
        if self.status is not Status.EXACT:
            raise ValueError(f"report status is {self.status.value}; no single value")
        return self.values["G"]

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "values": dict(self.values),
            "status": self.status.value,
            "coefficients": list(self.coefficients) if self.coefficients else None,
            "ledger": [dict(step) for step in self.ledger],
            "ordering": [list(e) for e in self.ordering] if self.ordering else None,
        }


# ---------------------------------------------------------------------------
# single-pair identity

@dataclass(frozen=True)
class EdgeIdentityReport:
    lhs: int
    rhs: int
    orbit: int
    count_deleted: int
    count_blue: int
    count_red: int
    blue_factor: int
    red_factor: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def edge_identity_check(gp: ColoredGraph, h: ColoredGraph, e) -> EdgeIdentityReport:
    """Evaluate, on the coloured host ``gp``,

        count(gp, h - e) * |orbit of e under Aut(h - e)|
            == count(gp, h_blue) * count(h_blue, h - e)
             + count(gp, h_red) * count(h_red, h - e)

    where ``h_blue``/``h_red`` are ``h`` with ``e`` coloured blue/red.  The
    factors ``count(h_x, h - e)`` count copies on the same vertex set.
    """
    if not isinstance(gp, ColoredGraph) or not isinstance(h, ColoredGraph):
        raise InputError("edge_identity_check needs coloured graphs")
    hm = delete_pair(h, e)
    hb = recolor(hm, e, "blue")
    hr = recolor(hm, e, "red")
    orbit = colored_pair_orbit_size(hm, e)
    cm, cb, cr = _count(gp, hm, False), _count(gp, hb, False), _count(gp, hr, False)
    fb, fr = _count(hb, hm, False), _count(hr, hm, False)
    return EdgeIdentityReport(cm * orbit, cb * fb + cr * fr, orbit, cm, cb, cr, fb, fr)


# ---------------------------------------------------------------------------
# Hamiltonian paths

def _matching_count(d: Deck, k: int, ledger: list) -> int:
    m = matching(k)
    if m.n < d.n:
        val = kelly_count_from_deck(d, m)
        how = "kelly"
    else:
        val = spanning_subgraph_count(d, m)
        how = "spanning"
    ledger.append({"step": "factor", "pattern": describe(m), "method": how, "value": val})
    return val


def reconstruct_path_count(d: Deck, n: Optional[int] = None) -> ReconstructionReport:
    """count(G, P_n) from the deck of an n-vertex graph G, n > 4.

    Cover by ``(ceil((n-1)/2) K_2, floor((n-1)/2) K_2)``.  The product of the
    two matching counts, minus every union class on fewer than n vertices
    (Kelly) and every disconnected spanning union class, leaves
    ``cover_count(F, P_n) * count(G, P_n)``: a connected spanning union of
    two matchings has n-1 edges and maximum degree 2, so it is P_n.
    """
    if type(d) is not Deck:
        raise InputError(f"expected a plain Deck, got {type(d).__name__}")
    if n is None:
        n = d.n
    if n != d.n:
        raise PreconditionError(f"n={n} but the deck has {d.n} cards")
    if n <= 4:
        raise PreconditionError("path reconstruction needs n > 4")
    big, small = n // 2, (n - 1) // 2
    seq = (matching(big), matching(small))
    ledger: list[dict] = []
    product = _matching_count(d, big, ledger) * _matching_count(d, small, ledger)
    ledger.append({"step": "product", "value": product})

    path_cf = canonical_form(path(n))
    path_cover = None
    remainder = product
    for cf, c in union_classes(seq, n):
        x = cf.graph()
        if cf.n < n:
            k = kelly_count_from_deck(d, x)
            how = "kelly"
        elif not is_connected(x):
            k = spanning_subgraph_count(d, x)
            how = "spanning"
        else:
            if cf != path_cf:
                raise ConsistencyError(f"unexpected connected spanning union {describe(x)}")
            path_cover = c
            continue
        remainder -= c * k
        ledger.append({"step": "subtract", "class": describe(x), "method": how,
                       "cover": c, "count": k})
    if path_cover is None:
        raise ConsistencyError("P_n is not among the union classes")
    ledger.append({"step": "divide", "remainder": remainder, "cover": path_cover})
    value, r = divmod(remainder, path_cover)
    if r or value < 0:
        raise ConsistencyError(f"remainder {remainder} not a non-negative multiple of {path_cover}")
    return ReconstructionReport(
        target=f"count(G, P_{n})",
        values={"G": value},
        status=Status.EXACT,
        ledger=tuple(ledger),
    )


# ---------------------------------------------------------------------------
# trees

@dataclass(frozen=True)
class BlueDescentSequence:
    """Colourings of a tree: stage i has the first i edges of ``ordering``
    blue and the rest red; non-tree pairs are uncoloured."""

    tree: Graph
    ordering: tuple[Pair, ...]
    stages: tuple[ColoredGraph, ...] = field(repr=False)


def _check_tree(t: Graph) -> None:
    if not isinstance(t, Graph):
        raise InputError(f"expected a Graph tree, got {type(t).__name__}")
    if not is_tree(t):
        raise InputError(f"{describe(t)} is not a tree")


def default_edge_ordering(t: Graph) -> tuple[Pair, ...]:
    """Depth-first from the vertex at canonical position 0, each parent edge
    before the edges below it; siblings ordered by the canonical code of the
    subtree they root, then by canonical position."""
    _check_tree(t)
    _, perm = _engine.canonical_labeling(t.n, t.layers)
    pos = {v: i for i, v in enumerate(perm)}
    nbrs = {v: [] for v in range(t.n)}
    for u, v in t.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def below(v: int, parent: int) -> list[int]:
        out, stack = [], [(v, parent)]
        while stack:
            x, p = stack.pop()
            out.append(x)
            stack.extend((y, x) for y in nbrs[x] if y != p)
        return out

    order: list[Pair] = []

    def visit(v: int, parent: int) -> None:
        kids = [c for c in nbrs[v] if c != parent]
        kids.sort(key=lambda c: (canonical_form(induced_subgraph(t, below(c, v))), pos[c]))
        for c in kids:
            order.append(_engine.norm_pair(v, c))
            visit(c, v)

    visit(perm[0], -1)
    return tuple(order)


def blue_descent_sequence(t: Graph, ordering: Optional[Sequence] = None) -> BlueDescentSequence:
    _check_tree(t)
    if ordering is None:
        order = default_edge_ordering(t)
    else:
        order = tuple(_engine.norm_pair(u, v) for u, v in ordering)
        if len(order) != len(t.edges) or set(order) != t.edges:
            raise InputError("ordering must list every tree edge exactly once")
    stages = tuple(
        ColoredGraph(t.n, order[i:], order[:i]) for i in range(len(order) + 1)
    )
    return BlueDescentSequence(t, order, stages)


@dataclass(frozen=True)
class _Chain:
    a: int
    b: int
    k: int
    steps: tuple[dict, ...]


def _run_chain(seq: BlueDescentSequence, forest_count: Callable[[ColoredGraph], int]) -> _Chain:
    """Eliminate the intermediate stage counts.

    Step i relates stages i and i+1 through the forest ``stage_i - e``:
        m_i * x_i + m'_i * x_{i+1} = count(G', stage_i - e) * |orbit of e|
    Carrying ``a*x_0 + c*x_i = K`` along gives ``a*x_0 + b*x_last = K``.
    """
    a, c, k = 1, -1, 0
    steps = []
    for i, e in enumerate(seq.ordering):
        cur, nxt = seq.stages[i], seq.stages[i + 1]
        forest = delete_pair(cur, e)
        orbit = colored_pair_orbit_size(forest, e)
        fc = forest_count(forest)
        known = fc * orbit
        m_red = _count(cur, forest, False)
        m_blue = _count(nxt, forest, False)
        a, c, k = m_red * a, -c * m_blue, m_red * k - c * known
        steps.append({"step": i + 1, "edge": list(e), "forest": describe(forest),
                      "forest_count": fc, "orbit": orbit, "known": known,
                      "red_factor": m_red, "blue_factor": m_blue})
    g = gcd(a, c)
    if k % g:
        raise ConsistencyError(f"combination {a}, {c}, {k} has no integral solution")
    return _Chain(a // g, c // g, k // g, tuple(steps))


def descent_combination(gp: ColoredGraph, t: Graph, ordering: Optional[Sequence] = None) -> tuple[int, int, int]:
    """``(a, b, K)`` of the descent chain with every forest counted directly
    in ``gp`` rather than from a deck."""
    if not isinstance(gp, ColoredGraph):
        raise InputError("descent_combination needs a coloured host")
    seq = blue_descent_sequence(t, ordering)
    ch = _run_chain(seq, lambda f: _count(gp, f, False))
    return ch.a, ch.b, ch.k


def tree_descent(
    d: ColoredDeck,
    t: Graph,
    ordering: Optional[Sequence] = None,
    complement_trick: bool = True,
) -> ReconstructionReport:
    """count(G, T), or its sum/difference with count(complement(G), T), from
    the coloured deck of two_form(G).

    Trees with fewer than n vertices are counted directly by Kelly (all-red
    T in G, all-blue T in the complement).  For spanning trees the descent
    chain gives ``a*x_G + b*x_comp = K`` with (a, b) depending only on T and
    the ordering; rerunning it on the colour-swapped deck gives
    ``b*x_G + a*x_comp = K'``.  Unless ``a == +-b`` the pair is solved.
    """
    if type(d) is not ColoredDeck:
        raise InputError(f"expected a ColoredDeck, got {type(d).__name__}")
    _check_tree(t)
    n = d.n
    if t.n > n:
        raise PreconditionError(f"tree has {t.n} vertices; deck is of order {n}")
    target = f"count(G, {describe(t)})"
    if t.n < n:
        x0 = colored_kelly_count_from_deck(d, red_graph(t))
        x1 = colored_kelly_count_from_deck(d, blue_graph(t))
        return ReconstructionReport(
            target, {"G": x0, "complement": x1}, Status.EXACT,
            ledger=({"step": "kelly", "G": x0, "complement": x1},),
        )

    seq = blue_descent_sequence(t, ordering)
    ch = _run_chain(seq, lambda f: spanning_subgraph_count(d, f))
    a, b, k = ch.a, ch.b, ch.k
    ledger = [dict(s, chain="G") for s in ch.steps]
    ledger.append({"step": "combination", "chain": "G", "a": a, "b": b, "K": k})
    if not complement_trick:
        return ReconstructionReport(target, {"K": k}, Status.COMBO_ONLY, (a, b),
                                    tuple(ledger), seq.ordering)

    sw = _run_chain(seq, lambda f: spanning_subgraph_count(swap_deck_colors(d), f))
    ledger.extend(dict(s, chain="complement") for s in sw.steps)
    ledger.append({"step": "combination", "chain": "complement", "a": sw.a, "b": sw.b, "K": sw.k})
    if (sw.a, sw.b) != (a, b):
        raise ConsistencyError("descent coefficients changed between the two chains")
    k2 = sw.k  # b*x_G + a*x_comp = k2

    if a == b or a == -b:
        if a == b:
            status, name, expected_k2 = Status.SUM_COMBO, "sum", k
        else:
            status, name, expected_k2 = Status.DIFFERENCE_COMBO, "difference", -k
        if k2 != expected_k2:
            raise ConsistencyError(f"complement chain gave {k2}, expected {expected_k2}")
        val, r = divmod(k, a)
        if r:
            raise ConsistencyError(f"{k} not divisible by {a}")
        values = {name: val, "K": k}
    else:
        det = a * a - b * b
        x0, r0 = divmod(a * k - b * k2, det)
        x1, r1 = divmod(a * k2 - b * k, det)
        if r0 or r1 or x0 < 0 or x1 < 0:
            raise ConsistencyError("2x2 solve did not give non-negative integers")
        status = Status.EXACT
        values = {"G": x0, "complement": x1, "K": k}
    return ReconstructionReport(target, values, status, (a, b), tuple(ledger), seq.ordering)


def tree_combo_oracle(g: Graph, t: Graph) -> tuple[int, int]:
    """``(count(g, t), count(complement(g), t))`` by direct counting."""
    _check_tree(t)
    return count_subgraph(g, t), count_subgraph(complement(g), t)
