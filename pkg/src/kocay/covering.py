"""Covering counts and the Kocay identities.

A *cover* of ``x`` by a sequence ``(F_1, ..., F_k)`` is a sequence of labelled
copies ``(G_1, ..., G_k)`` of the ``F_i`` inside ``x`` whose union (vertex
sets and, per colour, edge sets) is exactly ``x``.  ``cover_count`` counts
them.  Counting the cartesian product of copies of the ``F_i`` in a host by
the class of their union gives

    prod_i count(G, F_i) == sum_X cover_count(F, X) * count(G, X)

which :func:`kocay_check` evaluates on explicit graphs and which the deck-only
sums below exploit.

Everything here is written once against :class:`CoveringSystem`; the two
instances are plain graphs and 2-coloured graphs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from operator import mul
from typing import Callable, Sequence

from . import _engine
from .colored import ColoredGraph, colored_canonical_form
from .counting import AnyGraph, ColoredDeck, Deck, _count, kelly_count
from .errors import ConsistencyError, InputError, PreconditionError
from .graph import CanonicalForm, Graph, canonical_form


@dataclass(frozen=True)
class CoveringSystem:
    """The objects a covering count ranges over.

    Congruence is (colour-preserving) isomorphism, decided by ``canonical``;
    union is the per-layer union of labelled sub-objects of a common host.
    """

    name: str
    graph_type: type
    deck_type: type
    canonical: Callable[[AnyGraph], CanonicalForm]

    def build(self, n: int, layers) -> AnyGraph:
        return self.graph_type.from_layers(n, layers)


PLAIN = CoveringSystem("plain", Graph, Deck, canonical_form)
COLORED = CoveringSystem("colored", ColoredGraph, ColoredDeck, colored_canonical_form)


def system_of(x) -> CoveringSystem:
    if isinstance(x, ColoredGraph) or isinstance(x, ColoredDeck):
        return COLORED
    if isinstance(x, Graph) or isinstance(x, Deck):
        return PLAIN
    raise InputError(f"no covering system for {type(x).__name__}")


def _check_seq(f_seq: Sequence[AnyGraph], kind: CoveringSystem | None = None) -> tuple[AnyGraph, ...]:
    seq = tuple(f_seq)
    if not seq:
        raise InputError("cover sequence must have at least one member")
    kind = kind or system_of(seq[0])
    for f in seq:
        if type(f) is not kind.graph_type:
            raise InputError(
                f"cover sequence mixes kinds: expected {kind.graph_type.__name__}, "
                f"got {type(f).__name__}"
            )
    return seq


@dataclass(frozen=True)
class LabeledCopy:
    """A copy of some pattern inside ``host``: a vertex subset plus, per
    colour layer, an edge subset.  May contain isolated vertices."""

    vertices: frozenset[int]
    edges: tuple[frozenset, ...]
    host: AnyGraph = field(compare=False, repr=False)

    def graph(self) -> AnyGraph:
        k, layers = _engine.restrict(self.host.n, self.edges, sorted(self.vertices))
        return type(self.host).from_layers(k, layers)


def _copy_from_masks(host: AnyGraph, vm: int, em: int) -> LabeledCopy:
    nl = len(host.layers)
    sets = [set() for _ in range(nl)]
    while em:
        low = em & -em
        idx, lab = divmod(low.bit_length() - 1, nl)
        sets[lab].add(_engine.PAIRS[idx])
        em ^= low
    verts = frozenset(v for v in range(host.n) if vm >> v & 1)
    return LabeledCopy(verts, tuple(frozenset(s) for s in sets), host)


def enumerate_copies(host: AnyGraph, f: AnyGraph) -> list[LabeledCopy]:
    """All distinct labelled sub-objects of ``host`` congruent to ``f``."""
    if type(host) is not type(f):
        raise InputError(f"kind mismatch: host {type(host).__name__}, pattern {type(f).__name__}")
    return [_copy_from_masks(host, vm, em) for vm, em in _engine.copy_masks(host, f)]


def _union_states(host: AnyGraph, seq: tuple[AnyGraph, ...]) -> dict[tuple[int, int], int]:
    """Number of tuples of copies (one per member) for each union sub-object."""
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    for f in seq:
        copies = _engine.copy_masks(host, f)
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (vm, em), c in states.items():
            for cv, ce in copies:
                nxt[(vm | cv, em | ce)] += c
        states = nxt
        if not states:
            break
    return states


@lru_cache(maxsize=None)
def _cover_count(seq: tuple[AnyGraph, ...], x: AnyGraph) -> int:
    target = _engine.full_masks(x.n, x.layers)
    for f in seq:
        if f.n > x.n:
            return 0
    return _union_states(x, seq).get(target, 0)


def cover_count(f_seq: Sequence[AnyGraph], x: AnyGraph) -> int:
    """c(F, x): sequences of labelled copies of the members inside ``x`` whose
    union is exactly ``x``."""
    seq = _check_seq(f_seq, system_of(x))
    return _cover_count(seq, x)


def _mask_graph(kind: CoveringSystem, host: AnyGraph, vm: int, em: int) -> AnyGraph:
    k, layers = _engine.mask_to_layers(vm, em, len(host.layers))
    return kind.build(k, layers)


@dataclass(frozen=True)
class KocayTerm:
    cls: CanonicalForm
    cover: int
    count: int


@dataclass(frozen=True)
class KocayReport:
    lhs: int
    rhs: int
    terms: tuple[KocayTerm, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def kocay_check(g: AnyGraph, f_seq: Sequence[AnyGraph]) -> KocayReport:
    """Evaluate both sides of the Kocay identity on ``g``.

    The left side is the product of member counts.  The right side groups
    the labelled unions occurring in ``g`` by class ``X`` and sums
    ``cover_count(F, X) * count(g, X)``, each factor computed on its own.
    Members may have any order, including more vertices than ``g``.
    """
    kind = system_of(g)
    seq = _check_seq(f_seq, kind)
    lhs = reduce(mul, (_count(g, f, False) for f in seq), 1)
    classes = set()
    if lhs:
        for vm, em in _union_states(g, seq):
            classes.add(kind.canonical(_mask_graph(kind, g, vm, em)))
    terms = []
    for cf in sorted(classes):
        x = cf.graph()
        terms.append(KocayTerm(cf, _cover_count(seq, x), _count(g, x, False)))
    rhs = sum(t.cover * t.count for t in terms)
    return KocayReport(lhs, rhs, tuple(terms))


# ---------------------------------------------------------------------------
# union classes of abstract placements (deck-free)

def _placements(kind: CoveringSystem, y: AnyGraph, f: AnyGraph, max_order: int):
    """Every union of ``y`` with one placement of ``f`` having at most
    ``max_order`` vertices.  New vertices are numbered after ``y``'s in order
    of first use, so each partial injection into ``V(y)`` is tried once."""
    yn, fn = y.n, f.n
    max_new = max_order - yn
    if max_new < 0:
        return
    owner = {p: lab for lab, layer in enumerate(y.layers) for p in layer}
    fpairs = [(u, v, lab) for lab, layer in enumerate(f.layers) for u, v in layer]
    img = [0] * fn

    def rec(i: int, used: int, new: int):
        if i == fn:
            n = yn + new
            sets = [set(layer) for layer in y.layers]
            for u, v, lab in fpairs:
                p = _engine.norm_pair(img[u], img[v])
                if owner.get(p, lab) != lab:
                    return
                sets[lab].add(p)
            yield kind.build(n, tuple(frozenset(s) for s in sets))
            return
        for t in range(yn):
            if not used >> t & 1:
                img[i] = t
                yield from rec(i + 1, used | 1 << t, new)
        if new < max_new:
            img[i] = yn + new
            yield from rec(i + 1, used, new + 1)

    yield from rec(0, 0, 0)


@lru_cache(maxsize=None)
def _union_classes(seq: tuple[AnyGraph, ...], max_order: int) -> tuple[tuple[CanonicalForm, int], ...]:
    kind = system_of(seq[0])
    first = seq[0]
    if first.n > max_order:
        return ()
    current = {kind.canonical(first)}
    for f in seq[1:]:
        nxt = set()
        for cf in current:
            for u in _placements(kind, cf.graph(), f, max_order):
                nxt.add(kind.canonical(u))
        current = nxt
    out = []
    for cf in sorted(current):
        c = _cover_count(seq, cf.graph())
        if c <= 0:
            raise ConsistencyError(f"generated union class {cf} has no cover")
        out.append((cf, c))
    return tuple(out)


def union_classes(f_seq: Sequence[AnyGraph], max_order: int) -> list[tuple[CanonicalForm, int]]:
    """Classes ``X`` with ``cover_count(F, X) > 0`` and at most ``max_order``
    vertices, paired with that cover count.  Independent of any host."""
    return list(_union_classes(_check_seq(f_seq), max_order))


# ---------------------------------------------------------------------------
# deck-only sums

def _deck_seq(d: Deck, f_seq) -> tuple[CoveringSystem, tuple[AnyGraph, ...]]:
    kind = system_of(d)
    if type(d) is not kind.deck_type:
        raise InputError(f"unsupported deck type {type(d).__name__}")
    seq = _check_seq(f_seq, kind)
    for f in seq:
        if f.n >= d.n:
            raise PreconditionError(
                f"cover member on {f.n} vertices; deck-only sums need fewer than {d.n}"
            )
    return kind, seq


@dataclass(frozen=True)
class OrderNSum:
    value: int
    product: int
    lower_terms: tuple[tuple[CanonicalForm, int, int], ...]


def order_n_breakdown(d: Deck, f_seq: Sequence[AnyGraph]) -> OrderNSum:
    """:func:`order_n_sum` together with the product and the subtracted
    lower-order terms ``(class, cover count, Kelly count)``."""
    _, seq = _deck_seq(d, f_seq)
    product = reduce(mul, (kelly_count(d, f) for f in seq), 1)
    terms = []
    lower = 0
    for cf, c in _union_classes(seq, d.n - 1):
        k = kelly_count(d, cf.graph())
        terms.append((cf, c, k))
        lower += c * k
    value = product - lower
    if value < 0:
        raise ConsistencyError(f"order-n sum came out negative ({value}); deck is inconsistent")
    return OrderNSum(value, product, tuple(terms))


def order_n_sum(d: Deck, f_seq: Sequence[AnyGraph]) -> int:
    """Sum over order-n classes X of cover_count(F, X) * count(G, X), from the deck.

    Every member must have fewer than n vertices.  The product of Kelly
    counts minus the contribution of every union class on fewer than n
    vertices leaves exactly the order-n part.
    """
    return order_n_breakdown(d, f_seq).value


def _components(kind: CoveringSystem, x: AnyGraph) -> tuple[AnyGraph, ...]:
    out = []
    for vs in _engine.components(x.n, x.layers):
        k, layers = _engine.restrict(x.n, x.layers, vs)
        out.append(kind.build(k, layers))
    return tuple(out)


def spanning_subgraph_count(d: Deck, dprime: AnyGraph) -> int:
    """count(G, dprime) for a disconnected ``dprime`` on n vertices, from the deck.

    Any order-n union of copies of dprime's components must use disjoint
    vertex sets, so it is a copy of dprime and order_n_sum over the
    components equals cover_count(components, dprime) * count(G, dprime).
    """
    kind = system_of(d)
    if type(dprime) is not kind.graph_type:
        raise InputError(f"expected {kind.graph_type.__name__}, got {type(dprime).__name__}")
    if dprime.n != d.n:
        raise PreconditionError(f"spanning pattern must have {d.n} vertices, got {dprime.n}")
    comps = _components(kind, dprime)
    if len(comps) < 2:
        raise PreconditionError("spanning pattern must be disconnected")
    total = order_n_sum(d, comps)
    c = _cover_count(comps, dprime)
    q, r = divmod(total, c)
    if r:
        raise ConsistencyError(f"order-n sum {total} not divisible by cover count {c}")
    return q


def _is_connected(x: AnyGraph) -> bool:
    return len(_engine.components(x.n, x.layers)) == 1


def spanning_disconnected_sum(d: Deck, f_seq: Sequence[AnyGraph]) -> int:
    """Sum over disconnected spanning classes X of cover_count(F, X) * count(G, X)."""
    _, seq = _deck_seq(d, f_seq)
    total = 0
    for cf, c in _union_classes(seq, d.n):
        if cf.n == d.n:
            x = cf.graph()
            if not _is_connected(x):
                total += c * spanning_subgraph_count(d, x)
    return total


# ---------------------------------------------------------------------------
# the same sums evaluated on the graph itself (verification)

def _spanning_tuples(g: AnyGraph, seq) -> dict[tuple[int, int], int]:
    full = (1 << g.n) - 1
    return {k: c for k, c in _union_states(g, seq).items() if k[0] == full}


def direct_order_n_sum(g: AnyGraph, f_seq: Sequence[AnyGraph]) -> int:
    """Tuples of copies in ``g`` whose union touches every vertex."""
    seq = _check_seq(f_seq, system_of(g))
    return sum(_spanning_tuples(g, seq).values())


def direct_spanning_disconnected_sum(g: AnyGraph, f_seq: Sequence[AnyGraph]) -> int:
    kind = system_of(g)
    seq = _check_seq(f_seq, kind)
    total = 0
    for (vm, em), c in _spanning_tuples(g, seq).items():
        if not _is_connected(_mask_graph(kind, g, vm, em)):
            total += c
    return total
