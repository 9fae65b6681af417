"""Search kernels shared by plain and 2-coloured graphs.

Both graph kinds expose ``n`` and ``layers``: a tuple of edge sets, one per
colour (one layer for plain graphs, ``(red, blue)`` for coloured ones).  A
pair carries label 0 when it is in no layer and ``i + 1`` when it is in
layer ``i``.  Everything here works on that representation so that the
canonical form, automorphism and embedding code is written once.

Vertex sets are bit masks.  Edge sets of labelled sub-objects are bit masks
too, with bit ``pair_index(u, v) * L + (label - 1)`` for ``L`` layers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator, NamedTuple, Protocol, Sequence

Pair = tuple[int, int]
Layers = tuple[frozenset, ...]

MAX_N = 10

# pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
PAIRS: tuple[Pair, ...] = tuple((u, v) for v in range(MAX_N) for u in range(v))


class Raw(NamedTuple):
    n: int
    layers: Layers


class PairGraph(Protocol):
    """What the shared kernels need from a graph object."""

    n: int

    @property
    def layers(self) -> Layers: ...

    @classmethod
    def from_layers(cls, n: int, layers: Layers) -> "PairGraph": ...


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def norm_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@lru_cache(maxsize=None)
def label_matrix(n: int, layers: Layers) -> tuple[tuple[int, ...], ...]:
    mat = [[0] * n for _ in range(n)]
    for lab, layer in enumerate(layers, 1):
        for u, v in layer:
            mat[u][v] = mat[v][u] = lab
    return tuple(tuple(row) for row in mat)


# ---------------------------------------------------------------------------
# canonical labelling

@lru_cache(maxsize=None)
def twin_classes(n: int, layers: Layers) -> tuple[int, ...]:
    """Representative of each vertex under "swapping these two is an automorphism".

    The transposition relation is transitive (conjugating one such swap by
    another gives a third), so this is an equivalence relation.
    """
    mat = label_matrix(n, layers)
    rep = list(range(n))
    for u in range(n):
        if rep[u] != u:
            continue
        ru = mat[u]
        for w in range(u + 1, n):
            if rep[w] != w:
                continue
            rw = mat[w]
            if all(ru[x] == rw[x] for x in range(n) if x != u and x != w):
                rep[w] = u
    return tuple(rep)


@lru_cache(maxsize=None)
def canonical_labeling(n: int, layers: Layers) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, perm)`` with ``code`` minimal over all relabellings.

    ``code`` reads the pair labels in graph6 column order as base ``L + 1``
    digits, most significant first.  ``perm[k]`` is the original vertex placed
    at canonical position ``k``.  The digits contributed by position ``k`` only
    depend on the first ``k + 1`` placed vertices, so partial labellings whose
    prefix is not minimal are discarded level by level.  Interchangeable
    (twin) vertices are only tried once per level.
    """
    base = len(layers) + 1
    mat = label_matrix(n, layers)
    twins = twin_classes(n, layers)
    states: list[tuple[tuple[int, ...], int, int]] = [((), 0, 0)]
    for _ in range(n):
        best = -1
        nxt: list[tuple[tuple[int, ...], int, int]] = []
        for perm, used, code in states:
            tried = 0
            for v in range(n):
                if used >> v & 1:
                    continue
                t = 1 << twins[v]
                if tried & t:
                    continue
                tried |= t
                row = mat[v]
                c = code
                for j in perm:
                    c = c * base + row[j]
                if best < 0 or c < best:
                    best = c
                    nxt = [(perm + (v,), used | 1 << v, c)]
                elif c == best:
                    nxt.append((perm + (v,), used | 1 << v, c))
        states = nxt
    perm, _, code = states[0]
    return code, perm


def layers_from_code(n: int, code: int, nlayers: int) -> Layers:
    base = nlayers + 1
    npairs = n * (n - 1) // 2
    sets: list[set[Pair]] = [set() for _ in range(nlayers)]
    for idx in range(npairs - 1, -1, -1):
        code, digit = divmod(code, base)
        if digit:
            sets[digit - 1].add(PAIRS[idx])
    if code:
        raise ValueError("code out of range for vertex count")
    return tuple(frozenset(s) for s in sets)


def relabel(layers: Layers, mapping: Sequence[int]) -> Layers:
    """Apply ``old -> mapping[old]`` to every pair."""
    return tuple(
        frozenset(norm_pair(mapping[u], mapping[v]) for u, v in layer)
        for layer in layers
    )


def canonical_layers(n: int, layers: Layers) -> Layers:
    code, _ = canonical_labeling(n, layers)
    return layers_from_code(n, code, len(layers))


# ---------------------------------------------------------------------------
# automorphisms

def _signature(mat, v: int, nlab: int) -> tuple[int, ...]:
    counts = [0] * (nlab + 1)
    for lab in mat[v]:
        counts[lab] += 1
    return tuple(counts)


def _aut_search(n: int, layers: Layers, collect: bool):
    mat = label_matrix(n, layers)
    nlab = len(layers)
    sig = [_signature(mat, v, nlab) for v in range(n)]
    img = [0] * n
    found: list[tuple[int, ...]] = []
    count = 0

    def extend(i: int, used: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            if collect:
                found.append(tuple(img))
            return
        row = mat[i]
        for c in range(n):
            if used >> c & 1 or sig[c] != sig[i]:
                continue
            crow = mat[c]
            if all(row[j] == crow[img[j]] for j in range(i)):
                img[i] = c
                extend(i + 1, used | 1 << c)

    extend(0, 0)
    return found if collect else count


@lru_cache(maxsize=None)
def automorphisms(n: int, layers: Layers) -> tuple[tuple[int, ...], ...]:
    return tuple(_aut_search(n, layers, collect=True))


@lru_cache(maxsize=None)
def aut_count(n: int, layers: Layers) -> int:
    active = active_vertices(n, layers)
    iso = n - len(active)
    if iso == 0:
        return _aut_search(n, layers, collect=False)
    k, core = restrict(n, layers, active)
    return _aut_search(k, core, collect=False) * factorial(iso)


def pair_orbit(n: int, layers: Layers, pair: Pair) -> frozenset[Pair]:
    u, v = pair
    return frozenset(norm_pair(p[u], p[v]) for p in automorphisms(n, layers))


# ---------------------------------------------------------------------------
# structure helpers

def active_vertices(n: int, layers: Layers) -> tuple[int, ...]:
    seen = set()
    for layer in layers:
        for u, v in layer:
            seen.add(u)
            seen.add(v)
    return tuple(sorted(seen))


def restrict(n: int, layers: Layers, vertices: Sequence[int]) -> tuple[int, Layers]:
    """Sub-object on ``vertices`` (relabelled in increasing order), keeping
    only pairs with both ends inside."""
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    out = tuple(
        frozenset(norm_pair(pos[u], pos[v]) for u, v in layer if u in pos and v in pos)
        for layer in layers
    )
    return len(vs), out


def components(n: int, layers: Layers) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for layer in layers:
        for u, v in layer:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [tuple(g) for _, g in sorted(groups.items())]


def mask_to_layers(vmask: int, emask: int, nlayers: int) -> tuple[int, Layers]:
    """Turn a labelled sub-object of some host into a standalone graph."""
    vs = [v for v in range(vmask.bit_length()) if vmask >> v & 1]
    pos = {v: i for i, v in enumerate(vs)}
    sets: list[set[Pair]] = [set() for _ in range(nlayers)]
    while emask:
        low = emask & -emask
        bit = low.bit_length() - 1
        emask ^= low
        idx, lab = divmod(bit, nlayers)
        u, v = PAIRS[idx]
        sets[lab].add(norm_pair(pos[u], pos[v]))
    return len(vs), tuple(frozenset(s) for s in sets)


def full_masks(n: int, layers: Layers) -> tuple[int, int]:
    nl = len(layers)
    emask = 0
    for lab, layer in enumerate(layers):
        for u, v in layer:
            emask |= 1 << (pair_index(u, v) * nl + lab)
    return (1 << n) - 1, emask


# ---------------------------------------------------------------------------
# embeddings

@lru_cache(maxsize=None)
def _host_masks(n: int, layers: Layers) -> tuple[tuple[int, ...], ...]:
    """``masks[lab][v]``: vertices joined to ``v`` by a pair of label ``lab``."""
    mat = label_matrix(n, layers)
    out = []
    for lab in range(len(layers) + 1):
        out.append(tuple(
            sum(1 << w for w in range(n) if w != v and mat[v][w] == lab)
            for v in range(n)
        ))
    return tuple(out)


@lru_cache(maxsize=None)
def _plan(n: int, layers: Layers, induced: bool):
    """Placement order for pattern vertices and the constraints at each step.

    For non-induced embeddings isolated pattern vertices are left out of the
    order; they are accounted for combinatorially.
    """
    mat = label_matrix(n, layers)
    todo = list(range(n)) if induced else list(active_vertices(n, layers))
    iso = n - len(todo)
    deg = [sum(1 for x in mat[v] if x) for v in range(n)]
    order: list[int] = []
    while todo:
        def key(v: int) -> tuple[int, int, int]:
            links = sum(1 for u in order if mat[u][v])
            return (-links, -deg[v], v)
        v = min(todo, key=key)
        todo.remove(v)
        order.append(v)
    cons = []
    for k, v in enumerate(order):
        cons.append(tuple(
            (j, mat[u][v]) for j, u in enumerate(order[:k]) if induced or mat[u][v]
        ))
    return tuple(order), tuple(cons), iso


def count_injections_core(host: PairGraph, pattern: PairGraph, induced: bool) -> tuple[int, int, int]:
    """Count label-preserving injections of the planned pattern vertices.

    Returns ``(count, placed, isolated)``.  In non-induced mode ``isolated`` is
    the number of pattern vertices with no labelled pair, which were skipped.
    """
    order, cons, iso = _plan(pattern.n, pattern.layers, induced)
    m = len(order)
    hn = host.n
    if m + iso > hn:
        return 0, m, iso
    if m == 0:
        return 1, 0, iso
    masks = _host_masks(hn, host.layers)
    full = (1 << hn) - 1
    img = [0] * m
    last = m - 1

    def rec(k: int, used: int) -> int:
        avail = full & ~used
        for j, lab in cons[k]:
            avail &= masks[lab][img[j]]
        if k == last:
            return avail.bit_count()
        total = 0
        while avail:
            low = avail & -avail
            img[k] = low.bit_length() - 1
            total += rec(k + 1, used | low)
            avail ^= low
        return total

    return rec(0, 0), m, iso


def iter_injections(host: PairGraph, pattern: PairGraph, induced: bool = False) -> Iterator[dict[int, int]]:
    """Yield planned-vertex injections as ``{pattern vertex: host vertex}``."""
    order, cons, _ = _plan(pattern.n, pattern.layers, induced)
    m = len(order)
    if m == 0:
        yield {}
        return
    masks = _host_masks(host.n, host.layers)
    full = (1 << host.n) - 1
    img = [0] * m

    def rec(k: int, used: int):
        avail = full & ~used
        for j, lab in cons[k]:
            avail &= masks[lab][img[j]]
        while avail:
            low = avail & -avail
            img[k] = low.bit_length() - 1
            if k == m - 1:
                yield dict(zip(order, img))
            else:
                yield from rec(k + 1, used | low)
            avail ^= low

    yield from rec(0, 0)


def count_copies(host: PairGraph, pattern: PairGraph, induced: bool = False) -> int:
    """Number of distinct labelled copies of ``pattern`` inside ``host``."""
    inj, m, iso = count_injections_core(host, pattern, induced)
    if inj == 0:
        return 0
    if induced:
        q, r = divmod(inj, aut_count(pattern.n, pattern.layers))
    else:
        k, core = restrict(pattern.n, pattern.layers, active_vertices(pattern.n, pattern.layers))
        q, r = divmod(inj, aut_count(k, core))
        q *= comb(host.n - m, iso)
    if r:
        raise AssertionError("injection count not divisible by automorphism count")
    return q


@lru_cache(maxsize=None)
def _copy_masks_cached(hn: int, hlayers: Layers, pn: int, players: Layers) -> tuple[tuple[int, int], ...]:
    host = Raw(hn, hlayers)
    pat = Raw(pn, players)
    nl = len(hlayers)
    pmat = label_matrix(pn, players)
    active = active_vertices(pn, players)
    iso = pn - len(active)
    if len(active) + iso > hn:
        return ()
    pedges = [(u, v, pmat[u][v] - 1) for u, v in PAIRS[: pn * (pn - 1) // 2] if pmat[u][v]]
    cores = set()
    for phi in iter_injections(host, pat):
        vm = 0
        for x in phi.values():
            vm |= 1 << x
        em = 0
        for u, v, lab in pedges:
            em |= 1 << (pair_index(phi[u], phi[v]) * nl + lab)
        cores.add((vm, em))
    if not iso:
        return tuple(sorted(cores))
    out = set()
    for vm, em in cores:
        rest = [x for x in range(hn) if not vm >> x & 1]
        for extra in combinations(rest, iso):
            m = vm
            for x in extra:
                m |= 1 << x
            out.add((m, em))
    return tuple(sorted(out))


def copy_masks(host: PairGraph, pattern: PairGraph) -> tuple[tuple[int, int], ...]:
    """All labelled copies of ``pattern`` in ``host`` as ``(vertex mask, edge mask)``."""
    return _copy_masks_cached(host.n, host.layers, pattern.n, pattern.layers)
