"""graph6 and a one-line text format for 2-coloured graphs.

graph6 (plain graphs, n <= 62 here capped at MAX_N): one header byte
``chr(n + 63)``, then the upper-triangle adjacency bits in column order
(0,1), (0,2), (1,2), (0,3), ... packed six to a byte, big-endian within the
sextet, zero padded, each sextet offset by 63.

Coloured graphs are written as ``n=4; R=0-1,1-2; B=0-2``.  Whitespace is
ignored and either list may be empty.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from ._engine import MAX_N, PAIRS
from .colored import ColoredGraph
from .counting import ColoredDeck, Deck, canonical_of
from .errors import Graph6Error, InputError
from .graph import Graph


def serialize_graph6(g: Graph) -> bytes:
    bits = [1 if p in g.edges else 0 for p in PAIRS[: g.n * (g.n - 1) // 2]]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out)


def to_graph6(g: Graph) -> str:
    return serialize_graph6(g).decode("ascii")


def parse_graph6(data: Union[bytes, str]) -> Graph:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 record", 0)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte:#04x} outside 0x3F-0x7E", i)
    n = data[0] - 63
    if n > 62:
        raise Graph6Error(f"extended-size header not supported (max n = {MAX_N})", 0)
    if not 1 <= n <= MAX_N:
        raise Graph6Error(f"vertex count {n} outside [1, {MAX_N}]", 0)
    npairs = n * (n - 1) // 2
    need = -(-npairs // 6)
    body = data[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}",
            min(len(data), 1 + need),
        )
    edges = []
    for i, byte in enumerate(body):
        val = byte - 63
        for j in range(6):
            k = 6 * i + j
            if val >> (5 - j) & 1:
                if k >= npairs:
                    raise Graph6Error("non-zero padding bit", 1 + i)
                edges.append(PAIRS[k])
    return Graph(n, edges)


def format_colored(h: ColoredGraph) -> str:
    def pairs(ps):
        return ",".join(f"{u}-{v}" for u, v in sorted(ps))

    return f"n={h.n}; R={pairs(h.red)}; B={pairs(h.blue)}"


_FIELD = re.compile(r"^(n|R|B)=(.*)$")


def parse_colored(text: str) -> ColoredGraph:
    compact = re.sub(r"\s+", "", text)
    fields: dict[str, str] = {}
    for part in compact.split(";"):
        if not part:
            continue
        m = _FIELD.match(part)
        if not m:
            raise InputError(f"coloured record: cannot parse field {part!r}")
        key, val = m.groups()
        if key in fields:
            raise InputError(f"coloured record: field {key} given twice")
        fields[key] = val
    if "n" not in fields:
        raise InputError("coloured record: missing n=")
    try:
        n = int(fields["n"])
    except ValueError:
        raise InputError(f"coloured record: bad vertex count {fields['n']!r}") from None

    def pairs(key: str):
        raw = fields.get(key, "")
        out = []
        for item in filter(None, raw.split(",")):
            m = re.fullmatch(r"(\d+)-(\d+)", item)
            if not m:
                raise InputError(f"coloured record: bad pair {item!r} in {key}")
            out.append((int(m[1]), int(m[2])))
        return out

    return ColoredGraph(n, pairs("R"), pairs("B"))


def is_colored_text(text: str) -> bool:
    return "n=" in text.replace(" ", "")


def parse_any(text: str) -> Union[Graph, ColoredGraph]:
    """A coloured record if it looks like one, otherwise graph6."""
    text = text.strip()
    return parse_colored(text) if is_colored_text(text) else parse_graph6(text)


def describe(x) -> str:
    """Stable one-line text for a graph, coloured graph, or canonical form."""
    if hasattr(x, "code"):
        x = x.graph()
    if isinstance(x, ColoredGraph):
        return format_colored(x)
    return to_graph6(x)


def read_deck(path: Union[str, Path]) -> Deck:
    """One card per line (graph6 or coloured records; blank lines and ``#``
    comments skipped).  Card order is irrelevant."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    cards = [parse_any(ln) for ln in lines if ln and not ln.startswith("#")]
    return deck_from_cards(cards)


def deck_from_cards(cards) -> Deck:
    if not cards:
        raise InputError("deck file has no cards")
    kinds = {type(c) for c in cards}
    if len(kinds) > 1:
        raise InputError("deck mixes graph6 and coloured cards")
    forms = tuple(canonical_of(c) for c in cards)
    return ColoredDeck(forms) if kinds == {ColoredGraph} else Deck(forms)


def write_deck(d: Deck) -> str:
    return "".join(describe(c) + "\n" for c in d.cards)
