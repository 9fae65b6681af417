"""Command line front end: ``kocay <subcommand> ...``.

Exit status 0 on success, 1 when a checked identity fails, 2 on bad input.
Reports print as ``key=value`` lines, or as one JSON object with ``--json``
(keys: inputs, values, status, ledger, timing).  ``timing`` is null unless
``--timing`` is given, so that identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .colored import two_form
from .counting import Deck, count, deck_for
from .covering import cover_count, kocay_check
from .errors import ConsistencyError, InputError
from .formats import deck_from_cards, describe, parse_any, parse_graph6, read_deck
from .graph import Graph
from .reconstruct import reconstruct_path_count, tree_descent
from .sweep import SUITES, run_sweep


def _arg(name: str, parse, text: str):
    try:
        return parse(text)
    except InputError as exc:
        raise InputError(f"{name}: {exc}") from None


def _seq(name: str, text: str) -> list:
    # coloured records contain commas, so they are separated by '|'
    parts = text.split("|") if "n=" in text else text.split(",")
    parts = [p.strip() for p in parts if p.strip()]
    if not parts:
        raise InputError(f"{name}: empty sequence")
    return [_arg(name, parse_any, p) for p in parts]


def _ordering(text: Optional[str]):
    if text is None:
        return None
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            u, v = item.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise InputError(f"--ordering: bad edge {item!r}") from None
    return out


def _load_deck(name: str, path: str) -> Deck:
    try:
        return read_deck(path)
    except OSError as exc:
        raise InputError(f"{name}: cannot read {path}: {exc.strerror}") from None
    except InputError as exc:
        raise InputError(f"{name}: {exc}") from None


def _report(inputs: dict, values: dict, status: str = "ok", ledger=()) -> dict:
    return {"inputs": inputs, "values": values, "status": status,
            "ledger": list(ledger), "timing": None}


def cmd_count(args) -> tuple[dict, int]:
    host = _arg("--host", parse_any, args.host)
    pattern = _arg("--pattern", parse_any, args.pattern)
    if type(host) is not type(pattern):
        raise InputError("--pattern: must be the same kind (graph6 or coloured) as --host")
    mode = "induced" if args.induced else "subgraph"
    val = count(host, pattern, mode)
    return _report({"host": args.host, "pattern": args.pattern, "mode": mode}, {"count": val}), 0


def cmd_deck(args) -> tuple[dict, int]:
    g = _arg("--graph", parse_any, args.graph)
    if args.colored and isinstance(g, Graph):
        g = two_form(g)
    if g.n < 2:
        raise InputError("--graph: needs at least 2 vertices")
    d = deck_for(g)
    cards = [{"card": describe(cf), "multiplicity": m}
             for cf, m in sorted(d.multiplicities().items())]
    return _report({"graph": args.graph, "colored": bool(args.colored)},
                   {"n": d.n, "cards": cards}), 0


def cmd_cover(args) -> tuple[dict, int]:
    target = _arg("--target", parse_any, args.target)
    seq = _seq("--seq", args.seq)
    if any(type(f) is not type(target) for f in seq):
        raise InputError("--seq: members must be the same kind as --target")
    return _report({"target": args.target, "seq": args.seq},
                   {"cover_count": cover_count(seq, target)}), 0


def cmd_kocay(args) -> tuple[dict, int]:
    g = _arg("--graph", parse_any, args.graph)
    seq = _seq("--seq", args.seq)
    if any(type(f) is not type(g) for f in seq):
        raise InputError("--seq: members must be the same kind as --graph")
    rep = kocay_check(g, seq)
    ledger = [{"class": describe(t.cls), "cover": t.cover, "count": t.count} for t in rep.terms]
    status = "ok" if rep.equal else "mismatch"
    return _report({"graph": args.graph, "seq": args.seq},
                   {"LHS": rep.lhs, "RHS": rep.rhs, "equal": rep.equal},
                   status, ledger), (0 if rep.equal else 1)


def cmd_path(args) -> tuple[dict, int]:
    d = _load_deck("--deck", args.deck)
    if type(d) is not Deck:
        raise InputError("--deck: path reconstruction needs graph6 cards")
    rep = reconstruct_path_count(d)
    return _report({"deck": [describe(c) for c in d.cards]},
                   {"value": rep.value, "target": rep.target},
                   rep.status.value, rep.ledger), 0


def cmd_tree(args) -> tuple[dict, int]:
    d = _load_deck("--deck", args.deck)
    if type(d) is Deck:
        d = deck_from_cards([two_form(c.graph()) for c in d.cards])
    tree = _arg("--tree", parse_graph6, args.tree)
    rep = tree_descent(d, tree, _ordering(args.ordering))
    out = rep.to_dict()
    values = dict(out["values"], target=out["target"], coefficients=out["coefficients"],
                  ordering=out["ordering"])
    return _report({"deck": [describe(c) for c in d.cards], "tree": args.tree,
                    "ordering": args.ordering}, values, out["status"], out["ledger"]), 0


def cmd_sweep(args) -> tuple[dict, int]:
    res = run_sweep(args.suite, args.n)
    values = {"passed": res.passed, "failed": res.failed,
              "first_counterexample": res.first_counterexample}
    values.update(res.notes)
    status = "ok" if res.failed == 0 else "mismatch"
    return _report({"suite": args.suite, "n": args.n}, values, status), (0 if res.failed == 0 else 1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kocay", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="count copies of a pattern")
    s.add_argument("--host", required=True, help="graph6 or coloured record")
    s.add_argument("--pattern", required=True)
    s.add_argument("--induced", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("deck", parents=[common], help="list the deck of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--colored", action="store_true", help="deck of the two-form")
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("cover", parents=[common], help="covering count c(F, X)")
    s.add_argument("--target", required=True)
    s.add_argument("--seq", required=True,
                   help="comma-separated graph6, or '|'-separated coloured records")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("kocay", parents=[common], help="check the Kocay identity on a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--seq", required=True)
    s.set_defaults(func=cmd_kocay)

    s = sub.add_parser("path", parents=[common], help="Hamiltonian path count from a deck")
    s.add_argument("--deck", required=True, help="file with one graph6 card per line")
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("tree", parents=[common], help="tree count combination from a deck")
    s.add_argument("--deck", required=True)
    s.add_argument("--tree", required=True, help="graph6 tree")
    s.add_argument("--ordering", help="edge order such as 0-1,1-2,1-3")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("sweep", parents=[common], help="exhaustive identity sweep")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.set_defaults(func=cmd_sweep)
    return p


def _text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)) or value is None:
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = [f"{k}={_text(v)}" for k, v in report["values"].items()]
    lines.append(f"status={report['status']}")
    for i, step in enumerate(report["ledger"]):
        lines.append(f"ledger.{i}={_text(step)}")
    if report["timing"] is not None:
        lines.append(f"timing={_text(report['timing'])}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    sys.stdout.write(render(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
