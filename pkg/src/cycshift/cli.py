"""Command line interface.

Commands: psymbol, class, neighbors, component, diameter, path, scan, verify.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hypoplactic, stalactic, sylvester, taiga, verify
from .handles import HANDLES, handle
from .shiftgraph import component, diameter, distance, diameter_scan, evaluation_graph, export, neighbors
from .words import (
    DEFAULT_MAX_CLASS,
    DEFAULT_MAX_TOTAL,
    LimitExceededError,
    evaluation,
    format_word,
    parse_word,
)


def _rank_of(args, word) -> int:
    if args.rank is not None:
        return args.rank
    return max(word, default=0)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_psymbol(args) -> int:
    h = handle(args.monoid)
    word = parse_word(args.word)
    if args.format == "json":
        payload = {"monoid": h.name, "key": h.key_of(word), "object": h.json_of(word)}
        _emit(args, json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit(args, f"key: {h.key_of(word)}\n{h.display(word)}")
    return 0


def cmd_class(args) -> int:
    h = handle(args.monoid)
    word = parse_word(args.word)
    rank = _rank_of(args, word)
    members = sorted(h.class_of(word, rank, args.max_total))
    if len(members) > args.max_class:
        raise LimitExceededError(
            f"class has {len(members)} members, over the --max-class bound {args.max_class}"
        )
    _emit(args, "\n".join(format_word(w) for w in members))
    return 0


def cmd_neighbors(args) -> int:
    h = handle(args.monoid)
    word = parse_word(args.word)
    rank = _rank_of(args, word)
    keys = neighbors(h, word, rank, args.max_total)
    _emit(args, "\n".join(sorted(keys)))
    return 0


def cmd_component(args) -> int:
    h = handle(args.monoid)
    word = parse_word(args.word)
    rank = _rank_of(args, word)
    g = component(h, word, rank, args.max_total)
    if args.format == "text":
        lines = [f"{len(g.vertices)} vertices, {g.edge_count} edges, diameter {diameter(g)}"]
        lines.extend(g.vertices)
        _emit(args, "\n".join(lines))
    else:
        _emit(args, export(g, args.format))
    return 0


def cmd_diameter(args) -> int:
    h = handle(args.monoid)
    word = parse_word(args.word)
    rank = _rank_of(args, word)
    g = component(h, word, rank, args.max_total)
    _emit(args, str(diameter(g)))
    return 0


def cmd_path(args) -> int:
    h = handle(args.monoid)
    w1, w2 = parse_word(args.word1), parse_word(args.word2)
    rank = max(_rank_of(args, w1), _rank_of(args, w2))
    if sorted(w1) != sorted(w2):
        raise ValueError("the two words must share an evaluation")
    lines = []
    builders = {
        "hypo": lambda: hypoplactic.shift_path(
            hypoplactic.quasi_ribbon(w1), hypoplactic.quasi_ribbon(w2)
        ),
        "sylv": lambda: sylvester.shift_path(
            sylvester.right_bst(w1), sylvester.right_bst(w2)
        ),
        "taig": lambda: taiga.shift_path(taiga.mult_bst(w1), taiga.mult_bst(w2)),
        "stal": lambda: stalactic.shift_path(
            stalactic.stalactic_tableau(w1), stalactic.stalactic_tableau(w2)
        ),
    }
    if args.monoid in builders:
        path = builders[args.monoid]()
        lines.append(f"constructive path: {path.steps} steps")
        for uv, vu in path.step_words():
            lines.append(f"  {format_word(uv)} ~ {format_word(vu)}")
    else:
        lines.append("constructive path: not available for this monoid (shortest paths only)")
    g = evaluation_graph(h, evaluation(w1, rank), args.max_total)
    d = distance(g, h.key_of(w1), h.key_of(w2))
    lines.append(f"shortest path: {d} steps")
    _emit(args, "\n".join(lines))
    return 0


def cmd_scan(args) -> int:
    h = handle(args.monoid)
    report = diameter_scan(
        h, args.rank, args.max_total, distinct_up_to_relabeling=args.distinct
    )
    _emit(args, report.render())
    return 0


def cmd_verify(args) -> int:
    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    ok = verify.run(numbers)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycshift",
        description="plactic-like monoids and their cyclic shift graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word_args=("--word",)):
        p.add_argument("--monoid", required=True, choices=sorted(HANDLES))
        for wa in word_args:
            p.add_argument(wa, required=True)
        p.add_argument("--rank", type=int, default=None)
        p.add_argument("--max-total", type=int, default=DEFAULT_MAX_TOTAL, dest="max_total")
        p.add_argument("--max-class", type=int, default=DEFAULT_MAX_CLASS, dest="max_class")
        p.add_argument("--format", choices=("text", "dot", "json"), default="text")
        p.add_argument("--out", default=None)

    common(sub.add_parser("psymbol", help="print the canonical key and a drawing"))
    common(sub.add_parser("class", help="list every word of the congruence class"))
    common(sub.add_parser("neighbors", help="canonical keys one shift away"))
    common(sub.add_parser("component", help="the connected component of the class"))
    common(sub.add_parser("diameter", help="diameter of the component"))
    common(sub.add_parser("path", help="constructive and shortest paths"), ("--word1", "--word2"))

    scan = sub.add_parser("scan", help="per-evaluation component census")
    scan.add_argument("--monoid", required=True, choices=sorted(HANDLES))
    scan.add_argument("--rank", type=int, required=True)
    scan.add_argument("--max-total", type=int, default=DEFAULT_MAX_TOTAL, dest="max_total")
    scan.add_argument("--distinct", action="store_true",
                      help="one evaluation per count multiset (relabeling symmetry)")
    scan.add_argument("--out", default=None)

    ver = sub.add_parser("verify", help="run the acceptance suite")
    ver.add_argument("--criteria", default=None, help="comma separated subset, e.g. 1,3,7")
    return parser


COMMANDS = {
    "psymbol": cmd_psymbol,
    "class": cmd_class,
    "neighbors": cmd_neighbors,
    "component": cmd_component,
    "diameter": cmd_diameter,
    "path": cmd_path,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, LimitExceededError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
