"""Command-line interface.

Exit status: 0 for a positive or complete answer, 1 for a negative one
(non-member, violation found, no coloring), 2 for usage and parse errors.
When the graph input holds several graph6 lines every graph is processed
in order; the status is 1 if any answer is negative.

Environment: ``PATTERNCLASS_FORMAT`` sets the default output format and
``PATTERNCLASS_ORACLE_LIMIT`` the default oracle bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from .classes import RECOGNIZABLE, ClassId
from .coloring import DEFAULT_COLOR_LIMIT, LineWord, ab_colorable_oracle, chromatic_number, mirsky_chromatic
from .errors import FamilyParseError, GraphParseError, InvalidCertificateError, OracleLimitError, PatternError
from .families import scan
from .graph import UndirectedGraph
from .io import parse_family, parse_graphs, parse_ordering
from .ordered import default_oracle_limit, find_violation, oracle_membership
from .patterns import CATALOG, EXTRA_PATTERNS, format_pattern, pattern_name
from .recognizers import classify_all, recognize
from .search import SearchKind, multi_sweep

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

# (positive?, json-able record, text line) for one graph
Outcome = tuple[bool, dict, str]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the global flags appear before or after the subcommand
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--graph", metavar="FILE|-", default=argparse.SUPPRESS,
                        help="edge list or graph6 file; '-' reads stdin")
    common.add_argument("--limit", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="largest n the brute-force oracles accept")

    parser = _Parser(prog="patternclass", parents=[common],
                     description="Graph classes defined by forbidden ordered patterns.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("patterns", parents=[common], help="list the 27 three-node patterns")
    p = sub.add_parser("families", parents=[common], help="list the split-minimal families")
    p.add_argument("--order", choices=("listing", "ascending"), default="listing",
                   help="scan order of the enumeration")

    p = sub.add_parser("check", parents=[common], help="does an ordering avoid a family?")
    p.add_argument("--ordering", required=True, help="comma-separated vertex ids")
    p.add_argument("--family", required=True)

    p = sub.add_parser("search", parents=[common], help="run a graph search")
    p.add_argument("--kind", default="lexbfs", help=", ".join(k.value for k in SearchKind))
    p.add_argument("--start", type=int)
    p.add_argument("--sweeps", type=int, default=1)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("recognize", parents=[common], help="recognize one class with a certificate")
    p.add_argument("--class", dest="cls", required=True, help=", ".join(c.value for c in RECOGNIZABLE))
    p.add_argument("--complement", action="store_true")
    p.add_argument("--family", help="override the canonical family")

    sub.add_parser("classify", parents=[common], help="recognize every class and co-class")

    p = sub.add_parser("oracle", parents=[common], help="brute-force membership for a family")
    p.add_argument("--family", required=True)

    p = sub.add_parser("color", parents=[common], help="(a,b)-coloring for a word over E/N")
    p.add_argument("--word", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic number")
    p.add_argument("--via-orderings", action="store_true",
                   help="use the ordering characterization (bounded by --limit)")
    return parser


# -- per-graph handlers ---------------------------------------------------

def _check(g: UndirectedGraph, args) -> Outcome:
    fam = parse_family(args.family)
    order = parse_ordering(args.ordering, g.n)
    w = find_violation(g, order, fam)
    if w is None:
        return True, {"avoids": True, "witness": None}, "avoids"
    d = w.to_dict()
    return False, {"avoids": False, "witness": d}, (
        f"violation: pattern {d['pattern']} at positions {d['positions']} on vertices {d['vertices']}"
    )


def _search(g: UndirectedGraph, args) -> Outcome:
    res = multi_sweep(g, args.kind, args.sweeps, start=args.start, trace=args.trace)
    rec = {"kind": res.kind.value, "ordering": res.ordering.tolist()}
    text = " ".join(map(str, res.ordering.tolist()))
    if res.layers is not None:
        rec["layers"] = list(res.layers)
    if args.trace:
        rec["trace"] = [[v, list(lab) if isinstance(lab, tuple) else lab] for v, lab in res.trace]
        text += "\n" + "\n".join(f"  {v}: {lab}" for v, lab in res.trace)
    return True, rec, text


def _result_text(r) -> str:
    head = f"{r.class_id}: {r.verdict}"
    if r.certificate is not None:
        return f"{head}; certificate {' '.join(map(str, r.certificate.tolist()))}"
    if r.witness is not None:
        d = r.witness.to_dict()
        return f"{head}; witness pattern {d['pattern']} at positions {d['positions']} on vertices {d['vertices']}"
    return head


def _recognize(g: UndirectedGraph, args) -> Outcome:
    fam = None if args.family is None else parse_family(args.family)
    r = recognize(g, args.cls, complemented=args.complement, family=fam)
    return r.is_member, r.to_dict(), _result_text(r)


def _classify(g: UndirectedGraph, args) -> Outcome:
    results = classify_all(g)
    rows = [r.to_dict() for r in results.values()]
    width = max(len(str(c)) for c in results)
    text = "\n".join(f"{str(c):<{width}}  {r.verdict}" for c, r in results.items())
    return True, {"classes": rows}, text


def _oracle(g: UndirectedGraph, args) -> Outcome:
    fam = parse_family(args.family)
    o = oracle_membership(g, fam, args.limit)
    if o is None:
        return False, {"member": False, "ordering": None}, "non-member: every ordering contains the family"
    return True, {"member": True, "ordering": o.tolist()}, "member; ordering " + " ".join(map(str, o.tolist()))


def _color(g: UndirectedGraph, args) -> Outcome:
    w = LineWord.parse(args.word)
    col = ab_colorable_oracle(g, w, args.limit if args.limit_given else DEFAULT_COLOR_LIMIT)
    if col is None:
        return False, {"word": str(w), "coloring": None}, "none"
    parts = col.to_dict()["parts"]
    text = "\n".join(f"part {i} ({p['kind']}): {' '.join(map(str, p['vertices']))}" for i, p in enumerate(parts))
    return True, {"word": str(w), "coloring": parts}, text


def _chromatic(g: UndirectedGraph, args) -> Outcome:
    k = mirsky_chromatic(g, args.limit) if args.via_orderings else chromatic_number(g)
    return True, {"chromatic_number": k}, str(k)


_GRAPH_COMMANDS: dict[str, Callable[[UndirectedGraph, argparse.Namespace], Outcome]] = {
    "check": _check,
    "search": _search,
    "recognize": _recognize,
    "classify": _classify,
    "oracle": _oracle,
    "color": _color,
    "chromatic": _chromatic,
}


# -- catalogue listings -------------------------------------------------

def _patterns_listing() -> tuple[list[dict], str]:
    rows = [{"index": i, "name": pattern_name(p), "letters": p.letters, "syntax": format_pattern(p)}
            for i, p in enumerate(CATALOG)]
    rows += [{"index": None, "name": n, "letters": p.letters, "syntax": format_pattern(p)}
             for n, p in EXTRA_PATTERNS.items()]
    text = "\n".join(
        f"{'' if r['index'] is None else r['index']:>3}  {r['letters']:<6}  {r['name']:<22}  {r['syntax']}" for r in rows
    )
    return rows, text


def _families_listing(order: str) -> tuple[list[dict], str]:
    rows = []
    for pos, (bits, e, complemented) in enumerate(scan(order), start=1):
        # the ascending scan may pick the complement of a catalog representative
        comp = e.label.complemented ^ complemented
        label = "trivial" if e.label.is_trivial else str(ClassId(e.label.class_id, comp))
        rows.append({
            "position": pos,
            "index": e.index,
            "family": list(bits.indices()),
            "bits": bits.bits,
            "patterns": [pattern_name(p) for p in bits.family()],
            "label": label,
            "convention": e.label.convention.value,
        })
    text = "\n".join(
        f"{r['index']:>2}  {str(r['family']):<16}  {r['label']:<28}  {r['convention']:<16}  {', '.join(r['patterns'])}"
        for r in rows
    )
    return rows, text


# -- dispatch -------------------------------------------------------------

def _read_graph_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii", errors="replace") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read graph file {path!r}: {exc.strerror}") from None


def _emit(fmt: str, payload, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    """Parse ``argv``, run the command, write to ``out``/``err``; return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    fmt = getattr(args, "format", None) or os.environ.get("PATTERNCLASS_FORMAT", "text")
    if fmt not in ("text", "json"):
        err.write(f"patternclass: unsupported output format {fmt!r}\n")
        return EXIT_USAGE
    args.limit = getattr(args, "limit", None)
    args.limit_given = args.limit is not None
    if args.limit is None:
        try:
            args.limit = default_oracle_limit()
        except ValueError:
            err.write("patternclass: PATTERNCLASS_ORACLE_LIMIT must be an integer\n")
            return EXIT_USAGE
    graph_path = getattr(args, "graph", None)

    try:
        if args.command == "patterns":
            rows, text = _patterns_listing()
            _emit(fmt, rows, text, out)
            return EXIT_OK
        if args.command == "families":
            rows, text = _families_listing(args.order)
            _emit(fmt, rows, text, out)
            return EXIT_OK
        if graph_path is None:
            raise _UsageError(f"patternclass {args.command}: --graph FILE|- is required")
        docs = parse_graphs(_read_graph_text(graph_path))
        handler = _GRAPH_COMMANDS[args.command]
        outcomes = [handler(d.graph, args) for d in docs]
    except (_UsageError, GraphParseError, FamilyParseError, PatternError, OracleLimitError,
            InvalidCertificateError, ValueError) as exc:
        err.write(f"patternclass: {exc}\n")
        return EXIT_USAGE

    if len(outcomes) == 1:
        ok, rec, text = outcomes[0]
        _emit(fmt, rec, text, out)
    else:
        payload = [dict(rec, graph=i) for i, (_, rec, _) in enumerate(outcomes)]
        text = "\n".join(f"[{i}] {t}" for i, (_, _, t) in enumerate(outcomes))
        _emit(fmt, payload, text, out)
    return EXIT_OK if all(ok for ok, _, _ in outcomes) else EXIT_NEGATIVE


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
