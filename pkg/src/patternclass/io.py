"""Graph text formats, family/ordering parsing, and the shipped small-graph corpus.

Two graph formats are read:

* edge list: first non-comment line is ``n``, then one ``u v`` per line,
  ``#`` starts a comment;
* graph6, one graph per line (the format of nauty's ``geng``).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import FamilyParseError, GraphParseError, PatternError
from .graph import UndirectedGraph, VertexOrdering
from .patterns import (
    PatternFamily,
    parse_pattern,
)


class GraphFormat(str, enum.Enum):
    EDGE_LIST = "edgelist"
    GRAPH6 = "graph6"


@dataclass(frozen=True)
class GraphDocument:
    graph: UndirectedGraph
    source_format: GraphFormat
    name: str | None = None


# -- edge lists -------------------------------------------------------------

def parse_edge_list(text: str, name: str | None = None) -> GraphDocument:
    n = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(x) for x in fields]
        except ValueError:
            raise GraphParseError(f"expected integers, got {raw.strip()!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphParseError("first line must be the vertex count n >= 0", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1} in edge {u} {v}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u} {v} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if n is None:
        raise GraphParseError("empty input: missing vertex count")
    return GraphDocument(UndirectedGraph(n, edges), GraphFormat.EDGE_LIST, name)


def emit_edge_list(g: UndirectedGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# -- graph6 -----------------------------------------------------------------
# Written here rather than imported: the codec is short, and the only
# library offering it would be a heavy runtime dependency.

def _g6_size(data: bytes, lineno: int | None) -> tuple[int, int]:
    if not data:
        raise GraphParseError("empty graph6 string", lineno)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63), 4
    if len(data) >= 8 and data[1] == 126:
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    raise GraphParseError("truncated graph6 size header", lineno)


def decode_graph6(line: str, lineno: int | None = None) -> UndirectedGraph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphParseError(f"invalid graph6 character in {s!r}", lineno)
    n, off = _g6_size(data, lineno)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", lineno)
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise GraphParseError("graph6 padding bits must be zero", lineno)
    return UndirectedGraph(n, edges)


def encode_graph6(g: UndirectedGraph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    adj = g.adjacency
    bits = [1 if i in adj[j] else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [sum(b << (5 - i) for i, b in enumerate(bits[x:x + 6])) + 63 for x in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def parse_graph6_lines(text: str) -> list[GraphDocument]:
    docs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        docs.append(GraphDocument(decode_graph6(raw, lineno), GraphFormat.GRAPH6))
    if not docs:
        raise GraphParseError("no graph6 lines found")
    return docs


_EDGE_LIST_RE = re.compile(r"^\s*(#.*)?$|^\s*\d+(\s+\d+)?\s*(#.*)?$")


def detect_format(text: str) -> GraphFormat:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and all(_EDGE_LIST_RE.match(ln) for ln in lines):
        return GraphFormat.EDGE_LIST
    return GraphFormat.GRAPH6


def parse_graphs(text: str, fmt: GraphFormat | str | None = None) -> list[GraphDocument]:
    """All graphs in the text: one for an edge list, one per line for graph6."""
    fmt = detect_format(text) if fmt in (None, "auto") else GraphFormat(fmt)
    if fmt is GraphFormat.EDGE_LIST:
        return [parse_edge_list(text)]
    return parse_graph6_lines(text)


def parse_graph(text: str, fmt: GraphFormat | str | None = None) -> GraphDocument:
    docs = parse_graphs(text, fmt)
    if len(docs) != 1:
        raise GraphParseError(f"expected one graph, found {len(docs)}")
    return docs[0]


def emit_graph(g: UndirectedGraph, fmt: GraphFormat | str = GraphFormat.EDGE_LIST) -> str:
    fmt = GraphFormat(fmt)
    return emit_edge_list(g) if fmt is GraphFormat.EDGE_LIST else encode_graph6(g) + "\n"


# -- families, orderings --------------------------------------------------

def parse_family(text: str) -> PatternFamily:
    """Comma-separated indices or names; inline patterns are separated by ``|``."""
    sep = "|" if ";" in text else ","
    tokens = [t for t in text.split(sep) if t.strip()]
    if not tokens:
        raise FamilyParseError("empty family")
    out = []
    for t in tokens:
        try:
            out.append(parse_pattern(t))
        except PatternError as exc:
            raise FamilyParseError(str(exc)) from None
    return PatternFamily(out)


def parse_ordering(text: str, n: int | None = None) -> VertexOrdering:
    try:
        items = [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise ValueError(f"ordering must be comma-separated integers, got {text!r}") from None
    o = VertexOrdering(items)
    if n is not None and len(o) != n:
        raise ValueError(f"ordering has {len(o)} vertices, graph has {n}")
    return o


# -- corpus -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _corpus() -> tuple[UndirectedGraph, ...]:
    text = resources.files("patternclass").joinpath("data/small_graphs.g6").read_text()
    return tuple(d.graph for d in parse_graph6_lines(text))


def small_graphs(n: int | None = None, max_n: int | None = None) -> list[UndirectedGraph]:
    """Shipped non-isomorphic graphs on 1..7 vertices, one per isomorphism class."""
    return [g for g in _corpus() if (n is None or g.n == n) and (max_n is None or g.n <= max_n)]
