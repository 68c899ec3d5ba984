"""Graph searches producing vertex orderings.

All searches break unspecified ties toward the least vertex id and, once
a component is exhausted, restart at the least unvisited vertex.
LexBFS and LexBFS+ run on the partition-refinement kernel.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .graph import UndirectedGraph, VertexOrdering


class SearchKind(str, enum.Enum):
    GENERIC = "generic"
    BFS = "bfs"
    DFS = "dfs"
    LEXBFS = "lexbfs"
    LEXBFS_PLUS = "lexbfs+"
    MNS = "mns"
    MDS = "mds"

    @classmethod
    def parse(cls, text: str) -> "SearchKind":
        t = text.strip().lower().replace("_", "").replace("plus", "+")
        for k in cls:
            if k.value == t:
                return k
        raise ValueError(f"unknown search kind {text!r}; choose from {', '.join(k.value for k in cls)}")


@dataclass(frozen=True)
class SearchResult:
    ordering: VertexOrdering
    kind: SearchKind
    layers: tuple[int, ...] | None = None
    trace: tuple[tuple[int, object], ...] = field(default=(), repr=False)


def _check_start(g: UndirectedGraph, start: int | None) -> None:
    if start is not None and not 0 <= start < g.n:
        raise ValueError(f"start vertex {start} not in 0..{g.n - 1}")


def lexbfs_order(g: UndirectedGraph, priority: np.ndarray | None = None) -> np.ndarray:
    """LexBFS ordering; ties go to the least ``priority`` (vertex id by default)."""
    if priority is None:
        return kernels.lexbfs(g.indptr, g.indices, g.n)
    # relabel so that rank order equals id order, run, map back
    rank = np.empty(g.n, dtype=np.int64)
    rank[np.argsort(priority, kind="stable")] = np.arange(g.n)
    h = g.relabel(rank)
    inv = np.empty(g.n, dtype=np.int64)
    inv[rank] = np.arange(g.n)
    return inv[kernels.lexbfs(h.indptr, h.indices, h.n)]


def _lex_trace(g: UndirectedGraph, order: np.ndarray) -> tuple:
    pos = np.empty(g.n, dtype=np.int64)
    pos[order] = np.arange(g.n)
    out = []
    for v in order.tolist():
        nb = g.neighbor_array(v)
        earlier = sorted((int(pos[w]) for w in nb if pos[w] < pos[v]))
        out.append((v, tuple(g.n - x for x in earlier)))
    return tuple(out)


def _generic(g: UndirectedGraph, start: int | None, key) -> tuple[list[int], list]:
    """Connected-greedy search: pick the eligible vertex minimizing ``key(v, visited)``."""
    n = g.n
    adj = g.adjacency
    visited = [False] * n
    frontier: set[int] = set()
    order, trace = [], []
    nxt_root = 0
    for _ in range(n):
        if frontier:
            v = min(frontier, key=lambda u: key(u, visited))
        else:
            if start is not None and not visited[start]:
                cands = [start]
            else:
                cands = [u for u in range(nxt_root, n) if not visited[u]]
            v = min(cands, key=lambda u: key(u, visited))
        trace.append((v, key(v, visited)))
        visited[v] = True
        frontier.discard(v)
        order.append(v)
        for w in adj[v]:
            if not visited[w]:
                frontier.add(w)
        while nxt_root < n and visited[nxt_root]:
            nxt_root += 1
    return order, trace


def _mds(g: UndirectedGraph, start: int | None):
    n = g.n
    remaining = g.degrees().astype(np.int64).tolist()
    adj = g.adjacency
    visited = [False] * n
    frontier: set[int] = set()
    order, trace = [], []
    for _ in range(n):
        pool = frontier if frontier else [u for u in range(n) if not visited[u]]
        if not frontier and start is not None and not visited[start] and not order:
            pool = [start]
        v = min(pool, key=lambda u: (-remaining[u], u))
        trace.append((v, remaining[v]))
        visited[v] = True
        frontier.discard(v)
        order.append(v)
        for w in adj[v]:
            remaining[w] -= 1
            if not visited[w]:
                frontier.add(w)
    return order, trace


def _bfs(g: UndirectedGraph, start: int | None):
    n = g.n
    visited = [False] * n
    layers = [0] * n
    order = []
    roots = ([start] if start is not None else []) + list(range(n))
    for r in roots:
        if visited[r]:
            continue
        visited[r] = True
        q = deque([r])
        while q:
            u = q.popleft()
            order.append(u)
            for w in g.neighbor_array(u).tolist():
                if not visited[w]:
                    visited[w] = True
                    layers[w] = layers[u] + 1
                    q.append(w)
    return order, layers


def _dfs(g: UndirectedGraph, start: int | None):
    n = g.n
    visited = [False] * n
    order, trace = [], []
    roots = ([start] if start is not None else []) + list(range(n))
    for r in roots:
        if visited[r]:
            continue
        visited[r] = True
        order.append(r)
        trace.append((r, 0))
        stack = [(r, iter(g.neighbor_array(r).tolist()))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    order.append(w)
                    trace.append((w, len(stack)))
                    stack.append((w, iter(g.neighbor_array(w).tolist())))
                    break
            else:
                stack.pop()
    return order, trace


def _mns(g: UndirectedGraph, start: int | None):
    n = g.n
    adj = g.adjacency
    label: list[set[int]] = [set() for _ in range(n)]
    unvisited = set(range(n))
    order, trace = [], []
    for step in range(n):
        if step == 0 and start is not None:
            v = start
        else:
            maximal = [u for u in unvisited if not any(label[u] < label[w] for w in unvisited)]
            v = min(maximal)
        trace.append((v, tuple(sorted(label[v]))))
        unvisited.discard(v)
        order.append(v)
        for w in adj[v]:
            if w in unvisited:
                label[w].add(step)
    return order, trace


def run_search(
    g: UndirectedGraph,
    kind: SearchKind | str,
    start: int | None = None,
    prior: VertexOrdering | None = None,
    trace: bool = False,
) -> SearchResult:
    """Run one search.  ``prior`` is required by LexBFS+ and ignored otherwise."""
    kind = SearchKind.parse(kind) if isinstance(kind, str) else kind
    _check_start(g, start)
    layers = None
    tr: tuple = ()
    if kind is SearchKind.LEXBFS:
        if start is None:
            order = lexbfs_order(g)
        else:
            pri = np.arange(g.n, dtype=np.int64)
            pri[start] = -1
            order = lexbfs_order(g, pri)
        if trace:
            tr = _lex_trace(g, order)
    elif kind is SearchKind.LEXBFS_PLUS:
        if prior is None:
            raise ValueError("LexBFS+ needs a prior ordering")
        if len(prior) != g.n:
            raise ValueError(f"prior ordering has {len(prior)} vertices, graph has {g.n}")
        # latest in the prior ordering wins ties
        order = lexbfs_order(g, -prior.position)
        if trace:
            tr = _lex_trace(g, order)
    elif kind is SearchKind.BFS:
        order, lay = _bfs(g, start)
        layers = tuple(lay)
        tr = tuple((v, lay[v]) for v in order) if trace else ()
    elif kind is SearchKind.DFS:
        order, t = _dfs(g, start)
        tr = tuple(t) if trace else ()
    elif kind is SearchKind.GENERIC:
        order, t = _generic(g, start, lambda u, _vis: u)
        tr = tuple(t) if trace else ()
    elif kind is SearchKind.MDS:
        order, t = _mds(g, start)
        tr = tuple(t) if trace else ()
    elif kind is SearchKind.MNS:
        order, t = _mns(g, start)
        tr = tuple(t) if trace else ()
    else:  # pragma: no cover
        raise ValueError(kind)
    return SearchResult(VertexOrdering(order), kind, layers, tr)


def multi_sweep(
    g: UndirectedGraph,
    kind: SearchKind | str,
    sweeps: int,
    start: int | None = None,
    trace: bool = False,
    keep_all: bool = False,
):
    """Repeat a search; later sweeps are LexBFS+ (or BFS from the previous end vertex).

    Returns the final result, or every sweep's result when ``keep_all``.
    """
    kind = SearchKind.parse(kind) if isinstance(kind, str) else kind
    if sweeps < 1:
        raise ValueError("sweeps must be >= 1")
    first_kind = SearchKind.LEXBFS if kind is SearchKind.LEXBFS_PLUS else kind
    res = run_search(g, first_kind, start=start, trace=trace)
    results = [res]
    for _ in range(sweeps - 1):
        if kind is SearchKind.BFS:
            end = res.ordering.vertex_at(g.n - 1) if g.n else None
            res = run_search(g, SearchKind.BFS, start=end, trace=trace)
        elif kind in (SearchKind.LEXBFS, SearchKind.LEXBFS_PLUS):
            res = run_search(g, SearchKind.LEXBFS_PLUS, prior=res.ordering, trace=trace)
        else:
            res = run_search(g, kind, start=res.ordering.vertex_at(g.n - 1) if g.n else None, trace=trace)
        results.append(res)
    return results if keep_all else res
