"""Simple undirected graphs and vertex orderings.

Graphs are immutable.  Adjacency is stored in CSR form (sorted neighbour
arrays) so the compiled kernels can walk it directly; Python-level set
views and a dense matrix are built lazily on first use.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class UndirectedGraph:
    """Loopless simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "indptr", "indices", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] | np.ndarray = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        e = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be a sequence of (u, v) pairs")
        if e.size and (e.min() < 0 or e.max() >= n):
            bad = e[(e < 0).any(axis=1) | (e >= n).any(axis=1)][0]
            raise ValueError(f"edge {tuple(int(x) for x in bad)} has a vertex outside 0..{n - 1}")
        loops = e[:, 0] == e[:, 1]
        if loops.any():
            raise ValueError(f"self-loop at vertex {int(e[loops][0, 0])}")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        keys = lo * max(n, 1) + hi
        uniq, counts = np.unique(keys, return_counts=True)
        if (counts > 1).any():
            k = int(uniq[counts > 1][0])
            raise ValueError(f"duplicate edge {(k // n, k % n)}")
        self.n = n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        self.indices = dst[order].astype(np.int32)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=self.indptr[1:])

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "UndirectedGraph":
        edges = set()
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {u}")
                edges.add((min(u, v), max(u, v)))
        for u, v in edges:
            if u not in adj[v] or v not in adj[u]:
                raise ValueError(f"adjacency is not symmetric at {(u, v)}")
        return cls(len(adj), sorted(edges))

    @classmethod
    def from_matrix(cls, a) -> "UndirectedGraph":
        a = np.asarray(a, dtype=bool)
        if a.shape[0] != a.shape[1] or (a != a.T).any() or a.diagonal().any():
            raise ValueError("adjacency matrix must be square, symmetric, with zero diagonal")
        u, v = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], np.stack([u, v], axis=1))

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def neighbor_array(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        ip, ix = self.indptr, self.indices.tolist()
        return tuple(frozenset(ix[ip[v]:ip[v + 1]]) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbor_array(u).tolist():
                if u < v:
                    yield (u, v)

    def edge_array(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n, dtype=np.int32), np.diff(self.indptr))
        mask = src < self.indices
        return np.stack([src[mask], self.indices[mask]], axis=1)

    def dense(self) -> np.ndarray:
        """``n x n`` uint8 adjacency matrix (cached)."""
        if "_dense" not in self.__dict__:
            a = np.zeros((self.n, self.n), dtype=np.uint8)
            e = self.edge_array()
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
            a.setflags(write=False)
            self.__dict__["_dense"] = a
        return self.__dict__["_dense"]

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "UndirectedGraph":
        a = 1 - self.dense()
        np.fill_diagonal(a, 0)
        return UndirectedGraph.from_matrix(a)

    def induced_subgraph(self, vertices: Sequence[int]) -> "UndirectedGraph":
        """Subgraph on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        idx = {v: i for i, v in enumerate(vertices)}
        return UndirectedGraph(len(vertices), [(idx[u], idx[v]) for u, v in self.edges() if u in idx and v in idx])

    def relabel(self, perm: Sequence[int]) -> "UndirectedGraph":
        """Graph in which old vertex ``v`` is called ``perm[v]``."""
        p = np.asarray(perm, dtype=np.int64)
        e = self.edge_array()
        return UndirectedGraph(self.n, p[e] if len(e) else e)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, listed by least vertex."""
        seen = [False] * self.n
        out = []
        adj = self.adjacency
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def isolated_vertices(self) -> list[int]:
        return np.flatnonzero(self.degrees() == 0).tolist()

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        if self.m <= 12:
            return f"UndirectedGraph(n={self.n}, edges={list(self.edges())})"
        return f"UndirectedGraph(n={self.n}, m={self.m})"


# -- small named graphs ---------------------------------------------------

def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, list(itertools.combinations(range(n), 2)))


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n)


def star_graph(leaves: int) -> UndirectedGraph:
    """K_{1,leaves} with centre 0."""
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: UndirectedGraph) -> UndirectedGraph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return UndirectedGraph(off, edges)


def all_labeled_graphs(n: int) -> Iterator[UndirectedGraph]:
    """Every graph on vertex set ``0..n-1`` (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield UndirectedGraph(n, [p for t, p in enumerate(pairs) if mask >> t & 1])


class VertexOrdering:
    """A permutation of ``0..n-1``: ``order[i]`` is the vertex at position ``i``."""

    __slots__ = ("order", "position")

    def __init__(self, order: Iterable[int]):
        o = np.asarray(list(order) if not isinstance(order, np.ndarray) else order, dtype=np.int64)
        n = len(o)
        pos = np.full(n, -1, dtype=np.int64)
        if n and (o.min() < 0 or o.max() >= n):
            raise ValueError(f"ordering entries must lie in 0..{n - 1}")
        pos[o] = np.arange(n)
        if (pos < 0).any():
            raise ValueError("ordering is not a permutation (repeated vertex)")
        o.setflags(write=False)
        pos.setflags(write=False)
        self.order = o
        self.position = pos

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(np.arange(n))

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering(self.order[::-1].copy())

    def vertex_at(self, pos: int) -> int:
        return int(self.order[pos])

    def position_of(self, v: int) -> int:
        return int(self.position[v])

    def check_for(self, g: UndirectedGraph) -> None:
        if len(self) != g.n:
            raise ValueError(f"ordering has {len(self)} vertices, graph has {g.n}")

    def tolist(self) -> list[int]:
        return self.order.tolist()

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order.tolist())

    def __getitem__(self, i):
        return self.order[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexOrdering):
            return np.array_equal(self.order, other.order)
        if isinstance(other, (list, tuple)):
            return self.tolist() == list(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.order.tobytes())

    def __repr__(self) -> str:
        return f"VertexOrdering({self.tolist()})"
