"""Random graph instances of known classes.

Every generator takes a ``numpy.random.Generator`` (or a seed) so test
fixtures are reproducible.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graph import UndirectedGraph


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_graph(n: int, p: float, seed=None) -> UndirectedGraph:
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return UndirectedGraph(n, np.stack([iu[keep], ju[keep]], axis=1))


def random_k_tree(n: int, k: int, seed=None) -> UndirectedGraph:
    """A k-tree: start from K_{k+1}; each new vertex joins a k-clique of an existing (k+1)-clique.

    Chordal, with ``k(k+1)/2 + (n-k-1)k`` edges.
    """
    if n < k + 1:
        raise ValueError(f"a {k}-tree needs at least {k + 1} vertices")
    rng = _rng(seed)
    cliques = np.empty((n - k, k + 1), dtype=np.int64)
    cliques[0] = np.arange(k + 1)
    edges = np.empty((k * (k + 1) // 2 + (n - k - 1) * k, 2), dtype=np.int64)
    base = np.array(list(itertools.combinations(range(k + 1), 2)), dtype=np.int64).reshape(-1, 2)
    edges[: len(base)] = base
    picks = rng.integers(0, np.arange(1, n - k), size=n - k - 1) if n > k + 1 else np.empty(0, dtype=np.int64)
    drops = rng.integers(0, k + 1, size=n - k - 1)
    at = len(base)
    for i, v in enumerate(range(k + 1, n)):
        parent = cliques[picks[i]]
        kept = np.delete(parent, drops[i])
        cliques[i + 1, :k] = kept
        cliques[i + 1, k] = v
        edges[at: at + k, 0] = kept
        edges[at: at + k, 1] = v
        at += k
    return UndirectedGraph(n, edges)


def random_interval_graph(n: int, seed=None, max_len: float = 0.3) -> UndirectedGraph:
    rng = _rng(seed)
    left = rng.random(n)
    right = left + rng.random(n) * max_len
    a = (left[:, None] <= right[None, :]) & (left[None, :] <= right[:, None])
    np.fill_diagonal(a, False)
    return UndirectedGraph.from_matrix(a)


def random_indifference_graph(n: int, seed=None, span: float | None = None) -> UndirectedGraph:
    """Unit interval graph: points on a line, adjacent when at distance at most 1."""
    rng = _rng(seed)
    span = n / 3 if span is None else span
    x = rng.random(n) * span
    a = np.abs(x[:, None] - x[None, :]) <= 1.0
    np.fill_diagonal(a, False)
    return UndirectedGraph.from_matrix(a)


def random_threshold_graph(n: int, seed=None, p_dominating: float = 0.5) -> UndirectedGraph:
    """Add vertices one at a time, each isolated or dominating; ids are then shuffled."""
    rng = _rng(seed)
    edges = []
    for v in range(1, n):
        if rng.random() < p_dominating:
            edges.extend((u, v) for u in range(v))
    g = UndirectedGraph(n, edges)
    return g.relabel(rng.permutation(n))


def random_split_graph(n_clique: int, n_independent: int, p: float = 0.5, seed=None) -> UndirectedGraph:
    rng = _rng(seed)
    edges = list(itertools.combinations(range(n_clique), 2))
    for i in range(n_clique, n_clique + n_independent):
        edges.extend((k, i) for k in range(n_clique) if rng.random() < p)
    g = UndirectedGraph(n_clique + n_independent, edges)
    return g.relabel(rng.permutation(g.n))


def random_bipartite_graph(a: int, b: int, p: float = 0.3, seed=None) -> UndirectedGraph:
    rng = _rng(seed)
    mask = rng.random((a, b)) < p
    u, v = np.nonzero(mask)
    g = UndirectedGraph(a + b, np.stack([u, v + a], axis=1))
    return g.relabel(rng.permutation(g.n))


def random_order_graph(n: int, dims: int = 2, seed=None) -> UndirectedGraph:
    """Comparability graph of the dominance order of random points in ``dims`` dimensions.

    With ``dims = 2`` this is a permutation graph.
    """
    rng = _rng(seed)
    pts = rng.random((n, dims))
    less = (pts[:, None, :] < pts[None, :, :]).all(axis=2)
    return UndirectedGraph.from_matrix(less | less.T)


def random_tree(n: int, seed=None) -> UndirectedGraph:
    rng = _rng(seed)
    parents = [int(rng.integers(0, v)) for v in range(1, n)]
    return UndirectedGraph(n, [(p, v) for v, p in zip(range(1, n), parents)])


def random_caterpillar(spine: int, leaves: int, seed=None) -> UndirectedGraph:
    rng = _rng(seed)
    edges = [(i, i + 1) for i in range(spine - 1)]
    for j in range(leaves):
        edges.append((int(rng.integers(0, spine)), spine + j))
    g = UndirectedGraph(spine + leaves, edges)
    return g.relabel(rng.permutation(g.n))


def random_trivially_perfect_graph(n: int, seed=None) -> UndirectedGraph:
    """Comparability graph of a random rooted forest (ancestor relation)."""
    rng = _rng(seed)
    parent = [-1] + [int(rng.integers(-1, v)) for v in range(1, n)]
    edges = []
    for v in range(n):
        u = parent[v]
        while u != -1:
            edges.append((u, v))
            u = parent[u]
    g = UndirectedGraph(n, edges)
    return g.relabel(rng.permutation(n))
