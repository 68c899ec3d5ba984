"""Graph classes and their definition-based membership tests.

Everything here decides membership from structural definitions (cycles,
colorings, forbidden induced subgraphs, implication classes) and never
looks at vertex orderings, so it can serve as an independent check of
the pattern-based recognizers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .families import ClassLabel, ClassName, Convention, catalog_entry
from .graph import UndirectedGraph
from .patterns import FamilyBits, PatternFamily, complement, decode_family, encode_family

RECOGNIZABLE = tuple(c for c in ClassName if c is not ClassName.TRIVIAL)


@dataclass(frozen=True)
class ClassId:
    name: ClassName
    complemented: bool = False

    @classmethod
    def parse(cls, text: "str | ClassId | ClassName", complemented: bool = False) -> "ClassId":
        if isinstance(text, ClassId):
            return ClassId(text.name, text.complemented ^ complemented)
        if isinstance(text, ClassName):
            return cls(text, complemented)
        t = text.strip().lower().replace("_", "-").replace(" ", "-")
        if t in _BY_VALUE:
            return cls(_BY_VALUE[t], complemented)
        if t.startswith("co-") and t[3:] in _BY_VALUE:
            return cls(_BY_VALUE[t[3:]], not complemented)
        names = ", ".join(c.value for c in RECOGNIZABLE)
        raise ValueError(f"unknown class {text!r}; valid classes: {names}")

    def __str__(self) -> str:
        return ("co-" if self.complemented else "") + self.name.value


_BY_VALUE = {c.value: c for c in RECOGNIZABLE}

# Canonical family per class and the isolated-node convention it carries.
_DEFINING: dict[ClassName, tuple[int, ...]] = {
    ClassName.CHORDAL: (4,),
    ClassName.FOREST: (8,),
    ClassName.LINEAR_FOREST: (22,),
    ClassName.STAR: (24,),
    ClassName.INTERVAL: (18,),
    ClassName.SPLIT: (13,),
    ClassName.BIPARTITE: (12,),
    ClassName.COMPARABILITY: (2,),
    ClassName.TRIANGLE_FREE: (0,),
    ClassName.PERMUTATION: (2, 5),
    ClassName.THRESHOLD: (1, 6),
    ClassName.PROPER_INTERVAL: (1, 4),
    ClassName.CATERPILLAR: (5, 8),
    ClassName.TRIVIALLY_PERFECT: (1, 2),
    ClassName.BIPARTITE_CHAIN: (3, 12),
    ClassName.TWO_STAR: (3, 16),
    ClassName.ONE_SPLIT: (13, 14),
    ClassName.AUGMENTED_CLIQUE: (4, 13),
    ClassName.BIPARTITE_PERMUTATION: (0, 5),
    ClassName.TRIANGLE_FREE_CO_CHORDAL: (0, 3),
    ClassName.CLIQUE: (2, 4, 13),
    ClassName.COMPLETE_BIPARTITE: (0, 3, 5),
}

# Some canonical families are not themselves in the catalogue (e.g. {4} is
# the mirror of {1}); their convention is that of the mirrored entry.
_DEFAULT_CONVENTION: dict[ClassName, Convention] = {
    ClassName.STAR: Convention.SINGLE_COMPONENT,
    ClassName.CLIQUE: Convention.SINGLE_COMPONENT,
    ClassName.COMPLETE_BIPARTITE: Convention.SINGLE_COMPONENT,
    ClassName.SPLIT: Convention.ALLOWS_ISOLATED,
    ClassName.THRESHOLD: Convention.ALLOWS_ISOLATED,
    ClassName.BIPARTITE_CHAIN: Convention.ALLOWS_ISOLATED,
    ClassName.TWO_STAR: Convention.ALLOWS_ISOLATED,
    ClassName.AUGMENTED_CLIQUE: Convention.ALLOWS_ISOLATED,
}


def defining_family(c: ClassId | str) -> FamilyBits:
    """Canonical forbidden family; a complemented class gets the complemented patterns."""
    c = ClassId.parse(c)
    bits = FamilyBits.of(*_DEFINING[c.name])
    if c.complemented:
        bits = encode_family(PatternFamily(complement(p) for p in decode_family(bits)))
    return bits


def default_convention(name: ClassName) -> Convention:
    return _DEFAULT_CONVENTION.get(name, Convention.UNRESTRICTED)


def label_for(c: ClassId, convention: Convention | None = None) -> ClassLabel:
    return ClassLabel(c.name, c.complemented, convention or default_convention(c.name))


# -- structural helpers ---------------------------------------------------

def _nontrivial(g: UndirectedGraph) -> list[list[int]]:
    return [c for c in g.components() if len(c) > 1]


def has_triangle(g: UndirectedGraph) -> bool:
    adj = g.adjacency
    return any(adj[u] & adj[v] for u, v in g.edges())


def is_forest(g: UndirectedGraph) -> bool:
    return g.m == g.n - len(g.components())


def two_coloring(g: UndirectedGraph) -> list[int] | None:
    color = [-1] * g.n
    adj = g.adjacency
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: UndirectedGraph) -> bool:
    return two_coloring(g) is not None


def is_chordal(g: UndirectedGraph) -> bool:
    """Dirac: repeatedly delete a simplicial vertex."""
    alive = set(range(g.n))
    adj = g.adjacency
    while alive:
        for v in sorted(alive):
            nb = [w for w in adj[v] if w in alive]
            if all(b in adj[a] for a, b in itertools.combinations(nb, 2)):
                alive.discard(v)
                break
        else:
            return False
    return True


def is_comparability(g: UndirectedGraph) -> bool:
    """Implication classes: no class may contain an arc together with its reverse."""
    arcs = {}
    for u, v in g.edges():
        arcs[(u, v)] = len(arcs)
        arcs[(v, u)] = len(arcs)
    parent = list(range(len(arcs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    adj = g.adjacency
    for a in range(g.n):
        for b, c in itertools.combinations(sorted(adj[a]), 2):
            if c not in adj[b]:
                # a->b forces a->c, and b->a forces c->a
                union(arcs[(a, b)], arcs[(a, c)])
                union(arcs[(b, a)], arcs[(c, a)])
    return all(find(arcs[(u, v)]) != find(arcs[(v, u)]) for u, v in g.edges())


_C4 = (4, (2, 2, 2, 2))
_P4 = (3, (1, 1, 2, 2))
_2K2 = (2, (1, 1, 1, 1))
_CLAW = (3, (1, 1, 1, 3))


def _free_of(g: UndirectedGraph, *sigs) -> bool:
    """No induced 4-vertex subgraph with one of the given (m, degrees) signatures."""
    adj = g.adjacency
    sigs = set(sigs)
    for sub in itertools.combinations(range(g.n), 4):
        deg = [sum(1 for w in sub if w in adj[v]) for v in sub]
        if (sum(deg) // 2, tuple(sorted(deg))) in sigs:
            return False
    return True


def is_at_free(g: UndirectedGraph) -> bool:
    adj = g.adjacency

    def connected_avoiding(a, b, z):
        blocked = set(adj[z]) | {z}
        if a in blocked or b in blocked:
            return False
        seen, stack = {a}, [a]
        while stack:
            u = stack.pop()
            if u == b:
                return True
            for w in adj[u]:
                if w not in seen and w not in blocked:
                    seen.add(w)
                    stack.append(w)
        return False

    for a, b, c in itertools.combinations(range(g.n), 3):
        if connected_avoiding(a, b, c) and connected_avoiding(a, c, b) and connected_avoiding(b, c, a):
            return False
    return True


def is_interval(g: UndirectedGraph) -> bool:
    """Chordal and free of asteroidal triples."""
    return is_chordal(g) and is_at_free(g)


def is_proper_interval(g: UndirectedGraph) -> bool:
    """Claw-free interval graphs."""
    return is_interval(g) and _free_of(g, _CLAW)


def is_split(g: UndirectedGraph) -> bool:
    if g.n <= 12:
        adj = g.adjacency
        for r in range(g.n + 1):
            for k in itertools.combinations(range(g.n), r):
                ks = set(k)
                if all(b in adj[a] for a, b in itertools.combinations(k, 2)) and not any(
                    u not in ks and v not in ks for u, v in g.edges()
                ):
                    return True
        return False
    # degree-sequence test for larger graphs
    d = sorted(g.degrees().tolist(), reverse=True)
    m = max((i + 1 for i, x in enumerate(d) if x >= i), default=0)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def is_threshold(g: UndirectedGraph) -> bool:
    """Peel isolated or dominating vertices until nothing is left."""
    alive = set(range(g.n))
    adj = g.adjacency
    while alive:
        for v in alive:
            d = len(adj[v] & alive)
            if d == 0 or d == len(alive) - 1:
                alive.discard(v)
                break
        else:
            return False
    return True


def is_trivially_perfect(g: UndirectedGraph) -> bool:
    return _free_of(g, _C4, _P4)


def is_permutation(g: UndirectedGraph) -> bool:
    return is_comparability(g) and is_comparability(g.complement())


def is_linear_forest(g: UndirectedGraph) -> bool:
    return is_forest(g) and (g.n == 0 or int(g.degrees().max(initial=0)) <= 2)


def is_star_forest(g: UndirectedGraph) -> bool:
    if not is_forest(g):
        return False
    deg = g.degrees()
    return all(sum(1 for v in comp if deg[v] > 1) <= 1 for comp in g.components())


def is_caterpillar_forest(g: UndirectedGraph) -> bool:
    if not is_forest(g):
        return False
    deg = g.degrees()
    spine = [v for v in range(g.n) if deg[v] > 1]
    inner = g.induced_subgraph(spine)
    return inner.n == 0 or int(inner.degrees().max()) <= 2


def is_bipartite_chain(g: UndirectedGraph) -> bool:
    return is_bipartite(g) and _free_of(g, _2K2)


def _diameter(g: UndirectedGraph, comp: list[int]) -> int:
    adj = g.adjacency
    best = 0
    for s in comp:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def is_two_star(g: UndirectedGraph) -> bool:
    nt = _nontrivial(g)
    return is_forest(g) and len(nt) <= 1 and all(_diameter(g, c) <= 3 for c in nt)


def is_one_split(g: UndirectedGraph) -> bool:
    total = g.n * (g.n - 1) // 2
    return g.m in (0, 1, total - 1, total)


def _is_clique(g: UndirectedGraph, vs) -> bool:
    adj = g.adjacency
    return all(b in adj[a] for a, b in itertools.combinations(vs, 2))


def is_augmented_clique(g: UndirectedGraph) -> bool:
    """A clique plus one node of arbitrary adjacency into it, plus isolated nodes."""
    for v in [None, *range(g.n)]:
        rest = [u for u in range(g.n) if u != v]
        h = g.induced_subgraph(rest)
        nt = [[rest[i] for i in c] for c in _nontrivial(h)]
        if len(nt) > 1:
            continue
        if v is None:
            if not nt or _is_clique(g, nt[0]):
                return True
            continue
        nv = g.neighbors(v)
        if not nt:
            if len(nv) <= 1:
                return True
            continue
        if _is_clique(g, nt[0]) and nv <= set(nt[0]):
            return True
    return False


def is_union_of_cliques(g: UndirectedGraph) -> bool:
    return all(_is_clique(g, c) for c in g.components())


def is_complete_bipartite_union(g: UndirectedGraph) -> bool:
    """Every component is complete bipartite (a single vertex counts)."""
    col = two_coloring(g)
    if col is None:
        return False
    adj = g.adjacency
    for comp in g.components():
        a = [v for v in comp if col[v] == 0]
        b = [v for v in comp if col[v] == 1]
        if any(y not in adj[x] for x in a for y in b):
            return False
    return True


_BASE: dict[ClassName, Callable[[UndirectedGraph], bool]] = {
    ClassName.FOREST: is_forest,
    ClassName.LINEAR_FOREST: is_linear_forest,
    ClassName.STAR: is_star_forest,
    ClassName.INTERVAL: is_interval,
    ClassName.SPLIT: is_split,
    ClassName.BIPARTITE: is_bipartite,
    ClassName.CHORDAL: is_chordal,
    ClassName.COMPARABILITY: is_comparability,
    ClassName.TRIANGLE_FREE: lambda g: not has_triangle(g),
    ClassName.PERMUTATION: is_permutation,
    ClassName.THRESHOLD: is_threshold,
    ClassName.PROPER_INTERVAL: is_proper_interval,
    ClassName.CATERPILLAR: is_caterpillar_forest,
    ClassName.TRIVIALLY_PERFECT: is_trivially_perfect,
    ClassName.BIPARTITE_CHAIN: is_bipartite_chain,
    ClassName.TWO_STAR: is_two_star,
    ClassName.ONE_SPLIT: is_one_split,
    ClassName.AUGMENTED_CLIQUE: is_augmented_clique,
    ClassName.BIPARTITE_PERMUTATION: lambda g: is_bipartite(g) and is_permutation(g),
    ClassName.TRIANGLE_FREE_CO_CHORDAL: lambda g: not has_triangle(g) and is_chordal(g.complement()),
    ClassName.CLIQUE: is_union_of_cliques,
    ClassName.COMPLETE_BIPARTITE: is_complete_bipartite_union,
}


def satisfies_convention(g: UndirectedGraph, convention: Convention) -> bool:
    if convention in (Convention.UNRESTRICTED, Convention.ALLOWS_ISOLATED):
        return True
    nt = _nontrivial(g)
    if len(nt) > 1:
        return False
    has_isolated = any(len(c) == 1 for c in g.components())
    if convention is Convention.SINGLE_COMPONENT:
        return True
    if convention is Convention.FORBIDS_ISOLATED:
        return not nt or not has_isolated
    if convention is Convention.SMALL_CLIQUE_ISOLATED:
        return not has_isolated or not nt or len(nt[0]) < 3
    raise ValueError(convention)


def definition_check(
    g: UndirectedGraph,
    c: ClassId | ClassLabel | str,
    convention: Convention | None = None,
) -> bool:
    """Membership from first principles, honouring the isolated-node convention.

    A complemented class is decided on the complement graph.
    """
    if isinstance(c, ClassLabel):
        if c.is_trivial:
            raise ValueError("trivial classes have no definition-based test; use the oracle")
        cid, conv = ClassId(c.class_id, c.complemented), c.convention
    else:
        cid = ClassId.parse(c)
        conv = default_convention(cid.name)
    if convention is not None:
        conv = convention
    h = g.complement() if cid.complemented else g
    return satisfies_convention(h, conv) and _BASE[cid.name](h)


def label_of_family(f: FamilyBits) -> ClassLabel:
    return catalog_entry(f).label
