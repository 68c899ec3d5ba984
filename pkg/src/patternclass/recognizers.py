"""Certifying recognition by pattern-avoiding orderings.

Each class has a strategy that proposes candidate orderings (graph
searches, or structural arrangements such as "isolated nodes, then the
independent set, then the clique").  Every candidate and its reverse is
checked against the requested family; the answer is Member only when a
candidate passes, so a weak strategy can lose members but never admit a
non-member.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from ._backend import kernels
from .classes import RECOGNIZABLE, ClassId, defining_family, two_coloring
from .families import CatalogEntry, ClassName
from .graph import UndirectedGraph, VertexOrdering
from .ordered import OccurrenceWitness, as_family, find_violation
from .patterns import FamilyBits, PatternFamily, catalog_pattern, encode_family
from .search import SearchKind, lexbfs_order, multi_sweep, run_search

Candidate = tuple[str, list[int]]


class Verdict(str, enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RecognitionResult:
    class_id: ClassId
    verdict: Verdict
    family_used: FamilyBits
    certificate: VertexOrdering | None = None
    witness: OccurrenceWitness | None = None
    strategy: str | None = None

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    def __bool__(self) -> bool:
        return self.is_member

    def to_dict(self) -> dict:
        return {
            "class": self.class_id.name.value,
            "complemented": self.class_id.complemented,
            "verdict": self.verdict.value,
            "family": list(self.family_used.indices()),
            "certificate": None if self.certificate is None else self.certificate.tolist(),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "strategy": self.strategy,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RecognitionResult":
        return cls(
            ClassId.parse(d["class"], d["complemented"]),
            Verdict(d["verdict"]),
            FamilyBits.of(*d["family"]),
            None if d["certificate"] is None else VertexOrdering(d["certificate"]),
            None if d["witness"] is None else OccurrenceWitness.from_dict(d["witness"]),
            d.get("strategy"),
        )


# -- verification ---------------------------------------------------------

_CHORDAL = FamilyBits.of(4)
_MIRROR_CHORDAL = FamilyBits.of(1)
# the generic checker is cubic; large chordal certificates use the linear one
_LINEAR_VERIFY_FROM = 300


def verify(g: UndirectedGraph, ordering, family) -> OccurrenceWitness | None:
    """Occurrence of a family pattern in the ordered graph, or None.

    Chordal-type families on large graphs go through the linear
    earlier-neighbourhood clique check instead of the cubic scan.
    """
    order = ordering if isinstance(ordering, VertexOrdering) else VertexOrdering(ordering)
    bits = family if isinstance(family, FamilyBits) else None
    if bits is None:
        fam = as_family(family)
        if all(p.size == 3 for p in fam):
            bits = encode_family(fam)
    if g.n >= _LINEAR_VERIFY_FROM and bits in (_CHORDAL, _MIRROR_CHORDAL):
        seq = order.order if bits == _CHORDAL else order.order[::-1]
        hit = kernels.peo_violation(g.indptr, g.indices, np.ascontiguousarray(seq))
        if hit is None:
            return None
        w, p, v = hit
        if bits == _CHORDAL:
            verts = (w, p, v)
        else:
            verts = (v, p, w)
        pos = tuple(order.position_of(x) + 1 for x in verts)
        return OccurrenceWitness(catalog_pattern(bits.indices()[0]), pos, verts)
    return find_violation(g, order, family)


def chordal_certificate(g: UndirectedGraph) -> tuple[VertexOrdering, tuple[int, int, int] | None]:
    """LexBFS ordering and the linear check of its earlier neighbourhoods."""
    order = lexbfs_order(g)
    return VertexOrdering(order), kernels.peo_violation(g.indptr, g.indices, order)


# -- candidate strategies -------------------------------------------------

def _isolated(h: UndirectedGraph) -> list[int]:
    return h.isolated_vertices()


def _block_orders(blocks: list[list[int]], name: str) -> Iterator[Candidate]:
    """Every arrangement of the non-empty blocks, each block kept contiguous."""
    blocks = [b for b in blocks if b]
    seen = set()
    for perm in itertools.permutations(range(len(blocks))):
        order = [v for i in perm for v in blocks[i]]
        key = tuple(order)
        if key not in seen:
            seen.add(key)
            yield f"{name}:{''.join(map(str, perm))}", order


def _sweeps(h: UndirectedGraph, count: int | None = None) -> list[list[int]]:
    count = max(h.n, 3) if count is None else count
    return [r.ordering.tolist() for r in multi_sweep(h, SearchKind.LEXBFS_PLUS, count, keep_all=True)]


def _first_avoiding(g: UndirectedGraph, orders: Iterable[list[int]], fam) -> list[int] | None:
    for o in orders:
        if find_violation(g, VertexOrdering(o), fam) is None:
            return o
    return None


def _cocomp_order(h: UndirectedGraph) -> list[int] | None:
    """An ordering of ``h`` avoiding the umbrella pattern, from LexBFS+ sweeps."""
    return _first_avoiding(h, _sweeps(h), PatternFamily.of(5))


def _permutation_order(h: UndirectedGraph) -> list[int] | None:
    """Linear order combining transitive orientations of ``h`` and its complement."""
    tau = _cocomp_order(h)
    if tau is None:
        return None
    hc = h.complement()
    sigma = _cocomp_order(hc)
    if sigma is None:
        return None
    n = h.n
    ps = np.empty(n, dtype=np.int64)
    pt = np.empty(n, dtype=np.int64)
    ps[sigma] = np.arange(n)
    pt[tau] = np.arange(n)
    a = h.dense().astype(bool)
    # u before v: along sigma on edges, along tau on non-edges
    before = np.where(a, ps[:, None] < ps[None, :], pt[:, None] < pt[None, :])
    np.fill_diagonal(before, False)
    return np.argsort(before.sum(axis=0), kind="stable").tolist()


def _chordal(h):
    yield "lexbfs", lexbfs_order(h).tolist()


def _interval(h):
    for i, o in enumerate(_sweeps(h)):
        yield f"lexbfs+ sweep {i + 1}", o


def _proper_interval(h):
    for i, o in enumerate(_sweeps(h)):
        yield f"lexbfs+ sweep {i + 1}", o


def _comparability(h):
    hc = h.complement()
    for i, o in enumerate(_sweeps(hc)):
        yield f"complement lexbfs+ sweep {i + 1}", o


def _permutation(h):
    o = _permutation_order(h)
    if o is not None:
        yield "two-orientation order", o


def _bipartite_permutation(h):
    tau = _cocomp_order(h)
    if tau is not None:
        yield "cocomparability sweep", tau
    yield from _permutation(h)


def _triangle_free(h):
    yield "identity", list(range(h.n))


def _triangle_free_co_chordal(h):
    yield "complement lexbfs", lexbfs_order(h.complement()).tolist()


def _peel(h: UndirectedGraph) -> tuple[list[int], list[str]] | None:
    """Removal order of isolated/dominating vertices, with the kind of each removal."""
    alive = set(range(h.n))
    adj = h.adjacency
    order, kinds = [], []
    while alive:
        for v in sorted(alive):
            d = len(adj[v] & alive)
            if d == 0 or d == len(alive) - 1:
                order.append(v)
                kinds.append("I" if d == 0 else "K")
                alive.discard(v)
                break
        else:
            return None
    return order, kinds


def _threshold(h):
    yield "mds", run_search(h, SearchKind.MDS).ordering.tolist()
    peeled = _peel(h)
    if peeled is None:
        return
    order, kinds = peeled
    yield "peeling", order
    deg = h.degrees()
    ind = [v for v, k in zip(order, kinds) if k == "I"]
    cli = [v for v, k in zip(order, kinds) if k == "K"]
    for di, dk in itertools.product((False, True), repeat=2):
        i_blk = sorted(ind, key=lambda v: (deg[v], v), reverse=di)
        k_blk = sorted(cli, key=lambda v: (deg[v], v), reverse=dk)
        yield from _block_orders([i_blk, k_blk], f"split blocks {int(di)}{int(dk)}")


def _split_partition(h: UndirectedGraph) -> tuple[list[int], list[int]] | None:
    deg = h.degrees()
    by_deg = sorted(range(h.n), key=lambda v: (-deg[v], v))
    d = [int(deg[v]) for v in by_deg]
    m = max((i + 1 for i, x in enumerate(d) if x >= i), default=0)
    k = by_deg[:m]
    ks = set(k)
    adj = h.adjacency
    if all(b in adj[a] for a, b in itertools.combinations(k, 2)) and not any(
        u not in ks and v not in ks for u, v in h.edges()
    ):
        return [v for v in by_deg[m:]], k
    return None


def _split(h):
    part = _split_partition(h)
    if part is None:
        return
    ind, cli = part
    iso = sorted(v for v in ind if h.degree(v) == 0)
    yield "isolated, independent, clique", iso + sorted(v for v in ind if h.degree(v)) + sorted(cli)


def _augmented_clique(h):
    iso = _isolated(h)
    rest = [v for v in range(h.n) if v not in set(iso)]
    adj = h.adjacency
    for s in [None, *rest]:
        others = [v for v in rest if v != s]
        if not all(b in adj[a] for a, b in itertools.combinations(others, 2)):
            continue
        if s is None:
            yield from _block_orders([iso, others], "isolated/clique")
            return
        near = [v for v in others if v in adj[s]]
        far = [v for v in others if v not in adj[s]]
        yield from _block_orders([iso, [s], near, far], "isolated/special/near/far")
        return
    # the special node may also be adjacent to nothing but one isolated-looking vertex
    for s in rest:
        if h.degree(s) == 1:
            (t,) = h.neighbors(s)
            if h.degree(t) == 1 and len(rest) == 2:
                yield from _block_orders([iso, [s], [t]], "isolated/edge")
                return


def _one_split(h):
    total = h.n * (h.n - 1) // 2
    if h.m <= 1:
        special = list(next(h.edges(), ()))
    elif h.m >= total - 1:
        special = list(next(h.complement().edges(), ()))
    else:
        return
    rest = [v for v in range(h.n) if v not in special]
    blocks = [[v] for v in special] + [rest]
    yield from _block_orders(blocks, "special/rest")
    # rest split around the special pair
    for cut in (1, len(rest) - 1):
        if 0 < cut < len(rest) and special:
            yield "rest split", rest[:cut] + special + rest[cut:]
            yield "rest split inside", rest[:cut] + special[:1] + rest[cut:] + special[1:]


def _trivially_perfect(h):
    yield "lexbfs", lexbfs_order(h).tolist()
    yield "quasi-threshold", _quasi_threshold_order(h)


def _quasi_threshold_order(h: UndirectedGraph) -> list[int]:
    """Components one after another, universal vertices of each component last."""
    adj = h.adjacency

    def build(vs: list[int]) -> list[int]:
        if not vs:
            return []
        sub = set(vs)
        comps = h.induced_subgraph(vs).components()
        if len(comps) > 1:
            return [v for c in comps for v in build([vs[i] for i in c])]
        universal = [v for v in vs if len(adj[v] & sub) == len(vs) - 1]
        if not universal:
            return sorted(vs)  # not trivially perfect; any order will be rejected
        rest = [v for v in vs if v not in set(universal)]
        return build(rest) + universal

    return build(list(range(h.n)))


def _clique(h):
    iso = _isolated(h)
    comps = [c for c in h.components() if len(c) > 1]
    body = [v for c in comps for v in c]
    yield "isolated then cliques", iso + body
    yield "cliques then isolated", body + iso
    if len(comps) == 1 and iso:
        k = comps[0]
        for cut in range(1, len(k)):
            yield f"clique split at {cut}", k[:cut] + iso + k[cut:]


def _complete_bipartite(h):
    col = two_coloring(h)
    if col is None:
        return
    iso = _isolated(h)
    comps = [c for c in h.components() if len(c) > 1]
    if len(comps) == 1:
        a = [v for v in comps[0] if col[v] == 0]
        b = [v for v in comps[0] if col[v] == 1]
        yield from _block_orders([iso, a, b], "isolated/side/side")
    else:
        body = [v for c in comps for side in (0, 1) for v in c if col[v] == side]
        yield "isolated then components", iso + body


def _bipartite_chain(h):
    col = two_coloring(h)
    if col is None:
        return
    iso = set(_isolated(h))
    deg = h.degrees()
    a = [v for v in range(h.n) if col[v] == 0 and v not in iso]
    b = [v for v in range(h.n) if col[v] == 1 and v not in iso]
    for da, db in itertools.product((False, True), repeat=2):
        sa = sorted(a, key=lambda v: (deg[v], v), reverse=da)
        sb = sorted(b, key=lambda v: (deg[v], v), reverse=db)
        yield from _block_orders([sorted(iso), sa, sb], f"nested sides {int(da)}{int(db)}")


def _bipartite(h):
    col = two_coloring(h)
    if col is None:
        return
    layers = run_search(h, SearchKind.BFS).layers
    even = [v for v in range(h.n) if layers[v] % 2 == 0]
    odd = [v for v in range(h.n) if layers[v] % 2 == 1]
    yield "even layers then odd layers", even + odd


def _forest(h):
    yield "generic search", run_search(h, SearchKind.GENERIC).ordering.tolist()


def _double_bfs_per_component(h: UndirectedGraph) -> list[int]:
    out = []
    for comp in h.components():
        sub = h.induced_subgraph(comp)
        first = run_search(sub, SearchKind.BFS, start=0).ordering
        second = run_search(sub, SearchKind.BFS, start=first.vertex_at(sub.n - 1)).ordering
        out.extend(comp[v] for v in second)
    return out


def _spine_walk(h: UndirectedGraph) -> list[int]:
    """Per component, BFS from a diametral end visiting low-degree neighbours first.

    On a caterpillar this lists each spine vertex followed by its leaves.
    """
    deg = h.degrees()
    adj = h.adjacency
    out = []
    for comp in h.components():
        sub = h.induced_subgraph(comp)
        first = run_search(sub, SearchKind.BFS, start=0).ordering
        start = comp[first.vertex_at(sub.n - 1)]
        seen = {start}
        queue = [start]
        for u in queue:
            for w in sorted(adj[u], key=lambda x: (deg[x], x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.extend(queue)
    return out


def _caterpillar(h):
    yield "double bfs", _double_bfs_per_component(h)
    yield "spine walk", _spine_walk(h)


def _linear_forest(h):
    if h.n and int(h.degrees().max()) > 2:
        return
    out = []
    for comp in h.components():
        sub = h.induced_subgraph(comp)
        ends = [v for v in range(sub.n) if sub.degree(v) <= 1]
        if not ends:
            return  # a cycle
        out.extend(comp[v] for v in run_search(sub, SearchKind.BFS, start=ends[0]).ordering)
    yield "paths end to end", out


def _star_parts(h: UndirectedGraph):
    stars = []
    for comp in h.components():
        if len(comp) == 1:
            continue
        deg = {v: h.degree(v) for v in comp}
        centre = max(comp, key=lambda v: (deg[v], -v))
        stars.append(([v for v in comp if v != centre], [centre]))
    return stars


def _star(h):
    iso = _isolated(h)
    stars = _star_parts(h)
    if len(stars) <= 1:
        leaves, centre = stars[0] if stars else ([], [])
        yield from _block_orders([iso, leaves, centre], "isolated/leaves/centre")
    else:
        yield "stars in sequence, then isolated", [v for s in stars for v in s[0] + s[1]] + iso
        yield "isolated, then stars in sequence", iso + [v for s in stars for v in s[0] + s[1]]


def _two_star(h):
    iso = _isolated(h)
    comps = [c for c in h.components() if len(c) > 1]
    if len(comps) != 1:
        yield "isolated", iso + [v for c in comps for v in c]
        return
    comp = comps[0]
    adj = h.adjacency
    inner = [v for v in comp if h.degree(v) > 1]
    if len(inner) == 2:
        x, y = inner
    elif len(inner) == 1:
        x = inner[0]
        y = min(adj[x])
    elif len(comp) == 2:
        x, y = comp
    else:
        return
    xs = sorted(adj[x] - {y})
    ys = sorted(adj[y] - {x})
    yield "isolated, x leaves, y leaves, x, y", iso + xs + ys + [x, y]
    yield from _block_orders([iso, xs, ys, [x], [y]], "two-star blocks")


_STRATEGIES: dict[ClassName, Callable[[UndirectedGraph], Iterable[Candidate]]] = {
    ClassName.CHORDAL: _chordal,
    ClassName.INTERVAL: _interval,
    ClassName.PROPER_INTERVAL: _proper_interval,
    ClassName.COMPARABILITY: _comparability,
    ClassName.PERMUTATION: _permutation,
    ClassName.BIPARTITE_PERMUTATION: _bipartite_permutation,
    ClassName.TRIANGLE_FREE: _triangle_free,
    ClassName.TRIANGLE_FREE_CO_CHORDAL: _triangle_free_co_chordal,
    ClassName.THRESHOLD: _threshold,
    ClassName.SPLIT: _split,
    ClassName.AUGMENTED_CLIQUE: _augmented_clique,
    ClassName.ONE_SPLIT: _one_split,
    ClassName.TRIVIALLY_PERFECT: _trivially_perfect,
    ClassName.CLIQUE: _clique,
    ClassName.COMPLETE_BIPARTITE: _complete_bipartite,
    ClassName.BIPARTITE_CHAIN: _bipartite_chain,
    ClassName.BIPARTITE: _bipartite,
    ClassName.FOREST: _forest,
    ClassName.CATERPILLAR: _caterpillar,
    ClassName.LINEAR_FOREST: _linear_forest,
    ClassName.STAR: _star,
    ClassName.TWO_STAR: _two_star,
}


def candidates(g: UndirectedGraph, c: ClassId | str) -> Iterator[Candidate]:
    """Candidate orderings for class ``c``: each strategy ordering and then its reverse."""
    cid = ClassId.parse(c)
    h = g.complement() if cid.complemented else g
    for name, order in _STRATEGIES[cid.name](h):
        yield name, order
        yield name + " (reversed)", order[::-1]


def recognize(
    g: UndirectedGraph,
    c: ClassId | str | CatalogEntry,
    complemented: bool = False,
    family=None,
) -> RecognitionResult:
    """Decide membership in class ``c`` with a checkable certificate.

    ``family`` overrides the class's canonical family, e.g. to recognize a
    catalogue entry whose family differs from the canonical one.  A
    catalogue entry can be passed directly.
    """
    if isinstance(c, CatalogEntry):
        family = c.family if family is None else family
        if c.label.is_trivial:
            raise ValueError(f"catalogue entry {c.index} is a trivial class; use the oracle")
        c = ClassId(c.label.class_id, c.label.complemented ^ complemented)
    else:
        c = ClassId.parse(c, complemented)
    bits = defining_family(c) if family is None else family
    fam = as_family(bits)
    if not isinstance(bits, FamilyBits):
        bits = encode_family(fam)
    first_witness = None
    seen = set()
    for name, order in candidates(g, c):
        key = tuple(order)
        if key in seen:
            continue
        seen.add(key)
        o = VertexOrdering(order)
        w = verify(g, o, fam)
        if w is None:
            return RecognitionResult(c, Verdict.MEMBER, bits, certificate=o, strategy=name)
        if first_witness is None:
            first_witness = (w, name)
    w, name = first_witness if first_witness else (None, None)
    return RecognitionResult(c, Verdict.NON_MEMBER, bits, witness=w, strategy=name)


def recognize_chordal_linear(g: UndirectedGraph) -> RecognitionResult:
    """Chordal recognition in linear time: LexBFS plus the parent-pointer clique check."""
    order, hit = chordal_certificate(g)
    c = ClassId(ClassName.CHORDAL)
    if hit is None:
        return RecognitionResult(c, Verdict.MEMBER, _CHORDAL, certificate=order, strategy="lexbfs")
    w, p, v = hit
    verts = (w, p, v)
    pos = tuple(order.position_of(x) + 1 for x in verts)
    witness = OccurrenceWitness(catalog_pattern(4), pos, verts)
    return RecognitionResult(c, Verdict.NON_MEMBER, _CHORDAL, witness=witness, strategy="lexbfs")


def classify_all(g: UndirectedGraph) -> dict[ClassId, RecognitionResult]:
    """Recognize every class and every co-class."""
    out = {}
    for name in RECOGNIZABLE:
        for comp in (False, True):
            cid = ClassId(name, comp)
            out[cid] = recognize(g, cid)
    return out
