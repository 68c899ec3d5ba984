import itertools

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs_with_orderings, labeled_upto
from patternclass.errors import OracleLimitError, PatternError
from patternclass.families import CATALOG_ENTRIES
from patternclass.graph import (
    UndirectedGraph,
    VertexOrdering,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from patternclass.io import small_graphs
from patternclass.ordered import (
    OccurrenceWitness,
    all_orderings,
    avoids,
    find_violation,
    is_member,
    occurs_at,
    oracle_membership,
)
from patternclass.patterns import (
    CATALOG,
    EXTRA_PATTERNS,
    FamilyBits,
    PatternFamily,
    catalog_pattern,
    complement,
    mirror,
    split,
)


def brute_first_violation(g, order, p):
    for pos in itertools.combinations(range(1, g.n + 1), p.size):
        if occurs_at(g, order, p, pos):
            return pos
    return None


def test_occurs_at_examples():
    g = UndirectedGraph(3, [(0, 2)])
    assert occurs_at(g, [0, 1, 2], catalog_pattern(18), (1, 2, 3))
    assert occurs_at(complete_graph(3), [2, 0, 1], catalog_pattern(0), (1, 2, 3))
    p3 = path_graph(3)
    assert occurs_at(p3, [0, 1, 2], catalog_pattern(2), (1, 2, 3))
    closed = UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert not occurs_at(closed, [0, 1, 2], catalog_pattern(2), (1, 2, 3))


def test_occurs_at_errors():
    with pytest.raises(PatternError):
        occurs_at(path_graph(3), [0, 1, 2], catalog_pattern(0), (1, 2))
    with pytest.raises(PatternError):
        occurs_at(path_graph(3), [0, 1, 2], catalog_pattern(0), (2, 1, 3))
    with pytest.raises(PatternError):
        occurs_at(path_graph(3), [0, 1, 2], catalog_pattern(0), (1, 2, 4))


def test_find_violation_examples():
    p4 = path_graph(4)
    for o in itertools.permutations(range(4)):
        assert find_violation(p4, o, FamilyBits.of(4, 3)) is not None
    # centre, then the two ends
    assert find_violation(path_graph(3), [1, 0, 2], FamilyBits.of(4)) is None
    assert find_violation(path_graph(3), [0, 2, 1], FamilyBits.of(4)) is not None


def test_witness_contents():
    w = find_violation(path_graph(4), [0, 1, 2, 3], FamilyBits.of(4, 3))
    assert w.pattern == catalog_pattern(3)
    assert w.positions == (1, 2, 4) and w.vertices == (0, 1, 3)
    assert OccurrenceWitness.from_dict(w.to_dict()) == w
    with pytest.raises(PatternError):
        OccurrenceWitness(catalog_pattern(3), (2, 1, 3), (0, 1, 2))


@given(graphs_with_orderings(max_n=7))
def test_find_violation_is_least(go):
    g, order = go
    for p in (catalog_pattern(4), catalog_pattern(18), EXTRA_PATTERNS["p-Box"]):
        w = find_violation(g, order, PatternFamily([p]))
        expected = brute_first_violation(g, order, p)
        assert (w.positions if w else None) == expected
        if w:
            assert w.vertices == tuple(order[i - 1] for i in w.positions)


def test_oracle_examples():
    assert oracle_membership(cycle_graph(4), FamilyBits.of(4)) is None
    assert oracle_membership(complete_graph(3), FamilyBits.of(7)) is not None
    assert oracle_membership(path_graph(4), FamilyBits.of(4, 3)) is None


def test_oracle_is_first_in_lex_order():
    for g in small_graphs(max_n=5):
        for fam in (FamilyBits.of(4), FamilyBits.of(5), FamilyBits.of(2, 9)):
            first = next((o for o in all_orderings(g.n) if avoids(g, o, fam)), None)
            assert oracle_membership(g, fam) == first


def test_oracle_limit(monkeypatch):
    g = path_graph(9)
    with pytest.raises(OracleLimitError, match="limit=8"):
        oracle_membership(g, FamilyBits.of(4))
    assert is_member(g, FamilyBits.of(4), limit=9)
    monkeypatch.setenv("PATTERNCLASS_ORACLE_LIMIT", "9")
    assert oracle_membership(g, FamilyBits.of(4)) is not None


def _undecided_pairs():
    for p in list(CATALOG) + list(EXTRA_PATTERNS.values()):
        for pair in sorted(p.undecided):
            yield p, pair


def test_split_mirror_complement_coherence():
    graphs = list(labeled_upto(4))
    pats = list(CATALOG) + list(EXTRA_PATTERNS.values())
    for g in graphs:
        gc = g.complement()
        for order in all_orderings(g.n):
            rev = order.reversed()
            for p in pats:
                a = avoids(g, order, PatternFamily([p]))
                assert a == avoids(g, rev, PatternFamily([mirror(p)]))
                assert a == avoids(gc, order, PatternFamily([complement(p)]))
    for p, pair in _undecided_pairs():
        halves = PatternFamily(split(p, pair))
        for g in graphs:
            ident = VertexOrdering.identity(g.n)
            assert avoids(g, ident, PatternFamily([p])) == avoids(g, ident, halves)


@pytest.fixture(scope="module")
def membership_table():
    graphs = small_graphs(max_n=5)
    return graphs, {
        e.index: [oracle_membership(g, e.family) is not None for g in graphs] for e in CATALOG_ENTRIES
    }


def test_hereditary(membership_table):
    graphs, table = membership_table
    index = {g: i for i, g in enumerate(graphs)}

    def canon(h):
        # map an induced subgraph back to its corpus representative
        nh = nx.Graph()
        nh.add_nodes_from(range(h.n))
        nh.add_edges_from(h.edges())
        for g in graphs:
            if g.n == h.n and g.m == h.m:
                ng = nx.Graph()
                ng.add_nodes_from(range(g.n))
                ng.add_edges_from(g.edges())
                if nx.is_isomorphic(nh, ng):
                    return index[g]
        raise AssertionError("not in corpus")

    for gi, g in enumerate(graphs):
        if g.n < 2:
            continue
        subs = {canon(g.induced_subgraph([u for u in range(g.n) if u != v])) for v in range(g.n)}
        for idx, col in table.items():
            if col[gi]:
                assert all(col[s] for s in subs), (idx, g)


def test_extension_monotone(membership_table):
    _, table = membership_table
    entries = {e.index: e.patterns for e in CATALOG_ENTRIES}
    pairs = 0
    for i, f1 in entries.items():
        for j, f2 in entries.items():
            if i != j and f2.extends(f1):
                pairs += 1
                assert all(b for a, b in zip(table[i], table[j]) if a), (i, j)
    assert pairs > 0


def test_union_containment(membership_table):
    graphs, _ = membership_table
    fams = [PatternFamily.of(4), PatternFamily.of(5), PatternFamily.of(8), PatternFamily.of(9), PatternFamily.of(13)]
    for f1, f2 in itertools.combinations(fams, 2):
        for g in graphs:
            if is_member(g, f1.union(f2)):
                assert is_member(g, f1) and is_member(g, f2)
    # strict: the claw is a forest and in mirror-interval but not a linear forest
    claw = star_graph(3)
    assert is_member(claw, PatternFamily.of(8)) and is_member(claw, PatternFamily.of(9))
    assert not is_member(claw, PatternFamily.of(8, 9))
    assert not is_member(claw, PatternFamily.of(22))
