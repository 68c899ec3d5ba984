import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from patternclass.classes import RECOGNIZABLE, ClassId, defining_family, definition_check
from patternclass.families import CATALOG_ENTRIES, ClassName
from patternclass.generators import random_graph, random_k_tree
from patternclass.graph import UndirectedGraph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from patternclass.io import small_graphs
from patternclass.ordered import avoids, find_violation, occurs_at
from patternclass.patterns import FamilyBits
from patternclass.recognizers import (
    RecognitionResult,
    Verdict,
    classify_all,
    recognize,
    recognize_chordal_linear,
    verify,
)

ALL_CLASSES = [ClassId(name, comp) for name in RECOGNIZABLE for comp in (False, True)]


def order_with(g, w):
    """Any ordering that puts the witness vertices at the witness positions."""
    order = [None] * g.n
    for p, v in zip(w.positions, w.vertices):
        order[p - 1] = v
    rest = iter(v for v in range(g.n) if v not in w.vertices)
    return [v if v is not None else next(rest) for v in order]


def test_p4_not_threshold():
    res = recognize(path_graph(4), "threshold")
    assert res.verdict is Verdict.NON_MEMBER and not res
    assert res.witness is not None


def test_c4_not_chordal_with_witness():
    res = recognize(cycle_graph(4), "chordal")
    assert not res.is_member
    w = res.witness
    assert res.family_used == FamilyBits.of(4)
    assert occurs_at(cycle_graph(4), order_with(cycle_graph(4), w), w.pattern, w.positions)


def test_star_certificate_leaves_then_centre():
    g = UndirectedGraph(4, [(0, 3), (1, 3), (2, 3)])
    res = recognize(g, "star")
    assert res.is_member
    assert res.certificate == [0, 1, 2, 3]
    assert avoids(g, res.certificate, defining_family("star"))


def test_threshold_certificate_double_duty():
    # a threshold certificate avoids {1, 6}; its reverse is a perfect elimination ordering of G and of the complement
    for g in small_graphs(max_n=6):
        res = recognize(g, "threshold")
        if not res:
            continue
        assert avoids(g, res.certificate, FamilyBits.of(1, 6))
        rev = res.certificate.reversed()
        assert avoids(g, rev, FamilyBits.of(4))
        assert avoids(g.complement(), rev, FamilyBits.of(4))


def test_classify_small():
    k1 = classify_all(empty_graph(1))
    assert all(r.is_member for r in k1.values())
    c4 = classify_all(cycle_graph(4))
    assert not c4[ClassId(ClassName.CHORDAL)] and c4[ClassId(ClassName.CHORDAL, True)]
    assert c4[ClassId(ClassName.COMPLETE_BIPARTITE)] and c4[ClassId(ClassName.BIPARTITE_CHAIN)]
    k3 = classify_all(complete_graph(3))
    assert k3[ClassId(ClassName.CLIQUE)] and not k3[ClassId(ClassName.TRIANGLE_FREE)]
    assert len(k3) == 2 * len(RECOGNIZABLE)


def test_result_round_trip():
    for g in (path_graph(4), cycle_graph(5), star_graph(3)):
        for c in ("chordal", "co-interval", "threshold", "bipartite"):
            res = recognize(g, c)
            assert RecognitionResult.from_dict(res.to_dict()) == res


def test_catalog_entry_and_family_override():
    entry = next(e for e in CATALOG_ENTRIES if not e.label.is_trivial and e.label.class_id is ClassName.INTERVAL)
    assert recognize(path_graph(5), entry).is_member
    trivial = next(e for e in CATALOG_ENTRIES if e.label.is_trivial)
    with pytest.raises(ValueError, match="trivial"):
        recognize(path_graph(3), trivial)
    res = recognize(path_graph(4), "chordal", family=FamilyBits.of(1))
    assert res.is_member and res.family_used == FamilyBits.of(1)


def test_complement_flag():
    assert recognize(cycle_graph(4), "chordal", complemented=True).is_member
    assert recognize(cycle_graph(4), "co-chordal", complemented=True).class_id == ClassId(ClassName.CHORDAL)


def test_linear_chordal_matches_generic():
    for g in small_graphs(max_n=6):
        assert recognize_chordal_linear(g).is_member == recognize(g, "chordal").is_member
    g = random_k_tree(600, 3, seed=1)
    res = recognize_chordal_linear(g)
    assert res.is_member and verify(g, res.certificate, FamilyBits.of(4)) is None
    bad = UndirectedGraph(g.n + 4, list(g.edges()) + [(g.n, g.n + 1), (g.n + 1, g.n + 2), (g.n + 2, g.n + 3), (g.n + 3, g.n)])
    res = recognize_chordal_linear(bad)
    assert not res.is_member
    w = res.witness
    assert occurs_at(bad, order_with(bad, w), w.pattern, w.positions)


def test_verify_linear_path_agrees_with_scan():
    # large graphs take the linear check; its witness need not be the least one
    g = random_k_tree(400, 2, seed=5)
    for order in (list(range(g.n)), list(range(g.n - 1, -1, -1))):
        w = verify(g, order, FamilyBits.of(4))
        assert (w is None) == (find_violation(g, order, FamilyBits.of(4)) is None)
        if w is not None:
            assert occurs_at(g, order, w.pattern, w.positions)


@settings(max_examples=60)
@given(graphs(max_n=7), st.sampled_from(ALL_CLASSES))
def test_soundness(g, c):
    res = recognize(g, c)
    if res.is_member:
        assert find_violation(g, res.certificate, res.family_used) is None
        assert definition_check(g, c)
    elif res.witness is not None:
        w = res.witness
        assert occurs_at(g, order_with(g, w), w.pattern, w.positions)


def test_recognize_equals_definition_corpus():
    for g in small_graphs(max_n=6):
        for c in ALL_CLASSES:
            assert recognize(g, c).is_member == definition_check(g, c), (c, g)


def test_random_graphs_agree():
    for seed in range(30):
        g = random_graph(9, 0.4, seed=seed)
        for c in ("interval", "permutation", "split", "comparability"):
            assert recognize(g, c).is_member == definition_check(g, c)
