import pytest
from hypothesis import given
from hypothesis import strategies as st

from patternclass.classes import definition_check
from patternclass.errors import NotInCatalogError
from patternclass.families import (
    CATALOG_ENTRIES,
    SPLIT_TRIPLETS,
    ClassName,
    Convention,
    catalog_entry,
    class_label,
    complement_bits8,
    entry_by_index,
    enumerate_full_representatives,
    enumerate_split_minimal,
    exchange_bits8,
    reduce_to_split_minimal,
    scan,
)
from patternclass.io import small_graphs
from patternclass.ordered import oracle_membership
from patternclass.patterns import FamilyBits, PatternFamily, decode_family


def bits(*xs):
    return sum(1 << x for x in xs)


def test_bit_operations():
    assert exchange_bits8(bits(1)) == bits(4)
    assert exchange_bits8(bits(3)) == bits(6)
    assert complement_bits8(bits(0)) == bits(7)
    assert complement_bits8(bits(2, 5)) == bits(5, 2)


@given(st.integers(0, 255))
def test_bit_operations_match_pattern_operations(v):
    fam = decode_family(v)
    assert decode_family(complement_bits8(v)) == fam.complement()
    assert decode_family(exchange_bits8(v)) == fam.mirror()


@pytest.mark.parametrize("before,after", [((4, 5), (18,)), (tuple(range(8)), (26,)), ((0,), (0,))])
def test_reduce_examples(before, after):
    assert reduce_to_split_minimal(FamilyBits.of(*before)).indices() == after


@given(st.integers(1, 255))
def test_reduce_idempotent_and_minimal(v):
    r = reduce_to_split_minimal(v)
    assert reduce_to_split_minimal(r) == r
    for a, b, _ in SPLIT_TRIPLETS:
        assert not (a in r and b in r)


def test_representatives_cover_every_orbit():
    reps = enumerate_full_representatives()
    orbit = set()
    for q in reps:
        c = complement_bits8(q)
        orbit |= {q, c, exchange_bits8(q), exchange_bits8(c)}
    assert orbit == set(range(1, 256))


def test_enumeration_examples():
    fams = enumerate_split_minimal()
    assert len(fams) == 87
    assert FamilyBits.of(2, 5) in fams and FamilyBits.of(26) in fams
    # the scan meets the families in exactly the reverse of the listing order
    assert [catalog_entry(f).index for f in fams] == list(range(87, 0, -1))


def test_ascending_scan_also_gives_87():
    asc = enumerate_split_minimal("ascending")
    assert len(asc) == 87
    assert len(set(asc) ^ set(enumerate_split_minimal())) > 0
    with pytest.raises(ValueError):
        enumerate_split_minimal("random")


@pytest.mark.parametrize(
    "fam,name",
    [((2, 5), ClassName.PERMUTATION), ((1, 6), ClassName.THRESHOLD), ((13, 14), ClassName.ONE_SPLIT)],
)
def test_class_label_examples(fam, name):
    assert class_label(FamilyBits.of(*fam)).class_id is name


def test_class_label_unknown():
    with pytest.raises(NotInCatalogError):
        class_label(FamilyBits.of(4))  # a mirror of an entry, not itself listed


def test_catalog_lookups():
    assert entry_by_index(87).label.is_trivial
    assert catalog_entry(PatternFamily.of(2, 5)).index == 2
    assert catalog_entry(bits(2, 5)).index == 2
    assert entry_by_index(38).label.convention is Convention.FORBIDS_ISOLATED
    assert sum(not e.label.is_trivial for e in CATALOG_ENTRIES) == 53


@pytest.fixture(scope="module")
def upto5():
    return small_graphs(max_n=5)


def test_split_rule_end_to_end(upto5):
    # reduced family defines the same class as the full one
    for v in range(1, 256):
        full, red = decode_family(v), decode_family(reduce_to_split_minimal(v))
        for g in upto5:
            assert (oracle_membership(g, full) is None) == (oracle_membership(g, red) is None), (v, g)


def test_equivalence_removal(upto5):
    for v in range(1, 256):
        fam = decode_family(v)
        for g in upto5:
            member = oracle_membership(g, fam) is not None
            assert member == (oracle_membership(g, fam.mirror()) is not None)
            assert member == (oracle_membership(g.complement(), fam.complement()) is not None)


def test_catalog_fidelity_n6():
    graphs = small_graphs(max_n=6)
    for e in CATALOG_ENTRIES:
        if e.label.is_trivial:
            continue
        for g in graphs:
            assert (oracle_membership(g, e.family) is not None) == definition_check(g, e.label), (e.index, g)


def test_trivial_entries_have_bounded_components():
    # components of members stay small; the largest is C5 for triangle-free and co-triangle-free
    graphs = small_graphs(max_n=7)
    for e in CATALOG_ENTRIES:
        if not e.label.is_trivial:
            continue
        sizes = {len(c) for g in graphs if oracle_membership(g, e.family) is not None for c in g.components()}
        assert max(sizes) <= 5, e.index


def test_ascending_scan_maps_to_catalog(upto5):
    rows = scan("ascending")
    assert len({e.index for _, e, _ in rows}) == 87
    for fam, e, comp in rows:
        for g in upto5:
            h = g.complement() if comp else g
            assert (oracle_membership(g, fam) is None) == (oracle_membership(h, e.family) is None), (fam, e.index)
    assert [e.index for _, e, _ in scan()] == list(range(87, 0, -1))
