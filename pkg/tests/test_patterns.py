import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import patterns
from patternclass.errors import PatternError
from patternclass.patterns import (
    CATALOG,
    EXTRA_PATTERNS,
    FamilyBits,
    PairState,
    Pattern,
    PatternFamily,
    catalog_index,
    catalog_pattern,
    complement,
    decode_family,
    encode_family,
    format_pattern,
    is_extension,
    lookup_name,
    mirror,
    parse_pattern,
    pattern_name,
    split,
)

E, N, U = PairState.EDGE, PairState.NONEDGE, PairState.UNDECIDED


def idx(p):
    return catalog_index(p)


def test_catalog_18_is_interval():
    p = catalog_pattern(18)
    assert p.size == 3
    assert p.state(1, 3) is E and p.state(1, 2) is N and p.state(2, 3) is U
    assert pattern_name(p) == "Interval"


def test_catalog_extremes():
    assert catalog_pattern(0).states == (E, E, E)
    assert catalog_pattern(26).states == (U, U, U)
    with pytest.raises(PatternError):
        catalog_pattern(27)


def test_catalog_distinct_and_closed():
    assert len(set(CATALOG)) == 27
    for p in CATALOG:
        assert mirror(p) in CATALOG and complement(p) in CATALOG


def test_full_patterns_are_first_eight():
    assert [p.is_full for p in CATALOG] == [True] * 8 + [False] * 19


@pytest.mark.parametrize("a,b", [(1, 4), (2, 2), (13, 14)])
def test_mirror_examples(a, b):
    assert idx(mirror(catalog_pattern(a))) == b


@pytest.mark.parametrize("a,b", [(0, 7), (26, 26), (13, 14)])
def test_complement_examples(a, b):
    assert idx(complement(catalog_pattern(a))) == b


@pytest.mark.parametrize("p,pair,halves", [(18, (2, 3), (4, 5)), (8, (1, 2), (0, 4)), (26, (1, 2), (24, 25))])
def test_split_examples(p, pair, halves):
    a, b = split(catalog_pattern(p), pair)
    assert (idx(a), idx(b)) == halves


def test_split_rejects_decided_pair():
    with pytest.raises(PatternError):
        split(catalog_pattern(18), (1, 3))


@pytest.mark.parametrize("p2,p1", [(1, 9), (4, 18)])
def test_extension_examples(p2, p1):
    assert is_extension(catalog_pattern(p2), catalog_pattern(p1))


def test_extension_is_not_symmetric():
    assert not is_extension(catalog_pattern(18), catalog_pattern(4))


def test_extension_to_larger_pattern():
    # the two-node edge pattern is contained in triangle-free
    two = Pattern(2, (E,))
    assert is_extension(catalog_pattern(0), two)
    assert not is_extension(catalog_pattern(7), two)


def test_vertex_symmetric_patterns():
    for i in (0, 7, 26):
        p = catalog_pattern(i)
        for perm in itertools.permutations(range(1, 4)):
            q = Pattern.from_pairs(
                3,
                [tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in p.edges],
                [tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in p.nonedges],
            )
            assert q == p


def test_encode_examples():
    assert encode_family(PatternFamily.of(2, 5)).indices() == (2, 5)
    assert encode_family([catalog_pattern(26)]).indices() == (26,)
    with pytest.raises(PatternError):
        encode_family([EXTRA_PATTERNS["Outerplanar"]])


@given(st.integers(0, (1 << 27) - 1))
def test_encode_decode_round_trip(bits):
    f = FamilyBits(bits)
    assert encode_family(decode_family(f)) == f


@given(patterns())
def test_involutions(p):
    assert mirror(mirror(p)) == p
    assert complement(complement(p)) == p
    assert mirror(complement(p)) == complement(mirror(p))


@given(patterns(), st.data())
def test_split_halves_extend(p, data):
    if not p.undecided:
        return
    pair = data.draw(st.sampled_from(sorted(p.undecided)))
    a, b = split(p, pair)
    assert is_extension(a, p) and is_extension(b, p)
    assert a.state(*pair) is E and b.state(*pair) is N


@given(patterns())
def test_text_round_trip(p):
    assert parse_pattern(format_pattern(p)) == p


def test_parse_pattern_forms():
    assert parse_pattern("#18") == catalog_pattern(18)
    assert parse_pattern("interval") == catalog_pattern(18)
    assert parse_pattern("3; E:(1,3); N:(1,2)") == catalog_pattern(18)
    assert parse_pattern("outerplanar") == EXTRA_PATTERNS["Outerplanar"]
    with pytest.raises(PatternError):
        parse_pattern("3; X:(1,2)")
    with pytest.raises(PatternError):
        parse_pattern("3; E:(1,4)")


def test_lookup_name():
    assert lookup_name("co-Split") == 14
    assert lookup_name("Linear forest") == 22
    with pytest.raises(PatternError, match="valid names"):
        lookup_name("banana")


def test_letters_and_matrix():
    p = Pattern.from_letters("NEU")
    assert p == catalog_pattern(18)
    m = p.matrix()
    assert m[0, 2] == int(E) and m[2, 0] == int(E) and m[1, 2] == int(U)


def test_family_views():
    f = PatternFamily.of(5, 2)
    assert [idx(p) for p in f] == [2, 5]
    assert f.mirror() == f
    assert f.complement() == PatternFamily.of(5, 2)
    assert str(FamilyBits.of(2, 5)) == "[2,5]"
    assert 5 in FamilyBits.of(2, 5) and len(FamilyBits.of(2, 5)) == 2
