"""Split-minimal families of three-node patterns and their graph classes.

The enumeration starts from every non-empty set of full three-node
patterns (8-bit vectors over catalogue indices 0..7), keeps one
representative per mirror/complement orbit, then repeatedly replaces
pairs of patterns that are the two halves of a split by the pattern
they come from.  The result is 87 families; each carries a class label.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import NotInCatalogError
from .patterns import FamilyBits, PatternFamily, decode_family, encode_family

# Triplets (a, b, c): patterns a and b are the two halves of splitting c.
SPLIT_LIST_A: tuple[tuple[int, int, int], ...] = (
    (0, 1, 16), (0, 2, 12), (0, 4, 8), (1, 3, 13), (1, 5, 9), (2, 3, 17),
    (2, 6, 10), (3, 7, 11), (4, 5, 18), (4, 6, 14), (5, 7, 15), (6, 7, 19),
)
SPLIT_LIST_B: tuple[tuple[int, int, int], ...] = (
    (8, 9, 22), (8, 10, 20), (9, 11, 21), (10, 11, 23), (12, 13, 24), (12, 14, 20),
    (13, 15, 21), (14, 15, 25), (16, 17, 24), (16, 18, 22), (17, 19, 23), (18, 19, 25),
)
SPLIT_LIST_C: tuple[tuple[int, int, int], ...] = ((20, 21, 26), (22, 23, 26), (24, 25, 26))
SPLIT_TRIPLETS = SPLIT_LIST_A + SPLIT_LIST_B + SPLIT_LIST_C


def complement_bits8(v: int) -> int:
    """Complement of a full-pattern family: index i maps to 7 - i, i.e. bit reversal."""
    return int(f"{v:08b}"[::-1], 2)


def exchange_bits8(v: int) -> int:
    """Mirror of a full-pattern family: swap bits 1<->4 and 3<->6."""
    out = v & ~(0b1011010)
    for a, b in ((1, 4), (3, 6)):
        out |= (v >> a & 1) << b
        out |= (v >> b & 1) << a
    return out


def _vectors_in_scan_order():
    # Bit tuples (b0, ..., b7) in lexicographically decreasing order; this
    # order picks exactly the representatives used by the catalog.
    for t in itertools.product((1, 0), repeat=8):
        v = sum(bit << i for i, bit in enumerate(t))
        if v:
            yield v


def enumerate_full_representatives(order: str = "listing") -> list[int]:
    """One 8-bit vector per mirror/complement orbit, in scan order.

    ``order="listing"`` scans bit tuples with bit 0 most significant,
    from all-ones down; ``order="ascending"`` scans numeric values 1..255.
    Both keep one vector per orbit; they differ in which one.
    """
    if order == "listing":
        scan = list(_vectors_in_scan_order())
    elif order == "ascending":
        scan = list(range(1, 256))
    else:
        raise ValueError(f"unknown scan order {order!r}")
    kept: list[int] = []
    kept_set: set[int] = set()
    for q in scan:
        c = complement_bits8(q)
        e = exchange_bits8(q)
        if c in kept_set or e in kept_set or exchange_bits8(c) in kept_set:
            continue
        kept.append(q)
        kept_set.add(q)
    return kept


def reduce_to_split_minimal(f: FamilyBits | int) -> FamilyBits:
    """Apply the split triplets once each, list A then B then C."""
    bits = f.bits if isinstance(f, FamilyBits) else int(f)
    for a, b, c in SPLIT_TRIPLETS:
        if bits >> a & 1 and bits >> b & 1:
            bits &= ~((1 << a) | (1 << b))
            bits |= 1 << c
    return FamilyBits(bits)


def enumerate_split_minimal(order: str = "listing") -> list[FamilyBits]:
    """The split-minimal families, deduplicated, in first-seen order."""
    out: list[FamilyBits] = []
    seen: set[FamilyBits] = set()
    for v in enumerate_full_representatives(order):
        r = reduce_to_split_minimal(v)
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


class ClassName(str, enum.Enum):
    FOREST = "forest"
    LINEAR_FOREST = "linear-forest"
    STAR = "star"
    INTERVAL = "interval"
    SPLIT = "split"
    BIPARTITE = "bipartite"
    CHORDAL = "chordal"
    COMPARABILITY = "comparability"
    TRIANGLE_FREE = "triangle-free"
    PERMUTATION = "permutation"
    THRESHOLD = "threshold"
    PROPER_INTERVAL = "proper-interval"
    CATERPILLAR = "caterpillar"
    TRIVIALLY_PERFECT = "trivially-perfect"
    BIPARTITE_CHAIN = "bipartite-chain"
    TWO_STAR = "two-star"
    ONE_SPLIT = "one-split"
    AUGMENTED_CLIQUE = "augmented-clique"
    BIPARTITE_PERMUTATION = "bipartite-permutation"
    TRIANGLE_FREE_CO_CHORDAL = "triangle-free-co-chordal"
    CLIQUE = "clique"
    COMPLETE_BIPARTITE = "complete-bipartite"
    TRIVIAL = "trivial"

    def __str__(self) -> str:
        return self.value


class Convention(str, enum.Enum):
    """How a labelled class treats isolated nodes and extra components.

    unrestricted                   the class as defined
    allows-isolated-nodes          as defined; the class admits extra isolated nodes
    single-nontrivial-component    at most one component with an edge
    forbids-isolated-nodes         single nontrivial component and no isolated node,
                                   unless the graph is edgeless
    isolated-nodes-beside-small-clique
                                   single nontrivial component; isolated nodes only
                                   when that component has fewer than three nodes
    """

    UNRESTRICTED = "unrestricted"
    ALLOWS_ISOLATED = "allows-isolated-nodes"
    SINGLE_COMPONENT = "single-nontrivial-component"
    FORBIDS_ISOLATED = "forbids-isolated-nodes"
    SMALL_CLIQUE_ISOLATED = "isolated-nodes-beside-small-clique"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassLabel:
    class_id: ClassName
    complemented: bool = False
    convention: Convention = Convention.UNRESTRICTED

    @property
    def is_trivial(self) -> bool:
        return self.class_id is ClassName.TRIVIAL

    def __str__(self) -> str:
        name = ("co-" if self.complemented else "") + self.class_id.value
        if self.convention is Convention.UNRESTRICTED:
            return name
        return f"{name} ({self.convention.value})"


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    family: FamilyBits
    label: ClassLabel
    title: str

    @property
    def patterns(self) -> PatternFamily:
        return decode_family(self.family)


_C = ClassName
_V = Convention
_U, _A, _S, _F = _V.UNRESTRICTED, _V.ALLOWS_ISOLATED, _V.SINGLE_COMPONENT, _V.FORBIDS_ISOLATED

# (index, family, class, complemented, convention, title)
_TABLE = (
    (1, (2,), _C.COMPARABILITY, False, _U, "Comparability graphs"),
    (2, (2, 5), _C.PERMUTATION, False, _U, "Permutation graphs"),
    (3, (1,), _C.CHORDAL, False, _U, "Chordal graphs"),
    (4, (1, 6), _C.THRESHOLD, False, _A, "Threshold graphs"),
    (5, (9,), _C.INTERVAL, False, _U, "Interval graphs"),
    (6, (1, 4), _C.PROPER_INTERVAL, False, _U, "Proper interval graphs"),
    (7, (4, 9), _C.PROPER_INTERVAL, False, _U, "Proper interval graphs"),
    (8, (13,), _C.SPLIT, False, _A, "Split graphs"),
    (9, (4, 13), _C.AUGMENTED_CLIQUE, False, _A, "Augmented cliques"),
    (10, (13, 14), _C.ONE_SPLIT, False, _U, "1-Split"),
    (11, (1, 2), _C.TRIVIALLY_PERFECT, False, _U, "Trivially perfect graphs"),
    (12, (1, 10), _C.THRESHOLD, False, _A, "Threshold graphs"),
    (13, (2, 9), _C.TRIVIALLY_PERFECT, False, _U, "Trivially perfect graphs"),
    (14, (9, 10), _C.THRESHOLD, False, _A, "Threshold graphs"),
    (15, (1, 2, 4), _C.CLIQUE, False, _U, "Cliques"),
    (16, (2, 4, 9), _C.CLIQUE, False, _U, "Cliques"),
    (17, (2, 13), _C.THRESHOLD, False, _A, "Threshold graphs"),
    (18, (10, 13), _C.AUGMENTED_CLIQUE, True, _A, "Co-augmented-cliques"),
    (19, (2, 5, 13), _C.THRESHOLD, False, _A, "Threshold graphs"),
    (20, (2, 4, 13), _C.CLIQUE, False, _S, "Connected cliques"),
    (21, (4, 10, 13), _C.CLIQUE, False, _V.SMALL_CLIQUE_ISOLATED,
     "Connected cliques (without isolated nodes or of size < 3)"),
    (22, (2, 13, 18), _C.CLIQUE, False, _S, "Connected cliques"),
    (23, (10, 13, 18), _C.CLIQUE, False, _F, "Connected cliques"),
    (24, (0,), _C.TRIANGLE_FREE, False, _U, "Triangle-free graphs"),
    (25, (0, 7), _C.TRIVIAL, False, _U, "Trivial"),
    (26, (0, 5), _C.BIPARTITE_PERMUTATION, False, _U, "Bipartite permutation"),
    (27, (0, 3), _C.TRIANGLE_FREE_CO_CHORDAL, False, _U, "Triangle-free and co-chordal"),
    (28, (0, 3, 6), _C.BIPARTITE_CHAIN, False, _A, "Bipartite chain graphs"),
    (29, (0, 3, 5), _C.COMPLETE_BIPARTITE, False, _S, "Complete bipartite graphs"),
    (30, (0, 3, 5, 6), _C.COMPLETE_BIPARTITE, False, _F,
     "Complete bipartite graphs (without isolated nodes)"),
    (31, (12,), _C.BIPARTITE, False, _U, "Bipartite graphs"),
    (32, (7, 12), _C.TRIVIAL, False, _U, "Trivial"),
    (33, (5, 12), _C.BIPARTITE_PERMUTATION, False, _U, "Bipartite permutation graphs"),
    (34, (12, 15), _C.TRIVIAL, False, _U, "Trivial"),
    (35, (3, 12), _C.BIPARTITE_CHAIN, False, _A, "Bipartite chain graphs"),
    (36, (3, 6, 12), _C.BIPARTITE_CHAIN, False, _A, "Bipartite chain graphs"),
    (37, (3, 5, 12), _C.COMPLETE_BIPARTITE, False, _S, "Complete bipartite graphs"),
    # Listed as bipartite chain without isolated nodes; P4 has no avoiding
    # ordering, and the class is exactly complete bipartite without isolated nodes.
    (38, (3, 5, 6, 12), _C.COMPLETE_BIPARTITE, False, _F,
     "Complete bipartite graphs (without isolated nodes)"),
    (39, (16,), _C.FOREST, False, _U, "Forests"),
    (40, (7, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (41, (6, 16), _C.STAR, False, _S, "Stars"),
    (42, (16, 19), _C.TRIVIAL, False, _U, "Trivial"),
    (43, (5, 16), _C.CATERPILLAR, False, _U, "Caterpillars"),
    (44, (15, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (45, (5, 6, 16), _C.STAR, False, _S, "Stars"),
    (46, (4, 16), _C.LINEAR_FOREST, False, _U, "Linear forests"),
    (47, (4, 7, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (48, (22,), _C.LINEAR_FOREST, False, _U, "Linear forests"),
    (49, (7, 22), _C.TRIVIAL, False, _U, "Trivial"),
    (50, (3, 16), _C.TWO_STAR, False, _A, "2-Stars"),
    (51, (11, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (52, (3, 6, 16), _C.STAR, False, _S, "Stars"),
    (53, (3, 5, 16), _C.STAR, False, _S, "Stars"),
    (54, (3, 5, 6, 16), _C.STAR, False, _F, "Stars (without isolated nodes)"),
    (55, (3, 4, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (56, (4, 11, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (57, (3, 14, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (58, (11, 14, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (59, (3, 22), _C.TRIVIAL, False, _U, "Trivial"),
    (60, (3, 6, 22), _C.TRIVIAL, False, _U, "Trivial"),
    # Entries 61 and 65 admit several stars (2K2 has an avoiding ordering).
    (61, (2, 16), _C.STAR, False, _U, "Star forests"),
    (62, (2, 7, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (63, (10, 16), _C.STAR, False, _S, "Stars"),
    (64, (7, 10, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (65, (2, 5, 16), _C.STAR, False, _U, "Star forests"),
    (66, (2, 15, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (67, (5, 10, 16), _C.STAR, False, _S, "Stars"),
    (68, (10, 15, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (69, (2, 4, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (70, (2, 4, 7, 16), _C.TRIVIAL, False, _U, "Trivial"),
    (71, (2, 22), _C.TRIVIAL, False, _U, "Trivial"),
    (72, (2, 7, 22), _C.TRIVIAL, False, _U, "Trivial"),
    (73, (24,), _C.STAR, False, _S, "Stars"),
    (74, (7, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (75, (6, 24), _C.STAR, False, _S, "Stars"),
    (76, (19, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (77, (5, 24), _C.STAR, False, _S, "Stars"),
    (78, (15, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (79, (5, 6, 24), _C.STAR, False, _F, "Stars (without isolated nodes)"),
    (80, (4, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (81, (4, 7, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (82, (14, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (83, (7, 14, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (84, (18, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (85, (7, 18, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (86, (6, 18, 24), _C.TRIVIAL, False, _U, "Trivial"),
    (87, (26,), _C.TRIVIAL, False, _U, "Trivial"),
)

CATALOG_ENTRIES: tuple[CatalogEntry, ...] = tuple(
    CatalogEntry(i, FamilyBits.of(*fam), ClassLabel(cls, comp, conv), title)
    for i, fam, cls, comp, conv, title in _TABLE
)
_BY_BITS = {e.family: e for e in CATALOG_ENTRIES}
_LISTING_REPS = frozenset(enumerate_full_representatives())


def catalog_entry(f: FamilyBits | int | PatternFamily) -> CatalogEntry:
    if isinstance(f, PatternFamily):
        f = encode_family(f)
    elif isinstance(f, int):
        f = FamilyBits(f)
    try:
        return _BY_BITS[f]
    except KeyError:
        raise NotInCatalogError(f"family {f} is not one of the {len(CATALOG_ENTRIES)} split-minimal families") from None


def orbit_entry(v: int) -> tuple[CatalogEntry, bool]:
    """Catalog entry for the mirror/complement orbit of the 8-bit vector ``v``.

    The flag is True when ``v`` defines the complement of the entry's class.
    """
    for comp in (False, True):
        c = complement_bits8(v) if comp else v
        for w in (c, exchange_bits8(c)):
            if w in _LISTING_REPS:
                return catalog_entry(reduce_to_split_minimal(w)), comp
    raise NotInCatalogError(f"no catalog entry for vector {v}")  # pragma: no cover


def scan(order: str = "listing") -> list[tuple[FamilyBits, CatalogEntry, bool]]:
    """``enumerate_split_minimal`` with each family's catalog entry and complement flag."""
    out = []
    seen: set[FamilyBits] = set()
    for v in enumerate_full_representatives(order):
        r = reduce_to_split_minimal(v)
        if r not in seen:
            seen.add(r)
            out.append((r, *orbit_entry(v)))
    return out


def class_label(f: FamilyBits | int | PatternFamily) -> ClassLabel:
    return catalog_entry(f).label


def entry_by_index(index: int) -> CatalogEntry:
    if not 1 <= index <= len(CATALOG_ENTRIES):
        raise NotInCatalogError(f"catalog entry index must be in 1..{len(CATALOG_ENTRIES)}, got {index}")
    return CATALOG_ENTRIES[index - 1]
