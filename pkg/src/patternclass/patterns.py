"""Ordered trigraph patterns and their algebra.

A pattern on ``k`` vertices assigns one of three states to every pair
``(i, j)`` with ``1 <= i < j <= k``: an edge, a non-edge, or undecided.
Vertices are 1-indexed positions, so ``(1, 3)`` is the pair joining the
first and the last vertex of a three-node pattern.

The 27 three-node patterns carry a fixed numbering (0 = Triangle-Free,
18 = Interval, 26 = No Graph, ...), see :data:`CATALOG_NAMES`.  Full
patterns (no undecided pair) occupy indices 0..7, with index
``4*[12 is non-edge] + 2*[13 is non-edge] + [23 is non-edge]``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import PatternError

Pair = tuple[int, int]


class PairState(enum.IntEnum):
    UNDECIDED = 0
    EDGE = 1
    NONEDGE = 2

    @property
    def letter(self) -> str:
        return "UEN"[self]


def pairs_of(k: int) -> list[Pair]:
    """All pairs ``(i, j)``, ``1 <= i < j <= k``, in lexicographic order."""
    return list(itertools.combinations(range(1, k + 1), 2))


@dataclass(frozen=True)
class Pattern:
    """An ordered trigraph.

    ``states`` lists the state of every pair in :func:`pairs_of` order.
    """

    size: int
    states: tuple[PairState, ...]

    def __post_init__(self):
        if self.size < 2:
            raise PatternError(f"pattern size must be >= 2, got {self.size}")
        expected = self.size * (self.size - 1) // 2
        if len(self.states) != expected:
            raise PatternError(f"pattern of size {self.size} needs {expected} pair states, got {len(self.states)}")
        object.__setattr__(self, "states", tuple(PairState(s) for s in self.states))

    @classmethod
    def from_pairs(cls, size: int, edges: Iterable[Pair] = (), nonedges: Iterable[Pair] = ()) -> "Pattern":
        """Build a pattern from its edge and non-edge sets; other pairs stay undecided."""
        index = {p: t for t, p in enumerate(pairs_of(size))}
        states = [PairState.UNDECIDED] * len(index)
        for pairs, state in ((edges, PairState.EDGE), (nonedges, PairState.NONEDGE)):
            for i, j in pairs:
                key = (min(i, j), max(i, j))
                if key not in index or i == j:
                    raise PatternError(f"pair {(i, j)} is not a pair of a {size}-node pattern")
                if states[index[key]] != PairState.UNDECIDED:
                    raise PatternError(f"pair {key} classified twice")
                states[index[key]] = state
        return cls(size, tuple(states))

    @classmethod
    def from_letters(cls, letters: str) -> "Pattern":
        """Three-node shorthand: ``"NEU"`` is states of (1,2), (1,3), (2,3)."""
        k = 2
        while k * (k - 1) // 2 < len(letters):
            k += 1
        return cls(k, tuple(PairState("UEN".index(c)) for c in letters.upper()))

    def state(self, i: int, j: int) -> PairState:
        if i > j:
            i, j = j, i
        return self.states[self._index[(i, j)]]

    @cached_property
    def _index(self) -> Mapping[Pair, int]:
        return {p: t for t, p in enumerate(pairs_of(self.size))}

    def pairs(self) -> Iterator[tuple[Pair, PairState]]:
        return zip(pairs_of(self.size), self.states)

    @property
    def edges(self) -> frozenset[Pair]:
        return frozenset(p for p, s in self.pairs() if s == PairState.EDGE)

    @property
    def nonedges(self) -> frozenset[Pair]:
        return frozenset(p for p, s in self.pairs() if s == PairState.NONEDGE)

    @property
    def undecided(self) -> frozenset[Pair]:
        return frozenset(p for p, s in self.pairs() if s == PairState.UNDECIDED)

    @property
    def is_full(self) -> bool:
        return PairState.UNDECIDED not in self.states

    @property
    def letters(self) -> str:
        return "".join(s.letter for s in self.states)

    def matrix(self) -> np.ndarray:
        """Symmetric ``k x k`` int8 matrix of pair states (0-indexed), used by the kernels."""
        m = np.zeros((self.size, self.size), dtype=np.int8)
        for (i, j), s in self.pairs():
            m[i - 1, j - 1] = m[j - 1, i - 1] = int(s)
        return m

    def __str__(self) -> str:
        return format_pattern(self)

    def __repr__(self) -> str:
        idx = CATALOG_INDEX.get(self)
        if idx is not None:
            return f"Pattern(#{idx} {CATALOG_NAMES[idx]})"
        return f"Pattern({format_pattern(self)!r})"


# Standard numbering of the 27 three-node patterns: states of (1,2), (1,3), (2,3).
_CATALOG_LETTERS = (
    "EEE", "EEN", "ENE", "ENN", "NEE", "NEN", "NNE", "NNN",
    "UEE", "UEN", "UNE", "UNN",
    "EUE", "EUN", "NUE", "NUN",
    "EEU", "ENU", "NEU", "NNU",
    "UUE", "UUN", "UEU", "UNU", "EUU", "NUU", "UUU",
)

CATALOG_NAMES: tuple[str, ...] = (
    "Triangle-Free", "mirror-Chordal", "Comparability", "co-Chordal",
    "Chordal", "co-Comparability", "mirror-co-Chordal", "co-Triangle-Free",
    "Forest", "mirror-Interval", "mirror-co-Interval", "co-Forest",
    "Bipartite", "Split", "mirror-Split", "co-Bipartite",
    "mirror-Forest", "co-Interval", "Interval", "mirror-co-Forest",
    "mirror-Star", "mirror-co-Star", "Linear Forest", "co-Linear Forest",
    "Star", "co-Star", "No Graph",
)

# Alternative spellings accepted by the name parser.
_NAME_ALIASES = {"co-split": 14}

CATALOG: tuple[Pattern, ...] = tuple(Pattern.from_letters(s) for s in _CATALOG_LETTERS)
CATALOG_INDEX: dict[Pattern, int] = {p: i for i, p in enumerate(CATALOG)}

# Four-node patterns with known classes (outerplanar, queue number one, p-box).
OUTERPLANAR = Pattern.from_pairs(4, edges=[(1, 3), (2, 4)])
QUEUE_ONE = Pattern.from_pairs(4, edges=[(1, 4), (2, 3)])
P_BOX = Pattern.from_pairs(4, edges=[(1, 3), (2, 4)], nonedges=[(2, 3)])
EXTRA_PATTERNS: dict[str, Pattern] = {
    "Outerplanar": OUTERPLANAR,
    "Queue-1": QUEUE_ONE,
    "p-Box": P_BOX,
}

# Two-node patterns: forbidding EDGE gives independent sets, NONEDGE cliques.
TWO_EDGE = Pattern(2, (PairState.EDGE,))
TWO_NONEDGE = Pattern(2, (PairState.NONEDGE,))
TWO_UNDECIDED = Pattern(2, (PairState.UNDECIDED,))


def catalog_pattern(index: int) -> Pattern:
    if not isinstance(index, (int, np.integer)) or not 0 <= index <= 26:
        raise PatternError(f"catalog index must be in 0..26, got {index!r}")
    return CATALOG[int(index)]


def catalog_index(p: Pattern) -> int | None:
    return CATALOG_INDEX.get(p)


def pattern_name(p: Pattern) -> str:
    idx = CATALOG_INDEX.get(p)
    if idx is not None:
        return CATALOG_NAMES[idx]
    for name, q in EXTRA_PATTERNS.items():
        if q == p:
            return name
    return format_pattern(p)


def mirror(p: Pattern) -> Pattern:
    """Reverse the vertex order."""
    k = p.size
    return Pattern(k, tuple(p.state(k + 1 - j, k + 1 - i) for i, j in pairs_of(k)))


_SWAP = {PairState.EDGE: PairState.NONEDGE, PairState.NONEDGE: PairState.EDGE, PairState.UNDECIDED: PairState.UNDECIDED}


def complement(p: Pattern) -> Pattern:
    """Exchange edges and non-edges."""
    return Pattern(p.size, tuple(_SWAP[s] for s in p.states))


def split(p: Pattern, pair: Pair) -> tuple[Pattern, Pattern]:
    """Decide an undecided pair both ways: (as edge, as non-edge)."""
    i, j = min(pair), max(pair)
    if not (1 <= i < j <= p.size):
        raise PatternError(f"pair {pair} is not a pair of a {p.size}-node pattern")
    if p.state(i, j) != PairState.UNDECIDED:
        raise PatternError(f"pair {(i, j)} is already decided ({p.state(i, j).name})")
    t = p._index[(i, j)]
    as_edge = list(p.states)
    as_edge[t] = PairState.EDGE
    as_non = list(p.states)
    as_non[t] = PairState.NONEDGE
    return Pattern(p.size, tuple(as_edge)), Pattern(p.size, tuple(as_non))


def full_expansion(p: Pattern) -> frozenset[Pattern]:
    """All full patterns obtained by splitting every undecided pair."""
    open_pairs = sorted(p.undecided)
    out = []
    for choice in itertools.product((PairState.EDGE, PairState.NONEDGE), repeat=len(open_pairs)):
        states = list(p.states)
        for pair, s in zip(open_pairs, choice):
            states[p._index[pair]] = s
        out.append(Pattern(p.size, tuple(states)))
    return frozenset(out)


def is_extension(p2: Pattern, p1: Pattern) -> bool:
    """True iff ``p2`` is obtained from ``p1`` by adding vertices and deciding pairs.

    Brute force over order-preserving injections of ``p1``'s positions.
    """
    if p2.size < p1.size:
        return False
    decided = [(i, j, s) for (i, j), s in p1.pairs() if s != PairState.UNDECIDED]
    for image in itertools.combinations(range(1, p2.size + 1), p1.size):
        if all(p2.state(image[i - 1], image[j - 1]) == s for i, j, s in decided):
            return True
    return False


def _sort_key(p: Pattern):
    idx = CATALOG_INDEX.get(p)
    return (0, idx, 0, ()) if idx is not None else (1, 0, p.size, tuple(p.states))


class PatternFamily(frozenset):
    """A finite set of patterns.

    Iteration follows a fixed order: catalogued three-node patterns by
    index first, then everything else by size and states.  Witness
    tie-breaking relies on that order.
    """

    def __new__(cls, patterns: Iterable[Pattern] = ()):
        patterns = list(patterns)
        for p in patterns:
            if not isinstance(p, Pattern):
                raise PatternError(f"family members must be Pattern, got {type(p).__name__}")
        return super().__new__(cls, patterns)

    @classmethod
    def of(cls, *indices: int) -> "PatternFamily":
        return cls(catalog_pattern(i) for i in indices)

    def ordered(self) -> list[Pattern]:
        return sorted(frozenset.__iter__(self), key=_sort_key)

    def __iter__(self):
        return iter(self.ordered())

    def mirror(self) -> "PatternFamily":
        return PatternFamily(mirror(p) for p in self)

    def complement(self) -> "PatternFamily":
        return PatternFamily(complement(p) for p in self)

    def union(self, *others) -> "PatternFamily":
        return PatternFamily(frozenset.union(self, *others))

    def extends(self, other: "PatternFamily") -> bool:
        """Family extension: each of ``other`` has an extension here and each here extends one of ``other``."""
        return all(any(is_extension(q, p) for q in self) for p in other) and all(
            any(is_extension(q, p) for p in other) for q in self
        )

    def __repr__(self) -> str:
        return "PatternFamily(" + ", ".join(repr(p) for p in self) + ")"


@dataclass(frozen=True, order=True)
class FamilyBits:
    """27-bit encoding of a family of three-node catalogue patterns."""

    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << 27:
            raise PatternError(f"family bits out of range: {self.bits}")

    @classmethod
    def of(cls, *indices: int) -> "FamilyBits":
        bits = 0
        for i in indices:
            catalog_pattern(i)
            bits |= 1 << i
        return cls(bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(27) if self.bits >> i & 1)

    def __iter__(self):
        return iter(self.indices())

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def family(self) -> PatternFamily:
        return decode_family(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.indices())) + "]"


def encode_family(f: Iterable[Pattern]) -> FamilyBits:
    bits = 0
    for p in f:
        if p.size != 3:
            raise PatternError(f"only three-node patterns have a bit encoding (got size {p.size})")
        bits |= 1 << CATALOG_INDEX[p]
    return FamilyBits(bits)


def decode_family(bits: FamilyBits | int) -> PatternFamily:
    if isinstance(bits, int):
        bits = FamilyBits(bits)
    return PatternFamily(CATALOG[i] for i in bits.indices())


# -- textual syntax -------------------------------------------------------

_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def format_pattern(p: Pattern) -> str:
    """Render as ``k; E:(i,j),...; N:(i,j),...`` (undecided pairs unlisted)."""
    def fmt(pairs):
        return ",".join(f"({i},{j})" for i, j in sorted(pairs))
    return f"{p.size}; E:{fmt(p.edges)}; N:{fmt(p.nonedges)}"


def parse_pattern(text: str) -> Pattern:
    """Parse the inline syntax, a ``#index`` reference, or a catalogue name."""
    s = text.strip()
    if ";" not in s:
        for name, q in EXTRA_PATTERNS.items():
            if _norm(name) == _norm(s):
                return q
        return catalog_pattern(lookup_name(s))
    head, *sections = (part.strip() for part in s.split(";"))
    try:
        k = int(head)
    except ValueError:
        raise PatternError(f"pattern size must be an integer, got {head!r}") from None
    edges: list[Pair] = []
    nonedges: list[Pair] = []
    for section in sections:
        if not section:
            continue
        tag, _, body = section.partition(":")
        tag = tag.strip().upper()
        if tag not in ("E", "N") or not _:
            raise PatternError(f"expected 'E:' or 'N:' section, got {section!r}")
        found = [(int(a), int(b)) for a, b in _PAIR_RE.findall(body)]
        leftover = _PAIR_RE.sub("", body).replace(",", "").strip()
        if leftover:
            raise PatternError(f"unparseable pair list {body!r}")
        (edges if tag == "E" else nonedges).extend(found)
    return Pattern.from_pairs(k, edges, nonedges)


def _norm(name: str) -> str:
    return re.sub(r"[\s_]+", " ", name.strip().lower())


_NAME_TABLE = {_norm(n): i for i, n in enumerate(CATALOG_NAMES)}
_NAME_TABLE.update(_NAME_ALIASES)


def lookup_name(token: str) -> int:
    """Resolve ``18``, ``#18`` or ``Interval`` (case-insensitive) to a catalogue index."""
    t = token.strip()
    if t.startswith("#"):
        t = t[1:]
    if t.isdigit():
        idx = int(t)
        if 0 <= idx <= 26:
            return idx
        raise PatternError(f"catalog index must be in 0..26, got {idx}")
    key = _norm(t)
    if key in _NAME_TABLE:
        return _NAME_TABLE[key]
    valid = ", ".join(list(CATALOG_NAMES) + list(EXTRA_PATTERNS))
    raise PatternError(f"unknown pattern name {token!r}; valid names: {valid}")
