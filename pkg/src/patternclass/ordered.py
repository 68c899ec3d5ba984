"""Pattern occurrence in ordered graphs, and the exhaustive ordering oracle."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .errors import OracleLimitError, PatternError
from .graph import UndirectedGraph, VertexOrdering
from .patterns import FamilyBits, PairState, Pattern, PatternFamily, decode_family, parse_pattern, pattern_name

DEFAULT_ORACLE_LIMIT = 8


def default_oracle_limit() -> int:
    raw = os.environ.get("PATTERNCLASS_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_ORACLE_LIMIT


@dataclass(frozen=True)
class OccurrenceWitness:
    """An occurrence of ``pattern``: 1-based ordering positions and the vertices there."""

    pattern: Pattern
    positions: tuple[int, ...]
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.positions) != self.pattern.size:
            raise PatternError("witness length must equal the pattern size")
        if any(a >= b for a, b in zip(self.positions, self.positions[1:])):
            raise PatternError("witness positions must be strictly increasing")

    def to_dict(self) -> dict:
        return {
            "pattern": pattern_name(self.pattern),
            "positions": list(self.positions),
            "vertices": list(self.vertices),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OccurrenceWitness":
        return cls(parse_pattern(d["pattern"]), tuple(d["positions"]), tuple(d["vertices"]))


def as_family(f) -> PatternFamily:
    if isinstance(f, PatternFamily):
        return f
    if isinstance(f, Pattern):
        return PatternFamily([f])
    if isinstance(f, FamilyBits):
        return decode_family(f)
    return PatternFamily(f)


def as_ordering(ordering, n: int | None = None) -> VertexOrdering:
    o = ordering if isinstance(ordering, VertexOrdering) else VertexOrdering(ordering)
    if n is not None and len(o) != n:
        raise ValueError(f"ordering has {len(o)} vertices, graph has {n}")
    return o


def occurs_at(g: UndirectedGraph, ordering, p: Pattern, positions: Sequence[int]) -> bool:
    """Whether the vertices at the given 1-based positions realize ``p``."""
    o = as_ordering(ordering, g.n)
    if len(positions) != p.size:
        raise PatternError(f"pattern has {p.size} vertices but {len(positions)} positions were given")
    if any(not 1 <= x <= g.n for x in positions):
        raise PatternError(f"positions must lie in 1..{g.n}")
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise PatternError("positions must be strictly increasing")
    verts = [o.vertex_at(x - 1) for x in positions]
    for (i, j), s in p.pairs():
        if s == PairState.UNDECIDED:
            continue
        if g.has_edge(verts[i - 1], verts[j - 1]) != (s == PairState.EDGE):
            return False
    return True


def _permuted(g: UndirectedGraph, o: VertexOrdering) -> np.ndarray:
    a = g.dense()
    return np.ascontiguousarray(a[np.ix_(o.order, o.order)])


def find_violation(g: UndirectedGraph, ordering, family) -> OccurrenceWitness | None:
    """First occurrence of a family pattern in the ordered graph, or None.

    Patterns are tried in family order (catalogue index first); within a
    pattern the lexicographically least position tuple is reported.
    """
    o = as_ordering(ordering, g.n)
    fam = as_family(family)
    if not fam:
        return None
    a = _permuted(g, o)
    for p in fam:
        hit = kernels.first_violation(a, p.matrix())
        if hit is not None:
            return OccurrenceWitness(p, tuple(x + 1 for x in hit), tuple(o.vertex_at(x) for x in hit))
    return None


def avoids(g: UndirectedGraph, ordering, family) -> bool:
    return find_violation(g, ordering, family) is None


def oracle_membership(g: UndirectedGraph, family, limit: int | None = None) -> VertexOrdering | None:
    """First ordering (lexicographic permutation order) avoiding the family, or None.

    Searches prefixes depth-first and prunes as soon as a prefix contains an
    occurrence; refuses graphs with more than ``limit`` vertices.
    """
    limit = default_oracle_limit() if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(g.n, limit)
    fam = as_family(family)
    found = kernels.oracle_search(g.dense(), [p.matrix() for p in fam])
    return None if found is None else VertexOrdering(found)


def is_member(g: UndirectedGraph, family, limit: int | None = None) -> bool:
    return oracle_membership(g, family, limit) is not None


def all_orderings(n: int) -> Iterable[VertexOrdering]:
    import itertools

    for perm in itertools.permutations(range(n)):
        yield VertexOrdering(perm)
