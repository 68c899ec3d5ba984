"""Straight-line patterns and (a, b)-colorings.

A word over {E, N} of length L defines a pattern on L + 1 vertices whose
only decided pairs are the consecutive ones.  An ordering avoids it iff
the graph splits into one part per letter: an independent set for E and
a clique for N.  Part ``i`` always corresponds to letter ``i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidCertificateError, OracleLimitError, PatternError
from .graph import UndirectedGraph, VertexOrdering
from .ordered import as_ordering, find_violation, oracle_membership
from .patterns import PairState, Pattern, PatternFamily

INDEPENDENT = "independent"
CLIQUE = "clique"
DEFAULT_COLOR_LIMIT = 10


@dataclass(frozen=True)
class LineWord:
    letters: tuple[PairState, ...]

    def __post_init__(self):
        if not self.letters:
            raise PatternError("a line word needs at least one letter")
        if any(s not in (PairState.EDGE, PairState.NONEDGE) for s in self.letters):
            raise PatternError("line word letters must be EDGE or NONEDGE")

    @classmethod
    def parse(cls, text: "str | LineWord | Iterable[PairState]") -> "LineWord":
        if isinstance(text, LineWord):
            return text
        if isinstance(text, str):
            t = text.strip().upper()
            if not t or set(t) - {"E", "N"}:
                raise PatternError(f"line word must be a non-empty string over E/N, got {text!r}")
            return cls(tuple(PairState.EDGE if c == "E" else PairState.NONEDGE for c in t))
        return cls(tuple(PairState(s) for s in text))

    @classmethod
    def edges(cls, k: int) -> "LineWord":
        return cls((PairState.EDGE,) * k)

    @property
    def a(self) -> int:
        return sum(1 for s in self.letters if s == PairState.EDGE)

    @property
    def b(self) -> int:
        return len(self.letters) - self.a

    def kinds(self) -> tuple[str, ...]:
        return tuple(INDEPENDENT if s == PairState.EDGE else CLIQUE for s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(s.letter for s in self.letters)


def straight_line_pattern(w: LineWord | str) -> Pattern:
    w = LineWord.parse(w)
    k = len(w) + 1
    return Pattern.from_pairs(
        k,
        edges=[(i + 1, i + 2) for i, s in enumerate(w.letters) if s == PairState.EDGE],
        nonedges=[(i + 1, i + 2) for i, s in enumerate(w.letters) if s == PairState.NONEDGE],
    )


@dataclass(frozen=True)
class ABColoring:
    """``assignment[v]`` is the part of vertex ``v``; ``kinds[i]`` tags part ``i``."""

    assignment: tuple[int, ...]
    kinds: tuple[str, ...]

    @property
    def parts(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.kinds]
        for v, p in enumerate(self.assignment):
            out[p].append(v)
        return out

    @property
    def a(self) -> int:
        return sum(1 for k in self.kinds if k == INDEPENDENT)

    @property
    def b(self) -> int:
        return sum(1 for k in self.kinds if k == CLIQUE)

    def problems(self, g: UndirectedGraph) -> list[str]:
        out = []
        if len(self.assignment) != g.n:
            out.append(f"coloring covers {len(self.assignment)} vertices, graph has {g.n}")
            return out
        if any(not 0 <= p < len(self.kinds) for p in self.assignment):
            out.append("vertex assigned to a non-existent part")
            return out
        for i, (kind, part) in enumerate(zip(self.kinds, self.parts)):
            for x, u in enumerate(part):
                for v in part[x + 1:]:
                    adjacent = g.has_edge(u, v)
                    if kind == INDEPENDENT and adjacent:
                        out.append(f"part {i} is independent but contains edge {(u, v)}")
                    if kind == CLIQUE and not adjacent:
                        out.append(f"part {i} is a clique but misses edge {(u, v)}")
        return out

    def is_valid(self, g: UndirectedGraph) -> bool:
        return not self.problems(g)

    def to_dict(self) -> dict:
        return {"parts": [{"kind": k, "vertices": p} for k, p in zip(self.kinds, self.parts)]}


def coloring_from_ordering(g: UndirectedGraph, ordering, w: LineWord | str) -> ABColoring:
    """Peel parts from the right end of the ordering, last letter first.

    For an E letter the part is every remaining vertex with no remaining
    neighbour to its right; for an N letter, no remaining non-neighbour.
    """
    w = LineWord.parse(w)
    o = as_ordering(ordering, g.n)
    pattern = straight_line_pattern(w)
    wit = find_violation(g, o, PatternFamily([pattern]))
    if wit is not None:
        raise InvalidCertificateError(f"ordering contains the pattern {w} at positions {wit.positions}", wit)
    adj = g.adjacency
    remaining = list(o)
    assignment = [-1] * g.n
    for i in range(len(w) - 1, -1, -1):
        want_edges = w.letters[i] == PairState.EDGE
        part = []
        keep = []
        for x, v in enumerate(remaining):
            later = remaining[x + 1:]
            if want_edges:
                free = not any(u in adj[v] for u in later)
            else:
                free = all(u in adj[v] for u in later)
            (part if free else keep).append(v)
        for v in part:
            assignment[v] = i
        remaining = keep
    if remaining:  # pragma: no cover - excluded by the avoidance check
        raise InvalidCertificateError("peeling left vertices unassigned")
    return ABColoring(tuple(assignment), w.kinds())


def ordering_from_coloring(g: UndirectedGraph, col: ABColoring, w: LineWord | str) -> VertexOrdering:
    """Concatenate the parts in letter order; the result avoids the straight-line pattern."""
    w = LineWord.parse(w)
    if col.kinds != w.kinds():
        raise PatternError(f"coloring parts {col.kinds} do not match the letters of {w}")
    problems = col.problems(g)
    if problems:
        raise PatternError("invalid coloring: " + "; ".join(problems[:3]))
    order = VertexOrdering([v for part in col.parts for v in part])
    wit = find_violation(g, order, PatternFamily([straight_line_pattern(w)]))
    if wit is not None:  # pragma: no cover - cannot happen for a valid coloring
        raise InvalidCertificateError("constructed ordering contains the pattern", wit)
    return order


def ab_colorable_oracle(g: UndirectedGraph, w: LineWord | str, limit: int = DEFAULT_COLOR_LIMIT) -> ABColoring | None:
    """Exhaustive part assignment with pruning; part ``i`` has the kind of letter ``i``."""
    w = LineWord.parse(w)
    if g.n > limit:
        raise OracleLimitError(g.n, limit, "coloring oracle")
    kinds = w.kinds()
    adj = g.adjacency
    parts: list[list[int]] = [[] for _ in kinds]
    assignment = [-1] * g.n

    def fits(v: int, i: int) -> bool:
        if kinds[i] == INDEPENDENT:
            return not any(u in adj[v] for u in parts[i])
        return all(u in adj[v] for u in parts[i])

    def place(v: int) -> bool:
        if v == g.n:
            return True
        tried_empty = set()
        for i, kind in enumerate(kinds):
            if not parts[i]:
                # empty parts of the same kind are interchangeable
                if kind in tried_empty:
                    continue
                tried_empty.add(kind)
            if fits(v, i):
                parts[i].append(v)
                assignment[v] = i
                if place(v + 1):
                    return True
                parts[i].pop()
                assignment[v] = -1
        return False

    if not place(0):
        return None
    return ABColoring(tuple(assignment), kinds)


def mirsky_chromatic(g: UndirectedGraph, limit: int | None = None) -> int:
    """Least k such that some ordering avoids the straight line with k edges."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if oracle_membership(g, PatternFamily([straight_line_pattern(LineWord.edges(k))]), limit) is not None:
            return k
    raise AssertionError("unreachable: n edges in a row cannot occur on n vertices")  # pragma: no cover


def chromatic_number(g: UndirectedGraph) -> int:
    """Exact chromatic number by backtracking (no orderings involved)."""
    if g.n == 0:
        return 0
    adj = g.adjacency
    order = sorted(range(g.n), key=lambda v: -len(adj[v]))
    color = [-1] * g.n

    def colorable(k: int, x: int, used: int) -> bool:
        if x == g.n:
            return True
        v = order[x]
        taken = {color[u] for u in adj[v] if color[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if colorable(k, x + 1, max(used, c + 1)):
                    return True
                color[v] = -1
        return False

    k = 1
    while not colorable(k, 0, 0):
        k += 1
    return k


def words(max_len: int) -> list[LineWord]:
    """Every word over {E, N} with 1..max_len letters."""
    return [LineWord.parse("".join(t)) for L in range(1, max_len + 1) for t in itertools.product("EN", repeat=L)]

