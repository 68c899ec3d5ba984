"""Graph classes characterized by forbidden patterns in vertex orderings.

Quick start::

    >>> from patternclass import path_graph, recognize
    >>> recognize(path_graph(4), "interval").is_member
    True
"""

from ._backend import BACKEND
from .classes import RECOGNIZABLE, ClassId, defining_family, definition_check
from .coloring import (
    ABColoring,
    LineWord,
    ab_colorable_oracle,
    chromatic_number,
    coloring_from_ordering,
    mirsky_chromatic,
    ordering_from_coloring,
    straight_line_pattern,
)
from .errors import (
    FamilyParseError,
    GraphParseError,
    InvalidCertificateError,
    NotInCatalogError,
    OracleLimitError,
    PatternError,
)
from .families import (
    CATALOG_ENTRIES,
    CatalogEntry,
    ClassLabel,
    ClassName,
    Convention,
    catalog_entry,
    class_label,
    enumerate_split_minimal,
)
from .graph import (
    UndirectedGraph,
    VertexOrdering,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from .io import GraphDocument, GraphFormat, emit_graph, parse_family, parse_graph, parse_graphs, small_graphs
from .ordered import OccurrenceWitness, avoids, find_violation, is_member, occurs_at, oracle_membership
from .patterns import (
    CATALOG,
    FamilyBits,
    PairState,
    Pattern,
    PatternFamily,
    catalog_pattern,
    complement,
    mirror,
    parse_pattern,
    split,
)
from .recognizers import RecognitionResult, Verdict, classify_all, recognize, recognize_chordal_linear
from .search import SearchKind, SearchResult, multi_sweep, run_search

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
