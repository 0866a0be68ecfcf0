"""Planar Turán numbers of linked and disjoint cycle pairs: exact small-n
search, extremal constructions and 3-face block analysis of plane graphs."""

__version__ = "0.1.0"

from .constructions import (  # noqa: E402
    c3c3_extremal,
    c3c4_extremal,
    double_wheel,
    named_graph,
    small_extremal,
    turan_candidates,
    turan_formula,
)
from .embedding import (  # noqa: E402
    FaceStats,
    RotationSystem,
    all_rotation_systems,
    face_stats,
    is_planar,
    planarity_embed,
    trace_faces,
)
from .face_blocks import (  # noqa: E402
    block_decomposition,
    block_report,
    lemma41_check,
    partition_lemma_check,
    rv_lemma_check,
    rv_partition,
    three_face_star,
)
from .graph import Graph, canonical_form, from_graph6, parse_edge_list, to_graph6  # noqa: E402
from .patterns import (  # noqa: E402
    PatternSpec,
    find_linked_pair,
    is_free,
    linked,
    max_disjoint_cycles,
    t_cycles,
    union,
)
from .search import enumerate_free_planar, exact_ex_p, lemma_harness  # noqa: E402

__all__ = [
    "FaceStats",
    "Graph",
    "PatternSpec",
    "RotationSystem",
    "all_rotation_systems",
    "block_decomposition",
    "block_report",
    "c3c3_extremal",
    "c3c4_extremal",
    "canonical_form",
    "double_wheel",
    "enumerate_free_planar",
    "exact_ex_p",
    "face_stats",
    "find_linked_pair",
    "from_graph6",
    "is_free",
    "is_planar",
    "lemma41_check",
    "lemma_harness",
    "linked",
    "max_disjoint_cycles",
    "named_graph",
    "parse_edge_list",
    "partition_lemma_check",
    "planarity_embed",
    "rv_lemma_check",
    "rv_partition",
    "small_extremal",
    "t_cycles",
    "three_face_star",
    "to_graph6",
    "trace_faces",
    "turan_candidates",
    "turan_formula",
    "union",
]
