"""Exact Grundy number, b-chromatic number and m(G) for small graphs."""
from .bcolor import (
    b_number,
    chromatic_number,
    clique_number,
    domination_report,
    eliminate_classes,
    find_b_coloring,
    is_b_coloring,
    is_proper,
    m_number,
)
from .generators import (
    FamilySpec,
    gen_B,
    gen_caterpillar,
    gen_complete,
    gen_complete_bipartite,
    gen_path,
    gen_R,
    gen_random_tree,
    parse_family,
    r_coloring,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    build_graph,
    degree_sequence,
    emit_graph,
    induced_subgraph,
    is_tree,
    parse_graph,
)
from .grundy import first_fit, grundy_number, grundy_oracle, is_grundy_coloring
from .lab import Caps, ProfileRecord, SweepReport, check_prop3_B, check_tree_bound, emit_report, profile, sweep_family
from .monotone import MonotonicityVerdict, is_b_monotone, sample_b_monotone
from .pattern import find_induced, is_free

__version__ = "0.1.0"
