"""Nice colorings of k-tuple multisets.

A nice c-coloring assigns colors 0..c-1 to (some of) the tuples so that every
color class contains, for each alphabet element, a tuple avoiding it.  The
package decides and constructs such colorings (linear-time for two colors on
triples, kernel-based for any fixed c and k), translates instances to and
from multi-hypergraphs, and schedules group presentations on top of the
triple solver.
"""

from .core import (
    BudgetExceeded,
    Coloring,
    EmptyInput,
    KTuple,
    Normalization,
    NonUniformTupleSize,
    NotNice,
    PinnedColorClash,
    RepeatedElementInTuple,
    TupleSet,
    WrongTupleSize,
    is_c_fair,
    is_c_fair_anchored,
    is_nice,
    is_special,
    normalize,
    oracle_nice_coloring,
    parse_instance,
    partialize,
    render_instance,
)
from .general import (
    anchor_count,
    collapse_alphabet,
    dedup_capped,
    kernel_size_bound,
    solve_general,
    solve_partial_bounded,
)
from .hypergraph import (
    DegreeMismatch,
    MultiHypergraph,
    VertexColoring,
    from_hypergraph,
    infer_k,
    is_polychromatic,
    is_proper,
    is_triangle_free,
    min_edge_size,
    parse_hypergraph,
    polychromatic_c_colorable,
    proper_2colorable,
    render_hypergraph,
    to_hypergraph,
)
from .scheduler import (
    DegreeExceeded,
    Feasibility,
    GroupBipartite,
    GroupSchedule,
    Infeasible,
    Portfolio,
    Schedule,
    build_groups,
    feasible,
    group_bipartite,
    konig_edge_color,
    make_schedule,
    parse_portfolios,
    render_schedule_text,
    schedule_to_json,
    validate_schedule,
)
from .triple2 import (
    CoreSubset,
    PreconditionViolated,
    color_2_triples,
    decide_2colorable_triples,
    extract_core_subset,
)

__all__ = [
    "BudgetExceeded",
    "Coloring",
    "CoreSubset",
    "DegreeExceeded",
    "DegreeMismatch",
    "EmptyInput",
    "Feasibility",
    "GroupBipartite",
    "GroupSchedule",
    "Infeasible",
    "KTuple",
    "MultiHypergraph",
    "NonUniformTupleSize",
    "Normalization",
    "NotNice",
    "PinnedColorClash",
    "Portfolio",
    "PreconditionViolated",
    "RepeatedElementInTuple",
    "Schedule",
    "TupleSet",
    "VertexColoring",
    "WrongTupleSize",
    "anchor_count",
    "build_groups",
    "collapse_alphabet",
    "color_2_triples",
    "decide_2colorable_triples",
    "dedup_capped",
    "extract_core_subset",
    "feasible",
    "from_hypergraph",
    "group_bipartite",
    "infer_k",
    "is_c_fair",
    "is_c_fair_anchored",
    "is_nice",
    "is_polychromatic",
    "is_proper",
    "is_special",
    "is_triangle_free",
    "kernel_size_bound",
    "konig_edge_color",
    "make_schedule",
    "min_edge_size",
    "normalize",
    "oracle_nice_coloring",
    "parse_hypergraph",
    "parse_instance",
    "parse_portfolios",
    "partialize",
    "polychromatic_c_colorable",
    "proper_2colorable",
    "render_hypergraph",
    "render_instance",
    "render_schedule_text",
    "schedule_to_json",
    "solve_general",
    "solve_partial_bounded",
    "to_hypergraph",
    "validate_schedule",
]
