"""Exact-arithmetic toolkit for crossing profiles of rectilinear drawings of
complete graphs: a brute-force oracle, closed-form predictions, extremal
constructions, and a search for drawings with no edge crossed exactly k
times."""

from .geom import (
    Drawing,
    EdgeId,
    GeneralPositionError,
    Orientation,
    Point,
    Rational,
    affine_image,
    line_crosses_open_segment,
    orientation,
    point,
    segments_cross_properly,
    validate_general_position,
)
from .profile import (
    CrossingProfile,
    EdgeCrossCounts,
    crossing_counts,
    crossing_profile,
    e_k,
    e_k_primed,
    k_edge_count,
    leq_k_edge_count,
    primed_counts,
    primed_profile,
    s_k,
    s_k_primed,
    total_crossings,
)
from .analytic import (
    BlockParams,
    PredictionReport,
    block_params,
    convex_crossing_set,
    convex_profile,
    divisor_count,
    max_edge_crossings,
    min_sk_bound,
    predict_arc_edge,
    predict_dij_edge,
    split_arc_sizes,
    two_arc_crossing_bound,
    verify_arc_drawing,
)
from .constructions import (
    Claim,
    ConstructionSpec,
    GeneratedDrawing,
    RefinementError,
    gen_convex,
    gen_e1_linear,
    gen_ek_linear,
    gen_grid,
    gen_max_e0,
    gen_max_sk,
    gen_nested_triangles,
    gen_three_arc,
    gen_two_arc,
    refine,
)
from .search import (
    SweepReport,
    ZeroSearchError,
    ZeroSearchResult,
    extremal_sweep,
    find_zero_ek,
)
from .io_cli import parse_drawing, profile_report, render_svg, serialize_drawing

__version__ = "0.1.0"
