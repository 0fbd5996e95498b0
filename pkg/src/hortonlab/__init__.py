"""Integer-coordinate drawings of Horton sets and exact diagnostics over them."""

from .analysis import (
    HoleReport,
    HortonViolation,
    OrderTypeVector,
    count_empty_triangles,
    high_above_violation,
    horton_violation,
    is_high_above,
    is_horton,
    largest_empty_hole,
    min_drawing_search,
    order_type,
    same_labeled_order_type,
)
from .constructions import (
    classic_horton,
    drawing_size,
    level_lift,
    peak_height,
    predicted_small_size,
    small_horton,
)
from .errors import PointFileError, ResourceLimitError
from .exact import (
    Line,
    Point,
    cross,
    find_collinear_triple,
    general_position,
    line_meet_vertical,
    orientation,
    point_strictly_above,
    point_strictly_below,
)
from .io import json_envelope, load_points, parse_points, save_points, serialize_points
from .lowerbound import (
    HortonTree,
    LowerBoundReport,
    SizeCertificate,
    SlabConfig,
    TreeNode,
    bounding_lines,
    build_tree,
    check_growth_inequality,
    choose_slab_lines,
    first_level_noncrossing,
    girth_at,
    girth_at_x,
    growth_inequality_terms,
    isotheticize,
    lower_bound_report,
    prune_level,
    slab_bounds,
    width_at,
    width_at_x,
    window_counts,
)

__version__ = "0.1.0"

__all__ = [
    "HoleReport",
    "HortonTree",
    "HortonViolation",
    "Line",
    "LowerBoundReport",
    "OrderTypeVector",
    "Point",
    "PointFileError",
    "ResourceLimitError",
    "SizeCertificate",
    "SlabConfig",
    "TreeNode",
    "bounding_lines",
    "build_tree",
    "check_growth_inequality",
    "choose_slab_lines",
    "classic_horton",
    "count_empty_triangles",
    "cross",
    "drawing_size",
    "find_collinear_triple",
    "first_level_noncrossing",
    "general_position",
    "girth_at",
    "girth_at_x",
    "growth_inequality_terms",
    "high_above_violation",
    "horton_violation",
    "is_high_above",
    "is_horton",
    "isotheticize",
    "json_envelope",
    "largest_empty_hole",
    "level_lift",
    "line_meet_vertical",
    "load_points",
    "lower_bound_report",
    "min_drawing_search",
    "order_type",
    "orientation",
    "parse_points",
    "peak_height",
    "point_strictly_above",
    "point_strictly_below",
    "predicted_small_size",
    "prune_level",
    "same_labeled_order_type",
    "save_points",
    "serialize_points",
    "slab_bounds",
    "small_horton",
    "width_at",
    "width_at_x",
    "window_counts",
]
