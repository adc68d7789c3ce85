"""Min-plus (tropical) metric geometry of R^n.

Distances and norms, canonical shortest chains, geodesically closed
regions and hulls, the combinatorics of the unit ball, and the honeycomb
tiling of space by unit balls, with a CLI front door in tropgeo.cli.
"""

from .core import (
    DEFAULT_EPS,
    ConvergenceError,
    DimensionMismatch,
    DomainError,
    EmptyRegionError,
    OrthantCoords,
    ParseError,
    Point,
    TropSegment,
    TropgeoError,
    as_point,
    canon,
    dist,
    dist_proj,
    embed,
    format_number,
    format_point,
    lp_distances,
    norm,
    norm_proj,
    orthant_to_projective,
    parse_point,
    parse_projective,
    segment,
    to_orthant_coords,
)
from .geodesy import (
    EDGE_NAMES,
    GeodesicRegion,
    Shape2DType,
    classify2d,
    curve_length,
    hull,
    hull_iterate_oracle,
    is_between,
    is_geodesic,
    is_tropically_geodesic,
    pair_hull,
    polyline_evaluator,
    polyline_length,
    region_contains,
)
from .ball import (
    Ball,
    FacetId,
    angle_2d,
    contains,
    eval_trop_combination,
    facet_contains,
    facet_of,
    facets,
    generator_coeffs,
    hrep,
    intrinsic_distance_2d,
    is_diametral_pair,
    iter_vertices,
    minkowski_coeffs,
    neg_units,
    opposite,
    orthant_of,
    pole_distances,
    sphere_position_2d,
    unit_ball,
    units,
    vertices,
    zonotope_point,
)
from .honeycomb import (
    HEX_BASIS_2D,
    LocateResult,
    TilingReport,
    hexagon_rings,
    in_lattice,
    lattice_basis,
    locate,
    locate_bruteforce,
    neighbors,
    spans_same_lattice,
    verify_tiling,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPS",
    "TropgeoError",
    "DimensionMismatch",
    "DomainError",
    "ParseError",
    "EmptyRegionError",
    "ConvergenceError",
    "Point",
    "as_point",
    "dist",
    "dist_proj",
    "norm",
    "norm_proj",
    "lp_distances",
    "canon",
    "embed",
    "OrthantCoords",
    "to_orthant_coords",
    "orthant_to_projective",
    "TropSegment",
    "segment",
    "parse_point",
    "parse_projective",
    "format_number",
    "format_point",
    "polyline_length",
    "polyline_evaluator",
    "curve_length",
    "is_geodesic",
    "is_between",
    "GeodesicRegion",
    "hull",
    "pair_hull",
    "region_contains",
    "is_tropically_geodesic",
    "EDGE_NAMES",
    "Shape2DType",
    "classify2d",
    "hull_iterate_oracle",
    "Ball",
    "unit_ball",
    "units",
    "neg_units",
    "contains",
    "hrep",
    "iter_vertices",
    "vertices",
    "FacetId",
    "facets",
    "facet_contains",
    "facet_of",
    "opposite",
    "is_diametral_pair",
    "minkowski_coeffs",
    "zonotope_point",
    "orthant_of",
    "generator_coeffs",
    "eval_trop_combination",
    "pole_distances",
    "sphere_position_2d",
    "intrinsic_distance_2d",
    "angle_2d",
    "in_lattice",
    "LocateResult",
    "locate",
    "locate_bruteforce",
    "neighbors",
    "lattice_basis",
    "HEX_BASIS_2D",
    "spans_same_lattice",
    "TilingReport",
    "verify_tiling",
    "hexagon_rings",
    "__version__",
]
