"""Group-orbit deviations of polygons in the complex plane and triangle quality metrics."""

__version__ = "0.1.0"

from .deviations import (
    DeviationResult,
    GroupKind,
    affine_deviation,
    deviation,
    isometric_deviation,
    linear_deviation,
    rotational_deviation,
)
from .nearest import NearestPair, nearest_pair, z_rings
from .oracle import OracleConfig, oracle_min
from .polygon import (
    AffineWitness,
    DimensionError,
    DomainError,
    Polygon,
    apply_affine,
    centroid,
    distance,
    inner_product,
    norm,
)
from .svg import RenderOptions, render_svg
from .triangles import (
    DELTA,
    Classification,
    Triangle,
    TriangleReport,
    TriangleSides,
    affine_deviation_from_delta,
    affine_to_unbalance,
    heron_area,
    isometric_deviation_from_delta,
    normalized_area,
    quadrofactor,
    side_lengths,
    symmetric_components,
    triangle_from_sides,
    triangle_report,
    unbalance_factor,
    unbalance_to_affine,
)

__all__ = [
    "affine_deviation",
    "affine_deviation_from_delta",
    "affine_to_unbalance",
    "AffineWitness",
    "apply_affine",
    "centroid",
    "Classification",
    "DELTA",
    "deviation",
    "DeviationResult",
    "DimensionError",
    "distance",
    "DomainError",
    "GroupKind",
    "heron_area",
    "inner_product",
    "isometric_deviation",
    "isometric_deviation_from_delta",
    "linear_deviation",
    "nearest_pair",
    "NearestPair",
    "norm",
    "normalized_area",
    "oracle_min",
    "OracleConfig",
    "Polygon",
    "quadrofactor",
    "render_svg",
    "RenderOptions",
    "rotational_deviation",
    "side_lengths",
    "symmetric_components",
    "Triangle",
    "triangle_from_sides",
    "triangle_report",
    "TriangleReport",
    "TriangleSides",
    "unbalance_factor",
    "unbalance_to_affine",
    "z_rings",
]
