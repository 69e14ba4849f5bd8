"""Angular Voronoi diagram bisectors: construction, classification, verification.

The distance between a point and a segment site is the visual angle the
segment subtends there. The bisector of two sites is an algebraic curve of
degree at most three; this package builds that curve, classifies its shape
(including singular and factorable degenerations), detects the segment
configurations responsible, and cross-checks everything against a
brute-force angle oracle.
"""

from .geometry import (
    CanonicalConfig,
    EndpointQuery,
    IdenticalSegments,
    Point,
    Segment,
    SimilarityTransform,
    apply_transform,
    canonicalize,
    visual_angle,
)
from .poly import (
    BivariatePoly,
    ZeroPolynomial,
    effective_degree,
    evaluate,
    gradient,
    normalize,
)
from .edge import EdgeCurve, build_edge, leading_coefficients
from .classify import (
    Circle,
    DegeneracyPredicate,
    DegenerateJet,
    DegreeOneAnomaly,
    EdgeClass,
    EdgeClassTag,
    Hyperbola,
    Line,
    NotFromEdge,
    PredicateTag,
    SingularityKind,
    SingularPoint,
    classify_edge,
    classify_quadratic,
    classify_singularity,
    detect_geometric_degeneracy,
    factor_circle_line,
    find_singularities,
)
from .oracle import (
    BOUNDARY_LABEL,
    EmptyResult,
    GridSpec,
    LabeledRaster,
    PolyLineSet,
    ValidationReport,
    angle_gap,
    extract_bisector,
    implicit_polylines,
    rasterize_diagram,
    validate_curve,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_LABEL",
    "BivariatePoly",
    "CanonicalConfig",
    "Circle",
    "DegeneracyPredicate",
    "DegenerateJet",
    "DegreeOneAnomaly",
    "EdgeClass",
    "EdgeClassTag",
    "EdgeCurve",
    "EmptyResult",
    "EndpointQuery",
    "GridSpec",
    "Hyperbola",
    "IdenticalSegments",
    "LabeledRaster",
    "Line",
    "NotFromEdge",
    "Point",
    "PolyLineSet",
    "PredicateTag",
    "Segment",
    "SimilarityTransform",
    "SingularPoint",
    "SingularityKind",
    "ValidationReport",
    "ZeroPolynomial",
    "angle_gap",
    "apply_transform",
    "build_edge",
    "canonicalize",
    "classify_edge",
    "classify_quadratic",
    "classify_singularity",
    "detect_geometric_degeneracy",
    "effective_degree",
    "evaluate",
    "extract_bisector",
    "factor_circle_line",
    "find_singularities",
    "gradient",
    "implicit_polylines",
    "leading_coefficients",
    "normalize",
    "rasterize_diagram",
    "validate_curve",
    "visual_angle",
]
