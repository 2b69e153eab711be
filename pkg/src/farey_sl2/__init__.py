"""Farey graph paths, SL2-tilings and friezes in exact integer arithmetic."""

from .core import (
    INF,
    ONE,
    ZERO,
    DomainError,
    ExtRational,
    FareyError,
    InvalidVertex,
    J,
    LiftVec,
    Mat2Z,
    QuadraticIrrational,
    clockwise3,
    delta,
    edge_normalizer,
    farey_parents,
    is_adjacent,
    mediant,
    mobius,
    normalize,
    parse_vertex,
)
from .paths import (
    FareyPath,
    ItinerarySpec,
    LimitClass,
    PathError,
    classify_tail_limit,
    contains_cycle_sequence,
    is_clockwise,
    is_clockwise_simple_closed,
    is_cycle_sequence,
    is_simple_closed,
    itinerary_of,
    lift_path,
    path_from_itinerary,
    period_transform,
)
from .tilings import (
    PathPair,
    RecurrenceCoeffs,
    TilingWindow,
    canonical_sign,
    extend,
    frieze_phi,
    is_sl2,
    is_tame,
    ones_structure,
    phi,
    psi,
    recurrence_coeffs,
    shift,
    unique_min,
)
from .friezes import (
    FriezeOrderN,
    TriangulatedPolygon,
    antiperiodic_tiling,
    cc_count,
    dual_path,
    frieze_from_closed_path,
    is_Cn0,
    is_positive_frieze,
    polygon_from_path,
    positive_corner,
    positive_frieze_from_triangulation,
    quiddity,
    quiddity_realizable,
    triangle_counts,
)

__version__ = "0.1.0"
