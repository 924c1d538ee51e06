"""Lexicographic triangulations of point sets and their GKZ-vectors, in exact arithmetic."""

from .errors import (
    BudgetExceeded,
    DegenerateSet,
    LexGKZError,
    NoCandidate,
    NoConvergence,
    NotSimplicial,
    RecoveryError,
    VerificationFailed,
)
from .exactgeom import (
    Facet,
    Hyperplane,
    PointSet,
    affine_dimension,
    cells_meet_properly,
    clear_caches,
    hull_facets,
    is_face,
    is_visible,
    lp_feasible_strict,
    orientation,
    shadow_boundary,
    shadow_facets,
    simplex_volume,
    volume,
)
from .gkz import first_candidates, gkz_vector, is_ear_point, next_candidates, z_max, z_min
from .lexenum import EnumerationReport, enumerate_lex, roundtrip_all
from .recover import RecoveryResult, recover, verify
from .subdivide import (
    Move,
    Sign,
    Subdivision,
    Triangulation,
    is_refinement,
    lex_as_lift,
    lex_subdivision,
    lex_triangulation,
    present_points,
    pull_point,
    push_point,
    regular_from_heights,
    script,
    trivial,
    validate,
)

__version__ = "0.1.0"
