"""Plumbing-tree calculator for Heegaard Floer kernel ranks.

Builds negative-definite plumbing forests (stars for Seifert fibered
spaces, Brieskorn homology spheres among them), then counts the good
initial associations of the combinatorial cube-assignment game on the
graph; each one generates a summand of the kernel of the U action, so
the count lower-bounds that kernel's rank and equals it on the graphs
this package targets.
"""

from .errors import (
    BadIdError,
    BaseCaseError,
    CycleCreatedError,
    CycleDetectedError,
    DegenerateFractionError,
    DimensionMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    IllegalMoveError,
    NonNegDefiniteError,
    NotCoprimeError,
    OutOfRangeError,
    ParseError,
    PlumbingError,
    TooManyBadVerticesError,
    WeightTooLargeError,
)
from .graph import (
    IntersectionMatrix,
    PlumbingGraph,
    bad_vertices,
    blow_down,
    build_graph,
    determinant,
    graph_determinant,
    intersection_matrix,
    is_homology_sphere,
    is_negative_definite,
)
from .contfrac import (
    bumped_sum_check,
    convergents,
    eval_cf,
    eval_cf_literal,
    expand_cf,
)
from .seifert import (
    SeifertInvariants,
    SphereQuadruple,
    brieskorn,
    enumerate_quadruples,
    is_sphere_quadruple,
    quadruple_star,
    reduce_quadruple,
    star_graph,
)
from .game import (
    Association,
    AssociationGame,
    GoodInitialResult,
    GoodSequence,
    PairingVector,
    apply_move,
    central_count,
    completes_to_good,
    good_initial_count,
    interior_association_count,
    is_final,
    is_good_sequence,
    is_initial,
    legal_moves,
    pairing,
    pairing_vector,
    reverse_negate,
)
from .files import (
    canonical_graph_hash,
    graph_from_obj,
    graph_to_obj,
    parse_graph_file,
    write_graph_file,
)
from .report import (
    AnalysisReport,
    ResultCache,
    S3Row,
    SurveyRow,
    analyze,
    s3_rows,
    survey_all_minus_two,
    survey_brieskorn,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Association",
    "AssociationGame",
    "BadIdError",
    "BaseCaseError",
    "CycleCreatedError",
    "CycleDetectedError",
    "DegenerateFractionError",
    "DimensionMismatchError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "GoodInitialResult",
    "GoodSequence",
    "IllegalMoveError",
    "IntersectionMatrix",
    "NonNegDefiniteError",
    "NotCoprimeError",
    "OutOfRangeError",
    "PairingVector",
    "ParseError",
    "PlumbingError",
    "PlumbingGraph",
    "ResultCache",
    "S3Row",
    "SeifertInvariants",
    "SphereQuadruple",
    "SurveyRow",
    "TooManyBadVerticesError",
    "WeightTooLargeError",
    "analyze",
    "apply_move",
    "bad_vertices",
    "blow_down",
    "brieskorn",
    "build_graph",
    "bumped_sum_check",
    "canonical_graph_hash",
    "central_count",
    "completes_to_good",
    "convergents",
    "determinant",
    "enumerate_quadruples",
    "eval_cf",
    "eval_cf_literal",
    "expand_cf",
    "good_initial_count",
    "graph_determinant",
    "graph_from_obj",
    "graph_to_obj",
    "interior_association_count",
    "intersection_matrix",
    "is_final",
    "is_good_sequence",
    "is_homology_sphere",
    "is_initial",
    "is_negative_definite",
    "is_sphere_quadruple",
    "legal_moves",
    "pairing",
    "pairing_vector",
    "parse_graph_file",
    "quadruple_star",
    "reduce_quadruple",
    "reverse_negate",
    "s3_rows",
    "star_graph",
    "survey_all_minus_two",
    "survey_brieskorn",
    "write_graph_file",
]
