"""Exact Seiberg-Witten polynomial calculator for free circle actions.

Builds 3-manifolds (torus, surface products, fiber sums with knot
complements) together with their SW polynomials as exact integer Laurent
polynomials, folds them over cosets of a nontorsion Euler class to
obtain the SW polynomials of 4-manifolds carrying free circle actions,
and decides the unit-coefficient symplectic obstruction.
"""

from .alexander import (
    KNOT_BASIS,
    AlexanderChecklist,
    KnotRecord,
    SeifertMatrix,
    alexander_from_seifert,
    available_knots,
    knot_from_alexander,
    knot_from_seifert,
    knot_lookup,
    load_knot_file,
    register_knot,
    validate_alexander,
)
from .errors import (
    DomainError,
    HypothesisError,
    KnotLookupError,
    NotSeifertError,
    ParseError,
    SpecFileError,
    StructuralError,
    SwfoldError,
    UnknownVariableError,
)
from .fold import (
    EulerClass,
    FoldedSW,
    QuotientLattice,
    canonical_rep,
    circle_bundle_sw_closed_form,
    circle_bundle_sw_direct,
    equal_up_to_sign,
    euler_vector_from_text,
    fold,
    fold_bruteforce,
    fold_poly,
    fold_poly_bruteforce,
    is_injective_fold,
)
from .laurent import Basis, LaurentPoly, from_text, monomial, to_text
from .manifolds import (
    CIRCLE_BASIS,
    T3_BASIS,
    FoldChecklist,
    ThreeManifold,
    fiber_sum_with_knot,
    surface_times_circle,
    fold_applicable,
    three_torus,
)
from .obstruction import (
    ObstructionReport,
    SearchEntry,
    SearchResult,
    colliding_classes,
    euler_search,
    stabilization_note,
    taubes_report,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderChecklist",
    "Basis",
    "CIRCLE_BASIS",
    "DomainError",
    "EulerClass",
    "FoldChecklist",
    "FoldedSW",
    "HypothesisError",
    "KNOT_BASIS",
    "KnotLookupError",
    "KnotRecord",
    "LaurentPoly",
    "NotSeifertError",
    "ObstructionReport",
    "ParseError",
    "QuotientLattice",
    "SearchEntry",
    "SearchResult",
    "SeifertMatrix",
    "SpecFileError",
    "StructuralError",
    "SwfoldError",
    "T3_BASIS",
    "ThreeManifold",
    "UnknownVariableError",
    "alexander_from_seifert",
    "available_knots",
    "canonical_rep",
    "circle_bundle_sw_closed_form",
    "circle_bundle_sw_direct",
    "colliding_classes",
    "equal_up_to_sign",
    "euler_search",
    "euler_vector_from_text",
    "fiber_sum_with_knot",
    "fold",
    "fold_bruteforce",
    "fold_poly",
    "fold_poly_bruteforce",
    "from_text",
    "is_injective_fold",
    "knot_from_alexander",
    "knot_from_seifert",
    "knot_lookup",
    "load_knot_file",
    "monomial",
    "register_knot",
    "stabilization_note",
    "surface_times_circle",
    "taubes_report",
    "fold_applicable",
    "three_torus",
    "to_text",
    "validate_alexander",
]
