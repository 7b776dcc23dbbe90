"""deltaring: exact computational algebra for finite unital rings."""

from .core import (
    DEFAULT_EXHAUSTIVE_BOUND,
    DEFAULT_ORDER_GUARD,
    ElementSet,
    FiniteRing,
    MatrixUnitSystem,
    RingHom,
    alpha_compatible,
    center,
    corner_ring,
    element_arith,
    find_endomorphisms,
    find_matrix_units,
    ideal_generated,
    induced_subring,
    inverse,
    is_ideal,
    is_unital_subring,
    quotient_ring,
    ring_from_dict,
    ring_from_json,
    ring_to_json,
    subring_generated,
    validate_hom,
    validate_ring,
)
from . import constructions, dsl, errors, harness, predicates, subsets
from .report import CheckReport, Witness

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "DEFAULT_EXHAUSTIVE_BOUND",
    "DEFAULT_ORDER_GUARD",
    "ElementSet",
    "FiniteRing",
    "MatrixUnitSystem",
    "RingHom",
    "Witness",
    "alpha_compatible",
    "center",
    "constructions",
    "corner_ring",
    "dsl",
    "element_arith",
    "errors",
    "find_endomorphisms",
    "find_matrix_units",
    "harness",
    "ideal_generated",
    "induced_subring",
    "inverse",
    "is_ideal",
    "is_unital_subring",
    "predicates",
    "quotient_ring",
    "ring_from_dict",
    "ring_from_json",
    "ring_to_json",
    "subring_generated",
    "subsets",
    "validate_hom",
    "validate_ring",
]
