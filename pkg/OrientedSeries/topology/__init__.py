"""
Interval topology and seminorm-induced topology on ring instances.
"""

from .balls import (
    Ball,
    CauchyVerdict,
    ContinuityPath,
    HausdorffWitness,
    NoModulus,
    NotDefinite,
    ball_contains,
    ball_translation_law,
    cauchy_check,
    continuity_path,
    dyadic_windows,
    hausdorff_witness,
    multiplication_modulus,
    refine_ball,
    verify_ball_inclusion,
    verify_modulus,
)
from .continuity import (
    product_continuity_witness,
    split_neighborhood,
    verify_pair_witness,
)
from .convergence import (
    NotIncreasing,
    SeparationWitness,
    SupLimitVerdict,
    separation_witness,
    stabilized_limit,
    sup_limit_check,
)
from .interval import (
    BasicOpen,
    BoundKind,
    NotMember,
    PreconditionFailed,
    SubbasicClosed,
    UnsupportedRing,
    contains,
    intersect,
    negate,
    opens_containing,
    parse_open,
    render_open,
    right_translate,
    scale,
    translate,
)
from .seminorm import (
    SEMINORM_CATALOG,
    SeminormAxiom,
    SeminormSpec,
    check_seminorm_axioms,
    make_seminorm,
)

__all__ = [
    # Interval topology
    "BasicOpen",
    "BoundKind",
    "SubbasicClosed",
    "contains",
    "translate",
    "right_translate",
    "negate",
    "intersect",
    "scale",
    "render_open",
    "parse_open",
    "opens_containing",
    "sup_limit_check",
    "separation_witness",
    "stabilized_limit",
    "split_neighborhood",
    "product_continuity_witness",
    "verify_pair_witness",
    "SupLimitVerdict",
    "SeparationWitness",
    # Seminorm topology
    "SEMINORM_CATALOG",
    "SeminormAxiom",
    "SeminormSpec",
    "make_seminorm",
    "check_seminorm_axioms",
    "Ball",
    "ball_contains",
    "refine_ball",
    "verify_ball_inclusion",
    "ball_translation_law",
    "ContinuityPath",
    "continuity_path",
    "multiplication_modulus",
    "verify_modulus",
    "HausdorffWitness",
    "hausdorff_witness",
    "CauchyVerdict",
    "cauchy_check",
    "dyadic_windows",
    # Errors
    "NotMember",
    "UnsupportedRing",
    "PreconditionFailed",
    "NotIncreasing",
    "NoModulus",
    "NotDefinite",
]
