"""Skew polynomial rings, Petit quotient algebras, and skew polycyclic codes.

Provides finite coefficient rings, arithmetic in S[t; sigma, delta],
nonassociative quotient algebras, code construction from right divisors,
and equivalence / isometry classification of code classes.
"""

from .coeffring import (
    Automorphism,
    Element,
    RingContext,
    all_automorphisms,
    apply_aut,
    identity_aut,
    make_field,
    make_residue_ring,
    norm_image,
    partial_norm,
    unit_group,
)
from .skewpoly import (
    SkewPoly,
    TwistContext,
    companion_matrix,
    enumerate_monic_right_divisors,
    left_divide,
    psi,
    right_divide,
    skew_mul,
)
from .petit import PetitAlgebra, StructureReport, left_ideal_span, petit_mul, probe_structure
from .codes import (
    LinearCode,
    apply_isometry_to_code,
    build_code,
    min_hamming_distance,
    parity_check,
    shift_closure_check,
)
from .classify import (
    ClassificationResult,
    IsometryWitness,
    Relation,
    check_equivalence,
    check_isometry_k,
    classify_pair,
    count_constacyclic_classes,
    count_constacyclic_classes_formula,
    equivalence_class_of,
    fast_reject,
    find_equivalence,
    polycyclic_constacyclic_bridge,
    special_class_tests,
)

from .catalogue import partition_classes, poly_to_json, run_catalogue
from .verify import run_verify

__version__ = "0.1.0"
