"""Code construction: generator matrices, shift closure, distance, parity check."""

import pytest

from skewcodes.classify import IsometryWitness, find_equivalence
from skewcodes.codes import (
    LinearCode,
    annihilates,
    apply_isometry_to_code,
    build_code,
    code_class_codes,
    min_hamming_distance,
    parity_check,
    shift_closure_check,
)
from skewcodes.coeffring import Automorphism, identity_aut, make_field
from skewcodes.errors import WitnessInvalid
from skewcodes.petit import PetitAlgebra
from skewcodes.skewpoly import SkewPoly, TwistContext, all_monic_right_divisors

GF4 = make_field(2, 2)
FROB = Automorphism(GF4, 1)
TW = TwistContext(GF4, FROB)
OMEGA = GF4.from_json([0, 1])

F_CYCLIC3 = SkewPoly.from_ints([1, 0, 0, 1], TW)  # t^3 - 1
A3 = PetitAlgebra(F_CYCLIC3)


def test_cyclic_example_code():
    """g = t - 1 inside t^3 - 1 gives the [3, 2] parity-style code."""
    g = SkewPoly.from_ints([1, 1], TW)
    C = build_code(A3, g)
    assert C.length == 3
    assert C.dimension == 2
    one, zero = GF4.one, GF4.zero
    assert C.gen_matrix == ((one, one, zero), (zero, one, one))
    assert min_hamming_distance(C) == 2


def test_dimension_formula():
    """dim = m - deg g for every right divisor."""
    for C in code_class_codes(A3):
        assert C.dimension == A3.m - int(C.g.degree)


def test_codeword_count():
    g = SkewPoly.from_ints([1, 1], TW)
    C = build_code(A3, g)
    assert len(C.codewords()) == GF4.size ** 2


def test_every_built_code_is_shift_closed():
    targets = [F_CYCLIC3, SkewPoly([OMEGA, GF4.zero, GF4.zero, GF4.one], TW)]
    for f in targets:
        A = PetitAlgebra(f)
        for C in code_class_codes(A):
            assert shift_closure_check(C)


def test_raw_span_not_shift_closed():
    """A span that is not an ideal fails the closure check."""
    rows = [(GF4.one, GF4.zero, GF4.zero)]
    C = LinearCode.from_rows(A3, rows)
    assert not shift_closure_check(C)


def test_parity_check_cofactor():
    g = SkewPoly.from_ints([1, 1], TW)
    C = build_code(A3, g)
    h = parity_check(C)
    assert h == SkewPoly.from_ints([1, 1, 1], TW)


def test_parity_check_annihilator_set():
    """Codewords are exactly the residues with c * h = 0 mod_r f."""
    g = SkewPoly.from_ints([1, 1], TW)
    C = build_code(A3, g)
    h = parity_check(C)
    words = C.codewords()
    for c in A3.elements():
        assert (c.coeff_vector(3) in words) == annihilates(C, c, h)


def test_min_distance_of_full_algebra():
    C = build_code(A3, SkewPoly.one(TW))
    assert C.dimension == 3
    assert min_hamming_distance(C) == 1


def test_zero_code_has_no_distance():
    with pytest.raises(ValueError):
        min_hamming_distance(LinearCode(A3, None, []))


def test_transport_preserves_parameters():
    """Moving a code along an equivalence witness keeps (m, k, d)."""
    f = F_CYCLIC3
    h = SkewPoly([OMEGA, GF4.zero, GF4.zero, GF4.one], TW)  # t^3 - w
    w = find_equivalence(f, h)
    assert w is not None
    for g in all_monic_right_divisors(f):
        if g.degree >= 3:
            continue
        C = build_code(PetitAlgebra(f), g)
        D = apply_isometry_to_code(C, w, h)
        assert (C.length, C.dimension) == (D.length, D.dimension)
        assert min_hamming_distance(C) == min_hamming_distance(D)
        assert shift_closure_check(D)


def test_transport_rejects_bad_witness():
    f = F_CYCLIC3
    h = SkewPoly([OMEGA, GF4.zero, GF4.zero, GF4.one], TW)
    C = build_code(PetitAlgebra(f), SkewPoly.from_ints([1, 1], TW))
    bogus = IsometryWitness(identity_aut(GF4), GF4.one, 1)
    with pytest.raises(WitnessInvalid):
        apply_isometry_to_code(C, bogus, h)
