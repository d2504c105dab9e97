"""Quotient algebra structure: multiplication mod_r f, associativity, nuclei."""

import pytest

from skewcodes.coeffring import Automorphism, identity_aut, make_field, make_residue_ring
from skewcodes.errors import DegreeTooHigh, NonMonic, NotARightDivisor
from skewcodes.petit import (
    PetitAlgebra,
    f_is_two_sided,
    is_associative,
    left_ideal_span,
    petit_mul,
    probe_structure,
)
from skewcodes.skewpoly import SkewPoly, TwistContext, enumerate_monic_right_divisors, right_divide, skew_mul

GF4 = make_field(2, 2)
FROB = Automorphism(GF4, 1)
TW = TwistContext(GF4, FROB)
OMEGA = GF4.from_json([0, 1])


def consta(tw, m, d):
    ring = tw.ring
    return SkewPoly([-d] + [ring.zero] * (m - 1) + [ring.one], tw)


T2_OMEGA = PetitAlgebra(consta(TW, 2, OMEGA))
T2_ONE = PetitAlgebra(consta(TW, 2, GF4.one))


def test_monomial_products():
    """t * t = w and t * (w t) = w^2 * w = 1 in the quotient by t^2 - w."""
    t = SkewPoly.t_power(1, TW)
    wt = SkewPoly([GF4.zero, OMEGA], TW)
    assert T2_OMEGA.mul(t, t) == SkewPoly([OMEGA], TW)
    assert T2_OMEGA.mul(t, wt) == SkewPoly.one(TW)


def test_mul_agrees_with_reduction():
    """The table-free product equals remainder of the ring product."""
    for A in (T2_OMEGA, T2_ONE):
        for x in A.elements():
            for y in A.elements():
                assert A.mul(x, y) == right_divide(skew_mul(x, y), A.f)[1]


def test_mul_agrees_with_reduction_inner_delta():
    tw = TwistContext(GF4, FROB, delta_beta=OMEGA)
    A = PetitAlgebra(SkewPoly([GF4.one, GF4.zero, GF4.one], tw))
    for x in A.elements():
        for y in A.elements():
            assert A.mul(x, y) == right_divide(skew_mul(x, y), A.f)[1]


def test_petit_mul_degree_guard():
    t2 = SkewPoly.t_power(2, TW)
    with pytest.raises(DegreeTooHigh):
        petit_mul(T2_OMEGA, t2, SkewPoly.one(TW))


def test_requires_monic_degree_two():
    with pytest.raises(NonMonic):
        PetitAlgebra(SkewPoly([GF4.one, OMEGA], TW))
    with pytest.raises(ValueError):
        PetitAlgebra(SkewPoly([GF4.one, GF4.one], TW))


def test_t2_minus_omega_not_associative():
    """w is not fixed by the Frobenius, so the quotient is not associative."""
    assert not is_associative(T2_OMEGA)
    assert not f_is_two_sided(T2_OMEGA)


def test_t2_minus_one_associative():
    """1 is fixed and n = 2 divides m = 2."""
    assert is_associative(T2_ONE)
    assert f_is_two_sided(T2_ONE)


def test_associativity_matches_brute_force():
    """The reduced generator check equals the all-triples associator scan."""
    for A in (T2_OMEGA, T2_ONE):
        elems = list(A.elements())
        brute = all(
            A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))
            for x in elems for y in elems for z in elems
        )
        assert is_associative(A) == brute


def test_two_sided_agrees_with_associative():
    """Probed over every constacyclic f of degree 2 and 3 over GF(4)."""
    for m in (2, 3):
        for d in GF4.units:
            A = PetitAlgebra(consta(TW, m, d))
            assert f_is_two_sided(A) == is_associative(A)


def test_probe_structure_report():
    rep = probe_structure(T2_ONE)
    assert rep.is_associative and rep.f_two_sided
    # associative: every nucleus is the whole algebra, dim 4 over the prime field
    assert (rep.left_nucleus_dim, rep.middle_nucleus_dim, rep.right_nucleus_dim) == (4, 4, 4)
    doc = rep.to_json()
    assert doc["associative"] is True
    assert doc["nucleus_dims"] == [4, 4, 4]


def test_nonassociative_nucleus_drops():
    rep = probe_structure(T2_OMEGA)
    assert not rep.is_associative
    assert rep.right_nucleus_dim < 4 or rep.middle_nucleus_dim < 4 \
        or rep.left_nucleus_dim < 4


def test_irreducible_f_has_no_proper_divisors():
    """t^2 - w has no monic right divisor of degree 1, hence no proper ideals."""
    assert enumerate_monic_right_divisors(T2_OMEGA.f, 1) == []


def test_left_ideal_span():
    f = SkewPoly.from_ints([1, 0, 0, 1], TW)  # t^3 - 1
    A = PetitAlgebra(f)
    g = SkewPoly.from_ints([1, 1], TW)
    span = left_ideal_span(A, g)
    assert len(span) == 2
    assert span[0] == g
    assert span[1] == A.mul(SkewPoly.t_power(1, TW), g)


def test_left_ideal_span_rejects_nondivisor():
    f = SkewPoly.from_ints([1, 0, 0, 1], TW)
    A = PetitAlgebra(f)
    with pytest.raises(NotARightDivisor):
        left_ideal_span(A, SkewPoly.from_ints([0, 1], TW))


def test_left_distributivity_and_linearity():
    A = T2_OMEGA
    elems = list(A.elements())
    for x in elems[::3]:
        for y in elems[::3]:
            for z in elems[::5]:
                assert A.mul(x + y, z) == A.mul(x, z) + A.mul(y, z)
                assert A.mul(x, y + z) == A.mul(x, y) + A.mul(x, z)
    for s in GF4.elements:
        for x in elems[::5]:
            for y in elems[::5]:
                assert A.mul(x.scale_left(s), y) == A.mul(x, y).scale_left(s)


def test_residue_ring_quotient():
    Z4 = make_residue_ring(4)
    tw = TwistContext(Z4, identity_aut(Z4))
    A = PetitAlgebra(SkewPoly.from_ints([-1, 0, 1], tw))  # t^2 - 1
    assert is_associative(A)  # sigma = id, delta = 0: commutative quotient
    assert f_is_two_sided(A)
