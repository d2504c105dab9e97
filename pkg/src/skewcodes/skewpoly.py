"""Skew polynomial arithmetic over a twisted coefficient ring.

Multiplication follows the commutation rule t*a = sigma(a)*t + delta(a),
applied one power of t at a time.  Left and right Euclidean division are
available whenever the divisor has an invertible leading coefficient.
"""

from __future__ import annotations

import itertools

from .coeffring import Automorphism, Element, RingContext
from .errors import (
    ContextMismatch,
    DeltaNotZero,
    EnumerationCapExceeded,
    NonInvertibleLeadingCoefficient,
    NonMonic,
)

NEG_INF = float("-inf")

DEFAULT_ENUM_CAP = 2 ** 20


class TwistContext:
    """A coefficient ring together with (sigma, delta).

    delta is either zero or the inner derivation a -> beta*(sigma(a) - a).
    """

    __slots__ = ("ring", "sigma", "delta_beta")

    def __init__(self, ring: RingContext, sigma: Automorphism, delta_beta: Element | None = None):
        if sigma.ctx is not ring:
            raise ContextMismatch("sigma acts on a different ring")
        if ring.kind == "residue" and not sigma.is_identity:
            raise ContextMismatch("Z_n carries only the identity automorphism")
        if delta_beta is not None and delta_beta.ctx is not ring:
            raise ContextMismatch("delta parameter from a different ring")
        self.ring = ring
        self.sigma = sigma
        self.delta_beta = delta_beta
        self._check_derivation_law()

    def _check_derivation_law(self):
        # delta(ab) = sigma(a)delta(b) + delta(a)b; exhaustive for small rings
        if self.delta_beta is None:
            return
        ring = self.ring
        if ring.size <= 256:
            sample = ring.elements
        else:
            sample = ring.elements[:: max(1, ring.size // 64)]
        for a in sample:
            for b in sample:
                lhs = self.delta(a * b)
                rhs = self.sigma(a) * self.delta(b) + self.delta(a) * b
                if lhs != rhs:
                    raise ValueError("delta is not a sigma-derivation")

    @property
    def has_delta(self) -> bool:
        return self.delta_beta is not None and not self.delta_beta.is_zero()

    def delta(self, a: Element) -> Element:
        if self.delta_beta is None:
            return self.ring.zero
        return self.delta_beta * (self.sigma(a) - a)

    def __eq__(self, other):
        return (
            isinstance(other, TwistContext)
            and self.ring is other.ring
            and self.sigma == other.sigma
            and self.delta_beta == other.delta_beta
        )

    def __hash__(self):
        return hash((id(self.ring), self.sigma, self.delta_beta))

    def __repr__(self):
        return f"TwistContext(sigma={self.sigma!r}, delta_beta={self.delta_beta!r})"


class SkewPoly:
    """An immutable skew polynomial: little-endian coefficient tuple plus twist."""

    __slots__ = ("coeffs", "twist")

    def __init__(self, coeffs, twist: TwistContext):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.twist = twist

    @classmethod
    def from_ints(cls, ints, twist: TwistContext) -> "SkewPoly":
        ring = twist.ring
        return cls([ring.from_int(k) for k in ints], twist)

    @classmethod
    def zero(cls, twist: TwistContext) -> "SkewPoly":
        return cls([], twist)

    @classmethod
    def one(cls, twist: TwistContext) -> "SkewPoly":
        return cls([twist.ring.one], twist)

    @classmethod
    def t_power(cls, i: int, twist: TwistContext) -> "SkewPoly":
        ring = twist.ring
        return cls([ring.zero] * i + [ring.one], twist)

    @classmethod
    def monomial(cls, a: Element, i: int, twist: TwistContext) -> "SkewPoly":
        return cls([twist.ring.zero] * i + [a], twist)

    # -- structure -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.twist.ring.one

    def coeff(self, i: int) -> Element:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.twist.ring.zero

    def coeff_vector(self, length: int):
        """Coefficients padded with zeros to the given length."""
        return tuple(self.coeff(i) for i in range(length))

    def hamming_weight(self) -> int:
        return sum(1 for c in self.coeffs if not c.is_zero())

    def sort_key(self):
        return (len(self.coeffs), tuple(c.sort_key() for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.twist == other.twist
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.twist, self.coeffs))

    def __repr__(self):
        return f"SkewPoly({[c.val for c in self.coeffs]})"

    def _check(self, other: "SkewPoly"):
        if not isinstance(other, SkewPoly) or other.twist != self.twist:
            raise ContextMismatch("polynomials live under different twists")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            [self.coeff(i) + other.coeff(i) for i in range(n)], self.twist
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SkewPoly([-c for c in self.coeffs], self.twist)

    def scale_left(self, a: Element) -> "SkewPoly":
        """a * g with the scalar on the left (no twisting needed)."""
        return SkewPoly([a * c for c in self.coeffs], self.twist)

    def __mul__(self, other):
        return skew_mul(self, other)


def _t_times(h: SkewPoly) -> SkewPoly:
    """t * h via the commutation rule, one step."""
    tw = h.twist
    ring = tw.ring
    out = [ring.zero] * (len(h.coeffs) + 1)
    for j, c in enumerate(h.coeffs):
        out[j + 1] = out[j + 1] + tw.sigma(c)
        d = tw.delta(c)
        if not d.is_zero():
            out[j] = out[j] + d
    return SkewPoly(out, tw)


def skew_mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """The product g*h in S[t; sigma, delta]."""
    g._check(h)
    tw = g.twist
    if g.is_zero or h.is_zero:
        return SkewPoly.zero(tw)
    acc = SkewPoly.zero(tw)
    shifted = h
    for i, gi in enumerate(g.coeffs):
        if not gi.is_zero():
            acc = acc + shifted.scale_left(gi)
        if i + 1 < len(g.coeffs):
            shifted = _t_times(shifted)
    return acc


def right_divide(g: SkewPoly, f: SkewPoly):
    """q, rem with g = q*f + rem and deg(rem) < deg(f)."""
    g._check(f)
    tw = g.twist
    if f.is_zero or not f.coeffs[-1].is_unit():
        raise NonInvertibleLeadingCoefficient("divisor needs an invertible leading coefficient")
    sigma = tw.sigma
    lead_inv = f.coeffs[-1].inverse()
    df = len(f.coeffs) - 1
    q = SkewPoly.zero(tw)
    rem = g
    while not rem.is_zero and rem.degree >= df:
        d = len(rem.coeffs) - 1 - df
        # leading term of (c t^d) * f is c * sigma^d(lc(f)) * t^(deg g)
        c = rem.coeffs[-1] * sigma.power(d)(lead_inv)
        term = SkewPoly.monomial(c, d, tw)
        q = q + term
        rem = rem - skew_mul(term, f)
    return q, rem


def left_divide(g: SkewPoly, f: SkewPoly):
    """q, rem with g = f*q + rem and deg(rem) < deg(f)."""
    g._check(f)
    tw = g.twist
    if f.is_zero or not f.coeffs[-1].is_unit():
        raise NonInvertibleLeadingCoefficient("divisor needs an invertible leading coefficient")
    sigma = tw.sigma
    df = len(f.coeffs) - 1
    q = SkewPoly.zero(tw)
    rem = g
    while not rem.is_zero and rem.degree >= df:
        d = len(rem.coeffs) - 1 - df
        # leading term of f * (c t^d) is lc(f) * sigma^df(c) * t^(deg g)
        c = sigma.power(-df)(f.coeffs[-1].inverse() * rem.coeffs[-1])
        term = SkewPoly.monomial(c, d, tw)
        q = q + term
        rem = rem - skew_mul(f, term)
    return q, rem


def is_right_divisor(f: SkewPoly, g: SkewPoly) -> bool:
    _, rem = right_divide(f, g)
    return rem.is_zero


def enumerate_monic_right_divisors(f: SkewPoly, degree: int, cap: int = DEFAULT_ENUM_CAP):
    """All monic right divisors of f of the given degree, brute force, sorted."""
    tw = f.twist
    ring = tw.ring
    if ring.size ** degree > cap:
        raise EnumerationCapExceeded(
            f"{ring.size}^{degree} candidate divisors exceed cap {cap}"
        )
    found = []
    for tail in itertools.product(ring.elements, repeat=degree):
        g = SkewPoly(list(tail) + [ring.one], tw)
        _, rem = right_divide(f, g)
        if rem.is_zero:
            found.append(g)
    found.sort(key=SkewPoly.sort_key)
    return found


def all_monic_right_divisors(f: SkewPoly, cap: int = DEFAULT_ENUM_CAP):
    """Monic right divisors of every degree 0..deg(f), sorted by (degree, coeffs)."""
    out = []
    for d in range(int(f.degree) + 1):
        out.extend(enumerate_monic_right_divisors(f, d, cap=cap))
    return out


def monic_scale(g: SkewPoly) -> SkewPoly:
    """The monic left-scalar multiple of g (leading coefficient must be a unit)."""
    if g.is_zero:
        return g
    lead = g.coeffs[-1]
    if not lead.is_unit():
        raise NonInvertibleLeadingCoefficient("leading coefficient is not a unit")
    return g.scale_left(lead.inverse())


def companion_matrix(f: SkewPoly):
    """Companion matrix of monic f: superdiagonal 1s, last row a_0..a_(m-1)."""
    if not f.is_monic:
        raise NonMonic("companion matrix needs a monic polynomial")
    tw = f.twist
    ring = tw.ring
    m = len(f.coeffs) - 1
    rows = []
    for i in range(m - 1):
        row = [ring.zero] * m
        row[i + 1] = ring.one
        rows.append(tuple(row))
    # f = t^m - sum a_i t^i, so a_i = -coeff_i(f)
    rows.append(tuple(-f.coeff(i) for i in range(m)))
    return tuple(rows)


def psi(g: SkewPoly) -> SkewPoly:
    """The canonical anti-automorphism image of g (delta = 0, commutative S).

    Maps sum a_k t^k to sum sigma^(-k)(a_k) t^k, living under sigma inverse.
    """
    tw = g.twist
    if tw.has_delta:
        raise DeltaNotZero("psi is only implemented for delta = 0")
    sigma = tw.sigma
    target = TwistContext(tw.ring, sigma.inverse())
    coeffs = [sigma.power(-k)(c) for k, c in enumerate(g.coeffs)]
    return SkewPoly(coeffs, target)
