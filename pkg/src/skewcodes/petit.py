"""Quotient algebras R/Rf with multiplication g*h reduced by f on the right.

These are nonassociative in general; structural probes (associator checks,
nuclei, two-sidedness of f) are exhaustive over small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DegreeTooHigh,
    EnumerationCapExceeded,
    NonMonic,
    NotARightDivisor,
)
from .skewpoly import SkewPoly, TwistContext, right_divide, skew_mul

DEFAULT_PROBE_CAP = 4096


@dataclass(frozen=True)
class StructureReport:
    is_associative: bool
    left_nucleus_dim: int | None
    middle_nucleus_dim: int | None
    right_nucleus_dim: int | None
    f_two_sided: bool

    def to_json(self):
        return {
            "associative": self.is_associative,
            "two_sided_f": self.f_two_sided,
            "nucleus_dims": [
                self.left_nucleus_dim,
                self.middle_nucleus_dim,
                self.right_nucleus_dim,
            ],
        }


class PetitAlgebra:
    """S_f for a monic f of degree m >= 2: residues of degree < m under *."""

    def __init__(self, f: SkewPoly, twist: TwistContext | None = None):
        if twist is not None and f.twist != twist:
            raise ValueError("f does not live under the given twist")
        if not f.is_monic:
            raise NonMonic("f must be monic")
        if f.degree < 2:
            raise ValueError("f must have degree m > 1")
        self.f = f
        self.twist = f.twist
        self.ring = f.twist.ring
        self.m = int(f.degree)
        # t^j mod_r f for 0 <= j <= 2(m-1); reduction is left S-linear
        self._red = [
            right_divide(SkewPoly.t_power(j, self.twist), f)[1]
            for j in range(2 * self.m - 1)
        ]
        self._sig = [self.twist.sigma.power(i) for i in range(self.m)]

    @property
    def size(self) -> int:
        return self.ring.size ** self.m

    def basis(self):
        return [SkewPoly.t_power(i, self.twist) for i in range(self.m)]

    def elements(self):
        """All residues, in canonical coefficient order."""
        ring = self.ring
        for digits in itertools.product(ring.elements, repeat=self.m):
            yield SkewPoly(digits, self.twist)

    def mul(self, g: SkewPoly, h: SkewPoly) -> SkewPoly:
        if self.twist.has_delta:
            return right_divide(skew_mul(g, h), self.f)[1]
        ring = self.ring
        acc = [ring.zero] * self.m
        for i, gi in enumerate(g.coeffs):
            if gi.is_zero():
                continue
            sig_i = self._sig[i]
            for j, hj in enumerate(h.coeffs):
                if hj.is_zero():
                    continue
                c = gi * sig_i(hj)
                for k, rk in enumerate(self._red[i + j].coeffs):
                    if not rk.is_zero():
                        acc[k] = acc[k] + c * rk
        return SkewPoly(acc, self.twist)

    def monomial(self, a, i):
        return SkewPoly.monomial(a, i, self.twist)


def petit_mul(A: PetitAlgebra, g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """The algebra product: remainder of g*h after right division by f."""
    g._check(h)
    if g.degree >= A.m or h.degree >= A.m:
        raise DegreeTooHigh("factors must have degree < deg(f)")
    return A.mul(g, h)


def f_is_two_sided(A: PetitAlgebra) -> bool:
    """Whether Rf is a two-sided ideal: f*t and f*a reduce to 0 mod_r f."""
    f = A.f
    t = SkewPoly.t_power(1, A.twist)
    if not right_divide(skew_mul(f, t), f)[1].is_zero:
        return False
    for a in A.ring.elements:
        prod = skew_mul(f, SkewPoly([a], A.twist))
        if not right_divide(prod, f)[1].is_zero:
            return False
    return True


def is_associative(A: PetitAlgebra) -> bool:
    """Exhaustive associator check over trilinear generators.

    The associator is additive in every slot and left S-linear in the first,
    so vanishing on triples (t^i, b t^j, c t^k) is equivalent to vanishing
    everywhere.
    """
    ring = A.ring
    m = A.m
    for i in range(m):
        x = A.monomial(ring.one, i)
        for b in ring.elements:
            if b.is_zero():
                continue
            for j in range(m):
                y = A.monomial(b, j)
                xy = A.mul(x, y)
                for c in ring.elements:
                    if c.is_zero():
                        continue
                    for k in range(m):
                        z = A.monomial(c, k)
                        if A.mul(xy, z) != A.mul(x, A.mul(y, z)):
                            return False
    return True


def _nucleus_size(A: PetitAlgebra, slot: int) -> int:
    """Count elements whose associator vanishes in the given slot (0/1/2)."""
    ring = A.ring
    m = A.m
    others = [
        A.monomial(b, j)
        for b in ring.elements
        if not b.is_zero()
        for j in range(m)
    ]
    count = 0
    for x in A.elements():
        ok = True
        for y in others:
            for z in others:
                if slot == 0:
                    triple = (x, y, z)
                elif slot == 1:
                    triple = (y, x, z)
                else:
                    triple = (y, z, x)
                u, v, w = triple
                if A.mul(A.mul(u, v), w) != A.mul(u, A.mul(v, w)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _dim_from_count(A: PetitAlgebra, count: int) -> int:
    """log_p of the nucleus size (field case); module-rank lower bound over Z_n."""
    if A.ring.kind == "field":
        p = A.ring.p
        d = 0
        while p ** d < count:
            d += 1
        return d
    d = 0
    while A.ring.n_mod ** (d + 1) <= count:
        d += 1
    return d


def probe_structure(
    A: PetitAlgebra, include_nuclei: bool = True, cap: int = DEFAULT_PROBE_CAP
) -> StructureReport:
    """Associativity, nucleus dimensions, and two-sidedness of f."""
    if A.ring.size ** A.m > 2 ** 16:
        raise EnumerationCapExceeded("algebra too large for structural probes")
    two_sided = f_is_two_sided(A)
    assoc = is_associative(A)
    dims = (None, None, None)
    if include_nuclei:
        if A.size > cap:
            raise EnumerationCapExceeded(
                f"nucleus scan over {A.size} elements exceeds cap {cap}"
            )
        dims = tuple(_dim_from_count(A, _nucleus_size(A, s)) for s in range(3))
    return StructureReport(
        is_associative=assoc,
        left_nucleus_dim=dims[0],
        middle_nucleus_dim=dims[1],
        right_nucleus_dim=dims[2],
        f_two_sided=two_sided,
    )


def left_ideal_span(A: PetitAlgebra, g: SkewPoly):
    """Basis [g, t*g, ..., t^(m-deg g-1)*g] of the principal left ideal of g."""
    if g.is_zero or g.degree >= A.m:
        raise DegreeTooHigh("generator must be nonzero of degree < deg(f)")
    if not g.is_monic:
        raise NonMonic("generator must be monic")
    _, rem = right_divide(A.f, g)
    if not rem.is_zero:
        raise NotARightDivisor("g does not divide f on the right")
    t = SkewPoly.t_power(1, A.twist)
    span = [g]
    for _ in range(A.m - int(g.degree) - 1):
        span.append(A.mul(t, span[-1]))
    return span
