"""Deduplicated catalogues of code classes for a fixed (ring, sigma, m)."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

from .classify import equivalence_class_of
from .codes import build_code, min_hamming_distance
from .errors import EnumerationCapExceeded, InvalidConfig
from .petit import PetitAlgebra
from .skewpoly import SkewPoly, TwistContext, all_monic_right_divisors

SCHEMA_VERSION = 1


def poly_to_json(poly: SkewPoly) -> dict:
    tw = poly.twist
    return {
        "coeffs": [c.to_json() for c in poly.coeffs],
        "sigma_exp": tw.sigma.frob_exp,
        "delta": None if tw.delta_beta is None else {"inner": tw.delta_beta.to_json()},
    }


def _candidates(twist: TwistContext, m: int, constacyclic: bool, cap: int):
    ring = twist.ring
    if constacyclic:
        if len(ring.units) > cap:
            raise EnumerationCapExceeded("unit enumeration exceeds cap")
        return [
            SkewPoly([-a] + [ring.zero] * (m - 1) + [ring.one], twist)
            for a in ring.units
        ]
    if ring.size ** m > cap:
        raise EnumerationCapExceeded(f"{ring.size}^{m} candidate polynomials exceed cap {cap}")
    return [
        SkewPoly(list(tail) + [ring.one], twist)
        for tail in itertools.product(ring.elements, repeat=m)
    ]


def partition_classes(twist: TwistContext, m: int, constacyclic: bool, cap: int):
    """Full-equivalence classes (each with its Chen subclasses), canonically ordered."""
    candidates = _candidates(twist, m, constacyclic, cap)
    pending = {f: None for f in candidates}  # insertion ordered
    classes = []
    for f in candidates:
        if f not in pending:
            continue
        members = [g for g in equivalence_class_of(f, chen_only=False) if g in pending]
        for g in members:
            pending.pop(g, None)
        chen = []
        seen = set()
        for g in members:
            if g in seen:
                continue
            sub = [x for x in equivalence_class_of(g, chen_only=True) if x in set(members)]
            seen.update(sub)
            chen.append(sub)
        chen.sort(key=lambda sub: sub[0].sort_key())
        classes.append({"members": members, "chen": chen})
    classes.sort(key=lambda c: c["members"][0].sort_key())
    return classes


def _codes_for(f: SkewPoly, cap: int):
    A = PetitAlgebra(f)
    out = []
    for g in all_monic_right_divisors(f, cap=cap):
        if g.degree >= A.m:
            continue
        C = build_code(A, g)
        out.append(
            {
                "g": poly_to_json(g),
                "length": C.length,
                "dim": C.dimension,
                "min_dist": min_hamming_distance(C, cap=cap),
            }
        )
    return out


def run_catalogue(
    twist: TwistContext,
    m: int,
    constacyclic: bool = False,
    cap: int = 2 ** 20,
    threads: int = 1,
):
    """One record per full-equivalence class; deterministic across thread counts."""
    if m < 2:
        raise InvalidConfig("catalogue needs degree m > 1")
    classes = partition_classes(twist, m, constacyclic, cap)
    reps = [c["members"][0] for c in classes]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            code_lists = list(pool.map(lambda f: _codes_for(f, cap), reps))
    else:
        code_lists = [_codes_for(f, cap) for f in reps]
    records = []
    for cls, rep, codes in zip(classes, reps, code_lists):
        records.append(
            {
                "schema_version": SCHEMA_VERSION,
                "representative": poly_to_json(rep),
                "full_class": [poly_to_json(g) for g in cls["members"]],
                "chen_classes": [
                    [poly_to_json(g) for g in sub] for sub in cls["chen"]
                ],
                "codes": codes,
            }
        )
    return records
