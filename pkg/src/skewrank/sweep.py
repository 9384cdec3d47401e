"""Exhaustive sweeps over small cyclic and twisted cyclic code families.

A sweep entry is (p, e, m, r, lengths).  For r = 0 the family is every
monic divisor of x^n - 1 over GF(q^m); for r >= 1 it is every monic right
divisor of x^[rn] - x with coefficients in GF(q^m), enumerated through the
theta_m-stable GF(q^r)-subspaces of GF(q^{rn}) they annihilate.  The
default grids stay at desk scale on purpose: they are the cross-check
corpus for the length formulas, so every code in them gets the full
multi-route analysis.
"""
from __future__ import annotations

import itertools

from .code import DEFAULT_ENUM_CAP, LinearCode
from .cpoly import divisors_of_xn_minus_1
from .gf import FieldTower, make_tower
from .lengths import analyze
from .lpoly import LPoly, annihilator, qr_members, qr_span
from .textio import render_cpoly, render_lpoly

DEFAULT_CYCLIC_GRID = (
    (2, 1, 2, 0, (3, 4, 5, 6, 7)),
    (2, 1, 3, 0, (3, 4, 5, 6, 7)),
    (3, 1, 2, 0, (2, 4)),
)

DEFAULT_SKEW_GRID = (
    (2, 1, 2, 1, (2, 4)),
    (2, 1, 2, 2, (2, 3)),
)


def grid_towers(entries) -> list[FieldTower]:
    out = []
    for p, e, m, r, lengths in entries:
        for n in lengths:
            out.append(make_tower(p, e, m, r, n))
    return out


def iter_cyclic_codes(K: FieldTower):
    """(generator, code) for every cyclic code of length n over GF(q^m)."""
    for g in divisors_of_xn_minus_1(K, K.n):
        yield g, LinearCode.from_gpoly(K, g)


def _space_members(K: FieldTower, space) -> list[int]:
    basis = qr_members(K, space)
    scalars = K.subfield_elements(K.r)
    out = []
    for coeffs in itertools.product(scalars, repeat=len(basis)):
        v = 0
        for c, b in zip(coeffs, basis):
            if c:
                v = K.add(v, K.mul(c, b))
        out.append(v)
    return out


def stable_subspaces(K: FieldTower) -> list[tuple]:
    """All GF(q^r)-subspaces of GF(q^{rn}) stable under theta_m, found by
    closing spans orbit by orbit.  Stable spaces are exactly the spans of
    unions of theta_m orbits, so the walk reaches every one of them."""
    ambient = K.subfield_elements(K.r * K.n)
    zero = qr_span(K, ())
    seen = {zero}
    frontier = [zero]
    while frontier:
        grown = []
        for space in frontier:
            members = set(_space_members(K, space))
            basis = qr_members(K, space)
            for w in ambient:
                if not w or w in members:
                    continue
                orbit = []
                v = w
                for _ in range(K.r * K.n):
                    orbit.append(v)
                    v = K.frob(v, K.m)
                    if v == w:
                        break
                cand = qr_span(K, list(basis) + orbit)
                if cand not in seen:
                    seen.add(cand)
                    grown.append(cand)
        frontier = grown
    return sorted(seen, key=lambda s: (len(s), s))


def enumerate_right_divisors(K: FieldTower) -> list[LPoly]:
    """Every monic right divisor of x^[rn] - x with GF(q^m) coefficients,
    in a canonical order."""
    X = LPoly.xqn_minus_x(K, K.r, K.n)
    out = []
    for space in stable_subspaces(K):
        G = annihilator(K, [v for v in _space_members(K, space) if v])
        assert G.is_rational(K.m)
        assert G.right_divides(X)
        assert G.qdeg == len(space)
        out.append(G)
    out.sort(key=lambda G: (G.qdeg, G.c))
    return out


def iter_skew_codes(K: FieldTower):
    """(generator, code) for every twisted cyclic code of length n whose
    generator has GF(q^m) coefficients."""
    for G in enumerate_right_divisors(K):
        yield G, LinearCode.from_glpoly(K, G)


def iter_grid_codes(entries):
    """(tower, generator text, generator type, code) over a whole grid."""
    for K in grid_towers(entries):
        if K.r == 0:
            for g, C in iter_cyclic_codes(K):
                yield K, render_cpoly(K, g), "conv_poly", C
        else:
            for G, C in iter_skew_codes(K):
                yield K, render_lpoly(K, G), "lin_poly", C


def sweep(entries=None, enum_cap: int = DEFAULT_ENUM_CAP) -> list[dict]:
    """Full analysis of every code in the grid, as JSON-ready records."""
    if entries is None:
        entries = DEFAULT_CYCLIC_GRID + DEFAULT_SKEW_GRID
    records = []
    for K, text, gtype, C in iter_grid_codes(entries):
        rep = analyze(C, enum_cap)
        records.append({
            "tower": {"p": K.p, "e": K.e, "m": K.m, "r": K.r, "n": K.n},
            "generator": text,
            "generator_type": gtype,
            "n": rep.n,
            "k": rep.k,
            "l_R": rep.rank_length,
            "l_P": rep.period_length,
            "degenerate": rep.degenerate,
            "skew_bounds": {
                "lower": rep.skew_lower,
                "upper": rep.skew_upper,
                "attained": rep.skew_attained,
            },
        })
    return records


def sweep_summary(records: list[dict]) -> dict:
    towers: dict[str, dict] = {}
    for rec in records:
        t = rec["tower"]
        key = f"p{t['p']}e{t['e']}m{t['m']}r{t['r']}n{t['n']}"
        slot = towers.setdefault(key, {"codes": 0, "degenerate": 0})
        slot["codes"] += 1
        slot["degenerate"] += bool(rec["degenerate"])
    return {
        "codes": len(records),
        "degenerate": sum(bool(r["degenerate"]) for r in records),
        "towers": towers,
    }
