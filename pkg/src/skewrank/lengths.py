"""Rank-metric length analysis of cyclic and twisted cyclic codes.

The rank length of a code is the shortest length in which it can be
realized up to rank-preserving equivalence; for Galois-closed structure it
is the dimension of the Galois closure, and polynomial, root-set and
root-space formulas compute the same number along independent routes.
Every public quantity here is computed along every route its gates allow,
and any disagreement raises rather than returning a consensus, so a wrong
formula cannot hide.

The module also decides rank degeneracy (strict drop of rank length below
the code length) by a battery of equivalent criteria, builds explicit
rank-preserving semilinear equivalences with a verification pass, and
shortens a code onto its rank length as an ideal modulo the closed check
polynomial.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import linalg
from .code import (
    DEFAULT_ENUM_CAP,
    LinearCode,
    lpoly_to_vec,
    poly_to_vec,
    vec_to_lpoly,
    vec_to_poly,
)
from .cpoly import (
    CPoly,
    cgcd,
    conjugate_closures,
    mu_eta,
    order_a,
    root_set,
)
from .errors import (
    CheckPolyMismatch,
    CriterionDisagreement,
    DeskScaleExceeded,
    EnumerationCapExceeded,
    H0NotCentral,
    NoBetaForB,
    NotCyclic,
    NotGaloisClosed,
    NotInBaseField,
    PathDisagreement,
    UndeclaredSubfield,
    VerificationFailed,
    ZeroInput,
)
from .gf import FieldTower, divisors
from .lpoly import (
    LPoly,
    conjugate_closures_l,
    llcm,
    qr_dim,
    qr_intersect,
    qr_sum,
    rgcd,
    root_space,
)

DEFAULT_PROBE_CAP = 1 << 16


def _require_base_scalar(K: FieldTower, a: int):
    if a == 0 or not K.subfield_membership(a, 1):
        raise NotInBaseField("twist scalar must be a nonzero element of GF(q)")


def _skew_ready(C: LinearCode) -> bool:
    K = C.K
    return (K.r >= 1 and C.n == K.n and (K.r * K.n) % K.m == 0
            and (K.r % K.m) in C.skew_orders())


# ---------------------------------------------------------------- lengths --

def rank_length(C: LinearCode) -> tuple[int, dict[str, int]]:
    """Shortest rank-equivalent realization length, along every available
    route: closure dimension always, generator/check closures and root data
    when cyclic, twisted closures and root spaces when twisted cyclic."""
    K, n = C.K, C.n
    closure = C.galois_closure()
    paths: dict[str, int] = {"closure_dimension": closure.dim}
    if C.is_cyclic:
        g, h = C.generator_check_poly()
        gs, _ = conjugate_closures(g)
        _, hc = conjugate_closures(h)
        paths["check_closure_degree"] = hc.degree
        paths["generator_closure_codegree"] = n - gs.degree
        if math.gcd(n, K.p) == 1:
            try:
                zg, zh = root_set(g, n), root_set(h, n)
            except UndeclaredSubfield:
                zg = zh = None
            if zg is not None:
                inter = set(range(n))
                union: set[int] = set()
                for i in range(K.m):
                    inter &= zg.scaled(K.q ** i)
                    union |= zh.scaled(K.q ** i)
                paths["root_orbit_intersection_codegree"] = n - len(inter)
                paths["root_orbit_union_size"] = len(union)
    if closure.is_cyclic:
        _, hcl = closure.generator_check_poly()
        paths["closure_check_degree"] = hcl.degree
    if _skew_ready(C):
        G, _ = C.generator_check_lpoly()
        gstar = G
        space = root_space(G)
        for i in range(1, K.m):
            Gi = G.frobenius(i)
            gstar = rgcd(gstar, Gi)
            space = qr_intersect(K, space, root_space(Gi))
        paths["twisted_generator_closure_codegree"] = n - gstar.qdeg
        paths["twisted_root_intersection_codegree"] = n - qr_dim(space)
    values = set(paths.values())
    if len(values) != 1:
        raise PathDisagreement(f"rank length routes disagree: {paths}")
    return values.pop(), paths


def period_length(C: LinearCode) -> tuple[int, dict[str, int]]:
    """Least period of the plain cyclic shift on the code, as the smallest
    divisor of n fixing every generator row, cross-checked against the
    order of the closed check polynomial when the code is cyclic."""
    K, n = C.K, C.n
    value = None
    for d in divisors(n):
        if all(row == tuple(row[(i - d) % n] for i in range(n)) for row in C.rows):
            value = d
            break
    paths = {"shift_fix_scan": value}
    if C.is_cyclic:
        _, h = C.generator_check_poly()
        _, hc = conjugate_closures(h)
        paths["check_closure_order"] = order_a(hc, 1, n=n)
    values = set(paths.values())
    if len(values) != 1:
        raise PathDisagreement(f"period routes disagree: {paths}")
    return value, paths


def a_period_check(C: LinearCode, pi: int, t: int) -> bool:
    """Whether x^pi acts as multiplication by t on the code: every row c
    satisfies c[(j - pi) mod n] = t * c[j]."""
    K, n = C.K, C.n
    return all(
        all(row[(j - pi) % n] == K.mul(t, row[j]) for j in range(n))
        for row in C.rows)


def _closure_check(C: LinearCode) -> CPoly:
    closure = C.galois_closure()
    if not closure.is_cyclic:
        raise NotCyclic("Galois closure carries no cyclic structure")
    _, h0 = closure.generator_check_poly()
    assert h0.is_rational()
    return h0


def shift_length(C: LinearCode, a: int, r: int) -> int:
    """Shortest length of a realization compatible with the a-twisted,
    theta^r-semilinear shift: the minimum of the twisted orders of the
    closed check polynomial over the base scalars b that a Galois eigenvalue
    beta can realize."""
    K = C.K
    _require_base_scalar(K, a)
    h0 = _closure_check(C)
    best = None
    for b in K.subfield_nonzero(1):
        if K.solve_beta(b, r) is None:
            continue
        e = order_a(h0, K.mul(a, b), n=C.n)
        if best is None or e < best:
            best = e
    assert best is not None  # b = 1 always admits beta in the fixed field
    if r == 0 and not a_period_check(C, best, K.pow(a, best)):
        raise VerificationFailed("shift length fails its period property")
    return best


def shift_table(C: LinearCode) -> list[tuple[int, int, int]]:
    """(a, r, value) for every a in GF(q)* and r in 0..m-1, in fixed order."""
    K = C.K
    return [(a, r, shift_length(C, a, r))
            for a in K.subfield_nonzero(1) for r in range(K.m)]


# ----------------------------------------------------------- equivalences --

@dataclass(frozen=True)
class RankEquivalence:
    """A verified rank-preserving, theta^r-semilinear map between two
    cyclic Galois-closed codes: word -> beta * theta^r(word) * matrix."""
    source: LinearCode
    target: LinearCode
    matrix: tuple[tuple[int, ...], ...]
    a: int
    b: int
    r: int
    beta: int

    def apply(self, word) -> tuple[int, ...]:
        K = self.source.K
        twisted = [K.frob(v, self.r) for v in word]
        out = []
        for j in range(self.target.n):
            acc = 0
            for i, v in enumerate(twisted):
                if v and self.matrix[i][j]:
                    acc = K.add(acc, K.mul(v, self.matrix[i][j]))
            out.append(K.mul(self.beta, acc))
        return tuple(out)

    def apply_code(self, code: LinearCode) -> LinearCode:
        return LinearCode(self.source.K, [self.apply(row) for row in code.rows],
                          self.target.n)


def _rot_right(vec):
    return vec[-1:] + vec[:-1]


def build_equivalence(V: LinearCode, Vp: LinearCode, a: int, r: int,
                      beta: int, sample_cap: int = 4096) -> RankEquivalence:
    """Construct and verify the rank equivalence sending the shift action
    of V to the (a, theta^r)-twisted shift action of Vp.

    Both codes must be cyclic and Galois closed with rational generators;
    beta fixes the semilinear scaling and must induce a base-field twist
    b = theta^r(beta)/beta.  The check polynomials must match under scaling
    by ab.  The returned map is verified to carry V onto Vp, to preserve
    rank weights on an initial block of words, and to intertwine the shift
    operators on generator rows.
    """
    K = V.K
    _require_base_scalar(K, a)
    if beta == 0:
        raise ZeroInput("beta must be nonzero")
    for code in (V, Vp):
        if not code.is_cyclic:
            raise NotCyclic("equivalence endpoints must be cyclic")
        if not code.is_galois_closed:
            raise NotGaloisClosed("equivalence endpoints must be Galois closed")
    b = K.div(K.frob(beta, r), beta)
    if not K.subfield_membership(b, 1):
        raise NoBetaForB("beta does not induce a base-field twist")
    g, h = V.generator_check_poly()
    gp, hp = Vp.generator_check_poly()
    k = V.dim
    if Vp.dim != k:
        raise CheckPolyMismatch("endpoint dimensions differ")
    ab = K.mul(a, b)
    scaled = CPoly(K, [K.mul(h[i], K.pow(ab, i)) for i in range(k + 1)])
    if scaled != hp.scale(K.pow(ab, k)):
        raise CheckPolyMismatch("check polynomials are not related by the twist")
    if k == 0:
        A = tuple(tuple(0 for _ in range(Vp.n)) for _ in range(V.n))
    else:
        U = [poly_to_vec(g.shift(i), V.n) for i in range(k)]
        R = [tuple(K.mul(K.pow(ab, i), v) for v in poly_to_vec(gp.shift(i), Vp.n))
             for i in range(k)]
        sol = linalg.solve_matrix_right(K, U, R, V.n)
        if sol is None:
            raise VerificationFailed("transfer system is inconsistent")
        A = tuple(sol)
    assert all(K.subfield_membership(v, 1) for row in A for v in row)
    w = RankEquivalence(V, Vp, A, a, b, r, beta)
    if w.apply_code(V) != Vp:
        raise VerificationFailed("map does not carry the source onto the target")
    for word in itertools.islice(V.iter_words(), sample_cap):
        if V.rank_weight(word) != V.rank_weight(w.apply(word)):
            raise VerificationFailed("map does not preserve rank weights")
    for row in V.rows:
        lhs_vec = _rot_right(tuple(row))
        lhs = tuple(_mat_apply(K, lhs_vec, A, Vp.n))
        rhs = tuple(K.mul(ab, v) for v in _rot_right(tuple(_mat_apply(K, row, A, Vp.n))))
        if lhs != rhs:
            raise VerificationFailed("map does not intertwine the shifts")
    return w


def _mat_apply(K, vec, A, width):
    out = []
    for j in range(width):
        acc = 0
        for i, v in enumerate(vec):
            if v and A[i][j]:
                acc = K.add(acc, K.mul(v, A[i][j]))
        out.append(acc)
    return out


# -------------------------------------------------------------- shortening --

@dataclass(frozen=True)
class ShortenedCode:
    """A code rewritten in its rank length: an ideal in the quotient by the
    closed check polynomial, together with the data of the rewriting."""
    code: LinearCode
    generator_closure: CPoly
    check_closure: CPoly


def shorten_pseudo_cyclic(C: LinearCode,
                          cap: int = DEFAULT_ENUM_CAP) -> ShortenedCode:
    """Quotient a cyclic code by the rational part of its generator.

    Every word is divisible by the generator closure g*; dividing rewrites
    the code in length deg h0 = rank length, where it forms an ideal modulo
    the closed check polynomial h0.  Dimension, ideal stability and (under
    the cap) the rank weight distribution are verified.
    """
    K, n = C.K, C.n
    g, h = C.generator_check_poly()
    gs, _ = conjugate_closures(g)
    _, hc = conjugate_closures(h)
    if gs * hc != CPoly.xn_minus_1(K, n):
        raise VerificationFailed("closure pair does not factor x^n - 1")
    e = hc.degree
    frows = []
    for row in C.rows:
        quo, rem = divmod(vec_to_poly(K, row), gs)
        if not rem.is_zero():
            raise VerificationFailed("word escaped the generator closure ideal")
        frows.append(poly_to_vec(quo, e))
    D = LinearCode(K, frows, e)
    if D.dim != C.dim:
        raise VerificationFailed("shortening changed the dimension")
    for row in D.rows:
        shifted = (vec_to_poly(K, row).shift(1)) % hc
        if not D.contains(poly_to_vec(shifted, e)):
            raise VerificationFailed("shortened code is not an ideal")
    _assert_distributions_match(C, D, cap)
    if hc.c == (K.neg(1),) + (0,) * (e - 1) + (1,) and not D.is_cyclic:
        raise VerificationFailed("plain modulus must give a cyclic image")
    return ShortenedCode(D, gs, hc)


@dataclass(frozen=True)
class ShortenedTwistedCode:
    code: LinearCode
    generator_closure: LPoly
    check_closure: LPoly


def shorten_pseudo_skew(C: LinearCode,
                        cap: int = DEFAULT_ENUM_CAP) -> ShortenedTwistedCode:
    """Twisted analog of the pseudo-cyclic shortening: right-divide every
    word by the closure G* of the twisted generator, landing in an ideal
    modulo the lower closure H0 of the check.  H0 must be central for the
    quotient to carry a ring structure; otherwise the construction refuses.
    """
    K, n = C.K, C.n
    G, H = C.generator_check_lpoly()
    gstar = G
    for i in range(1, K.m):
        gstar = rgcd(gstar, G.frobenius(i))
    H0 = conjugate_closures_l(H, n)[3]
    X = LPoly.xqn_minus_x(K, K.r, n)
    if gstar * H0 != X or H0 * gstar != X:
        raise VerificationFailed("twisted closure pair does not factor the modulus")
    if not H0.is_central():
        raise H0NotCentral(
            "lower check closure is not central; the twisted quotient is undefined")
    e = H0.qdeg
    frows = []
    for row in C.rows:
        quo, rem = vec_to_lpoly(K, K.r, row).right_divmod(gstar)
        if not rem.is_zero():
            raise VerificationFailed("word escaped the twisted generator ideal")
        frows.append(lpoly_to_vec(quo, e))
    D = LinearCode(K, frows, e)
    if D.dim != C.dim:
        raise VerificationFailed("twisted shortening changed the dimension")
    y = LPoly(K, K.r, (0, 1))
    for row in D.rows:
        shifted = (y * vec_to_lpoly(K, K.r, row)) % H0
        if not D.contains(lpoly_to_vec(shifted, e)):
            raise VerificationFailed("twisted shortened code is not an ideal")
    _assert_distributions_match(C, D, cap)
    return ShortenedTwistedCode(D, gstar, H0)


def _assert_distributions_match(C: LinearCode, D: LinearCode, cap: int):
    try:
        dc, dd = C.weight_distribution(cap), D.weight_distribution(cap)
    except EnumerationCapExceeded:
        return
    if dc != dd:
        raise VerificationFailed("rank weight distribution changed")


# ------------------------------------------------------------- degeneracy --

def degeneracy_report(C: LinearCode) -> tuple[bool, list[dict]]:
    """Decide rank degeneracy along every criterion the code's structure
    gates open, and require unanimity."""
    K, n = C.K, C.n
    lR, _ = rank_length(C)
    items = [{"id": "rank_deficient", "value": lR < n}]
    if C.is_cyclic:
        g, h = C.generator_check_poly()
        gs, _ = conjugate_closures(g)
        _, hc = conjugate_closures(h)
        xn1 = CPoly.xn_minus_1(K, n)
        items.append({"id": "generator_closure_nontrivial",
                      "value": not gs.is_one()})
        items.append({"id": "check_closure_proper", "value": hc != xn1})
        if cgcd(g, h).is_one():
            e = C.idempotent_generator()
            prod = CPoly.one(K)
            for i in range(K.m):
                prod = (prod * (CPoly.one(K) - e.frobenius(i))) % xn1
            items.append({"id": "idempotent_coproduct_nonzero",
                          "value": not prod.is_zero()})
        if math.gcd(n, K.p) == 1:
            try:
                zg, zh = root_set(g, n), root_set(h, n)
                eta_dual = mu_eta(h.reciprocal(), n)[1]
            except UndeclaredSubfield:
                zg = None
            if zg is not None:
                inter = set(range(n))
                union: set[int] = set()
                for i in range(K.m):
                    inter &= zg.scaled(K.q ** i)
                    union |= zh.scaled(K.q ** i)
                items.append({"id": "root_orbit_intersection_nonempty",
                              "value": bool(inter)})
                items.append({"id": "root_orbit_union_proper",
                              "value": union != set(range(n))})
                items.append({"id": "dual_closure_degree_drops",
                              "value": eta_dual < n})
        items.append({"id": "rational_divisor_scan",
                      "value": _has_rational_divisor(g)})
        items.append({"id": "rational_multiple_scan",
                      "value": _has_rational_proper_multiple(h, n)})
    if _skew_ready(C):
        G, H = C.generator_check_lpoly()
        gstar = G
        space = root_space(G)
        for i in range(1, K.m):
            gstar = rgcd(gstar, G.frobenius(i))
            space = qr_intersect(K, space, root_space(G.frobenius(i)))
        items.append({"id": "twisted_generator_closure_nontrivial",
                      "value": not gstar.is_identity()})
        items.append({"id": "twisted_root_intersection_nonzero",
                      "value": qr_dim(space) > 0})
        X = LPoly.xqn_minus_x(K, K.r, n)
        hp = H.perp()
        circ = hp
        dual_space = root_space(hp)
        for i in range(1, K.m):
            hpi = hp.frobenius(i)
            circ = llcm(circ, hpi)
            dual_space = qr_sum(K, dual_space, root_space(hpi))
        items.append({"id": "twisted_dual_closure_proper",
                      "value": circ.monic() != X.monic()})
        items.append({"id": "twisted_dual_root_sum_proper",
                      "value": qr_dim(dual_space) < n})
        items.append({"id": "twisted_rational_divisor_scan",
                      "value": _has_rational_right_divisor(G)})
        # The scan must run on the adjoint: short rational right multiples
        # of H itself exist for non-degenerate codes (and can be missing
        # for degenerate ones), but through the adjoint anti-automorphism
        # the multiples of H-perp are exactly dual to the rational right
        # divisors of G.
        items.append({"id": "twisted_dual_rational_multiple_scan",
                      "value": _has_rational_proper_right_multiple(hp, n)})
    values = {item["value"] for item in items}
    if len(values) != 1:
        raise CriterionDisagreement(f"degeneracy criteria disagree: {items}")
    return values.pop(), items


def _rational_monic_polys(K: FieldTower, degree: int):
    base = K.subfield_elements(1)
    for low in itertools.product(base, repeat=degree):
        yield CPoly(K, low + (1,))


def _has_rational_divisor(g: CPoly) -> bool:
    K = g.K
    for d in range(1, g.degree + 1):
        for f in _rational_monic_polys(K, d):
            if f.divides(g):
                return True
    return False


def _has_rational_proper_multiple(h: CPoly, n: int) -> bool:
    K = h.K
    for d in range(h.degree, n):
        for f in _rational_monic_polys(K, d):
            if h.divides(f):
                return True
    return False


def _rational_monic_lpolys(K: FieldTower, qdegree: int):
    base = K.subfield_elements(1)
    for low in itertools.product(base, repeat=qdegree):
        yield LPoly(K, K.r, low + (1,))


def _has_rational_right_divisor(G: LPoly) -> bool:
    K = G.K
    for d in range(1, G.qdeg + 1):
        for F in _rational_monic_lpolys(K, d):
            if F.right_divides(G):
                return True
    return False


def _has_rational_proper_right_multiple(H: LPoly, n: int) -> bool:
    K = H.K
    for d in range(H.qdeg, n):
        for F in _rational_monic_lpolys(K, d):
            if H.right_divides(F):
                return True
    return False


# -------------------------------------------------------------- dual check --

def eta_duality_check(C: LinearCode) -> int:
    """The degree of the rational closure of the generator equals the rank
    length of the dual code; both sides are computed and compared."""
    g, _ = C.generator_check_poly()
    eta = mu_eta(g, C.n)[1]
    lr_dual, _ = rank_length(C.dual())
    if eta != lr_dual:
        raise PathDisagreement(
            f"closure degree {eta} differs from dual rank length {lr_dual}")
    return eta


# ------------------------------------------------------------ full report --

@dataclass(frozen=True)
class LengthReport:
    n: int
    k: int
    rank_length: int
    rank_length_paths: dict
    period_length: int
    period_length_paths: dict
    shift_lengths: tuple[tuple[int, int, int], ...]
    skew_lower: int
    skew_upper: int | None
    skew_attained: bool | None
    witness: LinearCode | None
    degenerate: bool
    criteria: tuple[dict, ...]


def skew_length_bounds(C: LinearCode, enum_cap: int = DEFAULT_ENUM_CAP):
    """(lower, upper, attained, witness) for the least twisted realization
    length: the rank length from below, the best pseudo-realization from
    above, and a verified witness code when the binomial criterion shows
    the lower bound is attained."""
    lR, _ = rank_length(C)
    if not C.galois_closure().is_cyclic:
        return lR, None, None, None
    upper = min(v for _, _, v in shift_table(C))
    attained, witness = _binomial_witness(C, enum_cap)
    if attained:
        upper = lR
    return lR, upper, attained, witness


def analyze(C: LinearCode, enum_cap: int = DEFAULT_ENUM_CAP) -> LengthReport:
    """The full length/degeneracy report for one code, with the chain of
    inequalities between the lengths asserted."""
    K, n = C.K, C.n
    lR, lRp = rank_length(C)
    lP, lPp = period_length(C)
    closure = C.galois_closure()
    table: tuple = ()
    upper = None
    attained = None
    witness = None
    if closure.is_cyclic:
        table = tuple(shift_table(C))
        upper = min(v for _, _, v in table)
        attained, witness = _binomial_witness(C, enum_cap)
        if attained:
            upper = lR
    degenerate, criteria = degeneracy_report(C)
    if degenerate != (lR < n):
        raise CriterionDisagreement("degeneracy flag contradicts the rank length")
    if table:
        plain = [v for a, r, v in table if a == 1 and r == 0]
        assert plain == [lP]
        assert lR <= min(v for _, _, v in table)
        assert upper is not None and lR <= upper <= lP
    assert n % lP == 0
    return LengthReport(
        n=n, k=C.dim,
        rank_length=lR, rank_length_paths=lRp,
        period_length=lP, period_length_paths=lPp,
        shift_lengths=table,
        skew_lower=lR, skew_upper=upper, skew_attained=attained,
        witness=witness,
        degenerate=degenerate, criteria=tuple(criteria))


def _binomial_witness(C: LinearCode, enum_cap: int):
    """When the closed check polynomial is x^e - a^e, build the cyclic
    length-e witness through a verified equivalence; returns
    (attained, witness_code)."""
    K = C.K
    h0 = _closure_check(C)
    e = h0.degree
    if e == 0:
        return True, LinearCode.zero(K, 0)
    body_zero = all(h0[i] == 0 for i in range(1, e))
    if not body_zero:
        return False, None
    c = K.neg(h0[0])
    scale_a = next((a for a in K.subfield_nonzero(1) if K.pow(a, e) == c), None)
    if scale_a is None:
        return False, None
    target = LinearCode.full(K, e)
    w = build_equivalence(C.galois_closure(), target, scale_a, 0, 1)
    witness = w.apply_code(C)
    # F(y v) = a^{q^s} y' F(v) for a base-field matrix intertwining the
    # shifts, so every shift structure of the source survives.
    if witness.dim != C.dim or not (C.skew_orders() <= witness.skew_orders()):
        raise VerificationFailed("twisted witness lost its structure")
    _assert_distributions_match(C, witness, enum_cap)
    return True, witness


def singleton_audit(C: LinearCode, report: LengthReport,
                    cap: int = DEFAULT_ENUM_CAP) -> list[dict] | None:
    """Check d <= l - k + 1 for the minimum rank distance d against every
    realization length l the report provides.  None when enumeration is
    capped out; empty for the zero code."""
    if C.dim == 0:
        return []
    try:
        d = C.min_rank_distance(cap)
    except EnumerationCapExceeded:
        return None
    out = []
    lengths = [("rank", report.rank_length), ("period", report.period_length)]
    lengths += [(f"shift:{a}:{r}", v) for a, r, v in report.shift_lengths]
    if report.skew_attained:
        lengths.append(("twisted", report.skew_upper))
    for kind, l in lengths:
        out.append({"kind": kind, "length": l, "ok": d <= l - C.dim + 1})
    return out


# ------------------------------------------------------------ exact probe --

def probe_exact_skew_length(C: LinearCode, cap: int = DEFAULT_PROBE_CAP):
    """Exhaustively search for the least length carrying a twisted cyclic
    image of the code under a rank equivalence with a base-field matrix.

    Walks candidate lengths from the lower bound up, enumerating all
    GF(q)-matrices (scalar prefactors never change the image of a linear
    code, so only the matrix matters) applied to the code and each of its
    Galois conjugates, and certifying any hit word by word.  Only viable at
    toy scale; the enumeration count q^(n*n') is capped.
    """
    K, n = C.K, C.n
    report = analyze(C)
    lo = report.rank_length
    # A realization always exists at the period length (fold the repeats),
    # so the window [lo, period] is guaranteed to contain any structure the
    # code carries.
    hi = report.period_length
    if lo == 0:
        return 0, LinearCode.zero(K, 0)
    base = K.subfield_elements(1)
    for np_ in range(max(lo, 1), hi + 1):
        total = len(base) ** (n * np_)
        if total > cap:
            raise DeskScaleExceeded(
                f"{total} candidate matrices at length {np_} exceed the probe cap")
        sources = [C.frobenius(i) for i in range(K.m)]
        for flat in itertools.product(base, repeat=n * np_):
            A = [flat[i * np_:(i + 1) * np_] for i in range(n)]
            for src in sources:
                img_rows = [tuple(_mat_apply(K, row, A, np_)) for row in src.rows]
                D = LinearCode(K, img_rows, np_)
                if D.dim != C.dim:
                    continue
                if not D.skew_orders():
                    continue
                ok = True
                for word in src.iter_words():
                    if src.rank_weight(word) != src.rank_weight(
                            tuple(_mat_apply(K, word, A, np_))):
                        ok = False
                        break
                if ok:
                    return np_, D
    return None, None
