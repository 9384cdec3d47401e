"""Twisted polynomials: the linearized side of the analysis.

An LPoly over a tower with skew order r is a sum of terms c * x^[ri] where
x^[j] means x^(q^j).  Coefficient index i stands for x^[ri], so index 0 is
x itself, the identity map.  The product is composition of the linearized
maps, which on coefficients reads

    (F (*) G)_k = sum over i+j=k of F_i * theta^{ri}(G_j),

a twisted convolution.  The ring is left and right Euclidean; division here
is right division throughout (F = Q (*) G + R), matching the left-ideal
view of twisted cyclic codes modulo x^[rn] - x.

Root spaces live in GF(q^{rn}) and are GF(q^r)-subspaces; the subspace
helpers at the bottom keep them in canonical reduced coordinate form so
equality is tuple equality.
"""
from __future__ import annotations

from .errors import (
    BothZero,
    MixedSkewOrder,
    NotInBaseField,
    VerificationFailed,
    ZeroInput,
    ZeroLowestCoefficient,
    ZeroPoly,
)
from . import linalg
from .cpoly import CPoly
from .gf import FieldTower


class LPoly:
    __slots__ = ("K", "r", "c")

    def __init__(self, K: FieldTower, r: int, coeffs=()):
        if r < 1:
            raise ZeroInput("twisted polynomials need skew order r >= 1")
        cc = list(coeffs)
        while cc and cc[-1] == 0:
            cc.pop()
        self.K = K
        self.r = r
        self.c = tuple(cc)

    # ------------------------------------------------------- constructors --

    @classmethod
    def zero(cls, K, r):
        return cls(K, r, ())

    @classmethod
    def one(cls, K, r):
        """The identity map x = x^[0]."""
        return cls(K, r, (1,))

    @classmethod
    def xqn_minus_x(cls, K, r, n: int):
        """x^[rn] - x, the two-sided modulus of length-n twisted cyclicity."""
        return cls(K, r, (K.neg(1),) + (0,) * (n - 1) + (1,))

    # ------------------------------------------------------------- basics --

    @property
    def qdeg(self):
        return len(self.c) - 1 if self.c else -1

    def is_zero(self) -> bool:
        return not self.c

    def is_identity(self) -> bool:
        return self.c == (1,)

    def __getitem__(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def lead(self) -> int:
        if not self.c:
            raise ZeroPoly("zero twisted polynomial has no leading coefficient")
        return self.c[-1]

    def __eq__(self, other):
        if isinstance(other, LPoly):
            return self.K is other.K and self.r == other.r and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((id(self.K), self.r, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"LPoly(r={self.r}, {list(self.c)})"

    def _match(self, other: "LPoly"):
        if self.K is not other.K or self.r != other.r:
            raise MixedSkewOrder("operands built over different twists")

    # --------------------------------------------------------- arithmetic --

    def __add__(self, other: "LPoly"):
        self._match(other)
        K = self.K
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = K.add(out[i], v)
        return LPoly(K, self.r, out)

    def __neg__(self):
        K = self.K
        return LPoly(K, self.r, (K.neg(v) for v in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LPoly"):
        """Composition product, twisted convolution on coefficients."""
        self._match(other)
        K, r = self.K, self.r
        a, b = self.c, other.c
        if not a or not b:
            return LPoly.zero(K, r)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = K.add(out[i + j], K.mul(x, K.frob(y, r * i)))
        return LPoly(K, r, out)

    def scale(self, s: int) -> "LPoly":
        """Left multiplication by the constant map s*x."""
        K = self.K
        if s == 0:
            return LPoly.zero(K, self.r)
        return LPoly(K, self.r, (K.mul(s, v) for v in self.c))

    def monic(self) -> "LPoly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.K.inv(self.c[-1]))

    def right_divmod(self, other: "LPoly"):
        """Q, R with self = Q (*) other + R and qdeg R < qdeg other."""
        self._match(other)
        K, r = self.K, self.r
        if not other.c:
            raise ZeroPoly("right division by the zero twisted polynomial")
        dg = len(other.c) - 1
        if len(self.c) - 1 < dg:
            return LPoly.zero(K, r), self
        rem = list(self.c)
        dq = len(self.c) - 1 - dg
        quo = [0] * (dq + 1)
        glead = other.c[-1]
        for i in range(dq, -1, -1):
            cc = rem[i + dg]
            if cc:
                cc = K.div(cc, K.frob(glead, r * i))
                quo[i] = cc
                for j, gv in enumerate(other.c):
                    if gv:
                        rem[i + j] = K.sub(rem[i + j], K.mul(cc, K.frob(gv, r * i)))
        return LPoly(K, r, quo), LPoly(K, r, rem)

    def __mod__(self, other):
        return self.right_divmod(other)[1]

    def __floordiv__(self, other):
        return self.right_divmod(other)[0]

    def right_divides(self, other: "LPoly") -> bool:
        if not self.c:
            return not other.c
        return (other % self).is_zero()

    def __call__(self, v: int) -> int:
        """Evaluate the linearized map at an ambient element."""
        K, r = self.K, self.r
        acc = 0
        for i, co in enumerate(self.c):
            if co:
                acc = K.add(acc, K.mul(co, K.frob(v, r * i)))
        return acc

    # -------------------------------------------------- Galois operations --

    def frobenius(self, s: int) -> "LPoly":
        """Apply theta^s to every coefficient; a ring automorphism."""
        K = self.K
        return LPoly(K, self.r, (K.frob(v, s) for v in self.c))

    def is_rational(self, d: int = 1) -> bool:
        K = self.K
        return all(K.subfield_membership(v, d) for v in self.c)

    def perp(self) -> "LPoly":
        """Twisted reversal: coefficient i becomes theta^{ri} of coefficient
        d-i, normalized monic.  Needs a nonzero constant coefficient, which
        every right divisor of x^[rn] - x has."""
        if not self.c:
            raise ZeroPoly("zero twisted polynomial has no reversal")
        if self.c[0] == 0:
            raise ZeroLowestCoefficient("reversal needs a nonzero lowest coefficient")
        K, r, d = self.K, self.r, len(self.c) - 1
        denom = K.frob(self.c[0], r * d)
        return LPoly(K, r, (K.div(K.frob(self.c[d - i], r * i), denom)
                            for i in range(d + 1)))

    def top(self, n: int) -> "LPoly":
        """The length-n companion reversal: coefficient i becomes
        theta^{r(n-d+i)} of coefficient d-i over the constant one."""
        if not self.c:
            raise ZeroPoly("zero twisted polynomial has no reversal")
        if self.c[0] == 0:
            raise ZeroLowestCoefficient("reversal needs a nonzero lowest coefficient")
        K, r, d = self.K, self.r, len(self.c) - 1
        inv0 = K.inv(self.c[0])
        return LPoly(K, r, (K.frob(K.mul(self.c[d - i], inv0), r * (n - d + i))
                            for i in range(d + 1)))

    def is_central(self, oracle: bool = True) -> bool:
        """Whether the element commutes with the whole ring.

        Formula: nonzero coefficient indices are multiples of
        m / gcd(m, r) and all coefficients lie in GF(q^{gcd(m, r)}).
        With oracle=True this is cross-checked by commuting against the two
        ring generators, multiplication by a primitive element and x^[r].
        """
        import math as _math
        K, r = self.K, self.r
        d = _math.gcd(K.m, r)
        stride = K.m // d
        ok = all(v == 0 or (i % stride == 0 and K.subfield_membership(v, d))
                 for i, v in enumerate(self.c))
        if oracle:
            a = LPoly(K, r, (K.alpha(),))
            y = LPoly(K, r, (0, 1))
            commutes = (self * a == a * self) and (self * y == y * self)
            if commutes != ok:
                raise VerificationFailed("centrality formula disagrees with commutators")
        return ok


def lift(f: CPoly, r: int) -> LPoly:
    """Reinterpret a conventional polynomial as a twisted one: x^i goes to
    x^[ri], coefficients unchanged."""
    return LPoly(f.K, r, f.c)


# -------------------------------------------------------------- gcd family --

def rgcd(F: LPoly, G: LPoly) -> LPoly:
    """Monic greatest common right divisor."""
    if F.is_zero() and G.is_zero():
        raise BothZero("rgcd of two zero twisted polynomials")
    while G:
        F, G = G, F % G
    return F.monic()


def _rxgcd(F: LPoly, G: LPoly):
    """Extended right Euclid: ((d, u, v), (u1, v1)) with
    d = u(*)F + v(*)G the monic rgcd and u1(*)F = -v1(*)G the minimal
    common left multiple relation."""
    K, r = F.K, F.r
    r0, r1 = F, G
    u0, u1 = LPoly.one(K, r), LPoly.zero(K, r)
    v0, v1 = LPoly.zero(K, r), LPoly.one(K, r)
    while r1:
        q, rem = r0.right_divmod(r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return (r0, u0, v0), (u1, v1)


def llcm(F: LPoly, G: LPoly) -> LPoly:
    """Monic least common left multiple, from the terminal relation of the
    extended Euclid; right divisibility by both inputs is verified."""
    if F.is_zero() or G.is_zero():
        return LPoly.zero(F.K, F.r)
    (d, _, _), (u1, v1) = _rxgcd(F, G)
    L = (u1 * F).monic()
    if L.qdeg != F.qdeg + G.qdeg - d.qdeg:
        raise VerificationFailed("common left multiple has wrong degree")
    if not (F.right_divides(L) and G.right_divides(L)):
        raise VerificationFailed("common left multiple fails divisibility")
    return L


def conjugate_closures_l(F: LPoly, n: int):
    """The four Galois closures of a right divisor of x^[rn] - x:

    (rgcd of conjugates, llcm of conjugates,
     reversed rgcd of reversed conjugates, reversed llcm of reversed ones),

    all with coefficients in GF(q).
    """
    K = F.K
    star, circ = F, F
    pstar, pcirc = F.perp(), F.perp()
    for i in range(1, K.m):
        Fi = F.frobenius(i)
        star = rgcd(star, Fi)
        circ = llcm(circ, Fi)
        Pi = Fi.perp()
        pstar = rgcd(pstar, Pi)
        pcirc = llcm(pcirc, Pi)
    lower_star = pstar.top(n)
    lower_circ = pcirc.top(n)
    for out in (star, circ, lower_star, lower_circ):
        assert out.is_rational(), "closure left the base field"
    return star, circ, lower_star, lower_circ


# -------------------------------------------------------------- root spaces --

def annihilator(K: FieldTower, vectors) -> LPoly:
    """Monic twisted polynomial of minimal q-degree vanishing on the given
    elements of GF(q^{rn}); its q-degree equals the GF(q^r)-dimension of
    their span."""
    r = K.r
    F = LPoly.one(K, r)
    y = LPoly(K, r, (0, 1))
    for w in vectors:
        img = F(w)
        if img == 0:
            continue
        step = y - LPoly(K, r, (K.pow(img, K.q ** r - 1),))
        F = step * F
    return F


def root_space(F: LPoly):
    """Kernel of the linearized map on GF(q^{rn}), canonical over GF(q^r)."""
    K = F.K
    big, small = K.r * K.n, K.r
    basis = K.basis_over(big, small)
    nb = len(basis)
    cols = [K.coords_over(F(b), big, small) for b in basis]
    rows = [tuple(cols[j][u] for j in range(nb)) for u in range(nb)]
    kern = linalg.right_kernel(K, rows, nb)
    elems = []
    for vec in kern:
        v = 0
        for cj, bj in zip(vec, basis):
            if cj:
                v = K.add(v, K.mul(cj, bj))
        elems.append(v)
    return qr_span(K, elems)


def sample_right_divisors(K: FieldTower, rng, count: int):
    """Deterministically sample monic right divisors of x^[rn] - x with
    coefficients in GF(q^m).

    Each draw spans random elements of GF(q^{rn}) together with their
    theta_m orbits, so the span is stable under theta_m and the annihilator
    has entries in GF(q^m).  The trivial divisor (zero seeds) can occur.
    """
    r, n = K.r, K.n
    X = LPoly.xqn_minus_x(K, r, n)
    big = K.subfield_elements(r * n)
    out = []
    for _ in range(count):
        nseeds = rng.randint(0, n)
        gens = []
        for _ in range(nseeds):
            w = big[rng.randrange(len(big))]
            for _i in range(n * r):
                gens.append(w)
                w2 = K.frob(w, K.m)
                if w2 == w:
                    break
                w = w2
        space = qr_span(K, gens)
        G = annihilator(K, qr_members(K, space))
        assert G.is_rational(K.m)
        assert G.right_divides(X)
        assert G.qdeg == len(space)
        out.append(G)
    return out


# ---------------------------------------------- GF(q^r)-subspace helpers ----

def qr_span(K: FieldTower, elems):
    """Canonical form of the GF(q^r)-span of elements of GF(q^{rn}):
    reduced coordinate rows with respect to the fixed power basis."""
    big, small = K.r * K.n, K.r
    rows = [K.coords_over(v, big, small) for v in elems if v]
    red, _ = linalg.rref(K, rows, K.n)
    return red


def qr_members(K: FieldTower, space) -> list[int]:
    """Ambient representatives of a canonical subspace basis."""
    big, small = K.r * K.n, K.r
    return [K.from_coords(row, big, small) for row in space]


def qr_dim(space) -> int:
    return len(space)


def qr_sum(K: FieldTower, a, b):
    return linalg.rref(K, list(a) + list(b), K.n)[0]


def qr_intersect(K: FieldTower, a, b):
    """Intersection via the kernel of [A^T | -B^T]."""
    if not a or not b:
        return ()
    da, db = len(a), len(b)
    rows = []
    for col in range(K.n):
        rows.append(tuple([a[i][col] for i in range(da)]
                          + [K.neg(b[j][col]) for j in range(db)]))
    kern = linalg.right_kernel(K, rows, da + db)
    elems = []
    for vec in kern:
        coords = [0] * K.n
        for i in range(da):
            if vec[i]:
                for col in range(K.n):
                    coords[col] = K.add(coords[col], K.mul(vec[i], a[i][col]))
        elems.append(tuple(coords))
    red, _ = linalg.rref(K, elems, K.n)
    return red


def qr_frob(K: FieldTower, space, s: int):
    """Image of the subspace under theta^s."""
    members = qr_members(K, space)
    return qr_span(K, [K.frob(v, s) for v in members])


def qr_full(K: FieldTower):
    return qr_span(K, K.basis_over(K.r * K.n, K.r))
