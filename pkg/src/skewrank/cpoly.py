"""Conventional polynomials over one field of a tower.

Coefficients are packed field values, constant term first, trailing zeros
stripped, so equal polynomials are equal tuples.  The zero polynomial has
degree -infinity.  Everything here commutes; the twisted relatives live in
lpoly.

Beyond ring arithmetic this module carries the closure and order machinery
for cyclic code analysis: Galois conjugate gcd/lcm closures, reciprocals,
twisted orders of a polynomial, root sets over a fixed root of unity, and
the cyclotomic-coset factorization of x^n - 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NotADivisor,
    NotCoprime,
    NotInBaseField,
    OrderCapExceeded,
    PathDisagreement,
    ZeroLowestCoefficient,
    ZeroPoly,
)
from .gf import FieldTower, divisors

DEFAULT_ORDER_CAP = 1 << 16


class CPoly:
    __slots__ = ("K", "c")

    def __init__(self, K: FieldTower, coeffs=()):
        cc = list(coeffs)
        while cc and cc[-1] == 0:
            cc.pop()
        self.K = K
        self.c = tuple(cc)

    # ------------------------------------------------------- constructors --

    @classmethod
    def zero(cls, K):
        return cls(K, ())

    @classmethod
    def one(cls, K):
        return cls(K, (1,))

    @classmethod
    def x(cls, K):
        return cls(K, (0, 1))

    @classmethod
    def monomial(cls, K, d: int, coeff: int = 1):
        return cls(K, (0,) * d + (coeff,))

    @classmethod
    def xn_minus_1(cls, K, n: int):
        return cls(K, (K.neg(1),) + (0,) * (n - 1) + (1,))

    # ------------------------------------------------------------- basics --

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else -math.inf

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def __getitem__(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    def lead(self) -> int:
        if not self.c:
            raise ZeroPoly("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.K is other.K and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash((id(self.K), self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"CPoly({list(self.c)})"

    # --------------------------------------------------------- arithmetic --

    def __add__(self, other):
        K = self.K
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = K.add(out[i], v)
        return CPoly(K, out)

    def __neg__(self):
        K = self.K
        return CPoly(K, (K.neg(v) for v in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        K = self.K
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.c, other.c
        if not a or not b:
            return CPoly.zero(K)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = K.add(out[i + j], K.mul(x, y))
        return CPoly(K, out)

    def scale(self, s: int) -> "CPoly":
        K = self.K
        if s == 0:
            return CPoly.zero(K)
        return CPoly(K, (K.mul(s, v) for v in self.c))

    def shift(self, d: int) -> "CPoly":
        """Multiply by x^d."""
        if not self.c:
            return self
        return CPoly(self.K, (0,) * d + self.c)

    def __divmod__(self, other: "CPoly"):
        K = self.K
        if not other.c:
            raise ZeroPoly("division by the zero polynomial")
        if len(self.c) < len(other.c):
            return CPoly.zero(K), self
        rem = list(self.c)
        dq = len(self.c) - len(other.c)
        quo = [0] * (dq + 1)
        binv = K.inv(other.c[-1])
        db = len(other.c) - 1
        for i in range(dq, -1, -1):
            c = rem[i + db]
            if c:
                c = K.mul(c, binv)
                quo[i] = c
                for j, bv in enumerate(other.c):
                    if bv:
                        rem[i + j] = K.sub(rem[i + j], K.mul(c, bv))
        return CPoly(K, quo), CPoly(K, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def divides(self, other: "CPoly") -> bool:
        if not self.c:
            return not other.c
        return (other % self).is_zero()

    def monic(self) -> "CPoly":
        if not self.c:
            return self
        if self.c[-1] == 1:
            return self
        return self.scale(self.K.inv(self.c[-1]))

    def pow(self, k: int) -> "CPoly":
        res, base = CPoly.one(self.K), self
        while k:
            if k & 1:
                res = res * base
            base = base * base
            k >>= 1
        return res

    def powmod(self, k: int, f: "CPoly") -> "CPoly":
        res, base = CPoly.one(self.K) % f, self % f
        while k:
            if k & 1:
                res = (res * base) % f
            base = (base * base) % f
            k >>= 1
        return res

    def __call__(self, v: int) -> int:
        K, acc = self.K, 0
        for co in reversed(self.c):
            acc = K.add(K.mul(acc, v), co)
        return acc

    # -------------------------------------------------- Galois operations --

    def frobenius(self, s: int) -> "CPoly":
        K = self.K
        return CPoly(K, (K.frob(v, s) for v in self.c))

    def is_rational(self, d: int = 1) -> bool:
        """True when all coefficients lie in GF(q^d)."""
        K = self.K
        return all(K.subfield_membership(v, d) for v in self.c)

    def reciprocal(self) -> "CPoly":
        """Monic reversal x^deg * f(1/x) / f(0); needs f(0) != 0."""
        if not self.c:
            raise ZeroPoly("zero polynomial has no reciprocal")
        if self.c[0] == 0:
            raise ZeroLowestCoefficient("reciprocal needs a nonzero constant term")
        K = self.K
        inv0 = K.inv(self.c[0])
        return CPoly(K, (K.mul(inv0, v) for v in reversed(self.c)))


# ------------------------------------------------------------- gcd family --

def cgcd(f: CPoly, g: CPoly) -> CPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while g:
        f, g = g, f % g
    return f.monic()


def clcm(f: CPoly, g: CPoly) -> CPoly:
    if not f or not g:
        return CPoly.zero(f.K)
    return ((f * g) // cgcd(f, g)).monic()


def cxgcd(f: CPoly, g: CPoly):
    """Extended Euclid: returns (d, u, v) with u*f + v*g = d, d monic."""
    K = f.K
    r0, r1 = f, g
    u0, u1 = CPoly.one(K), CPoly.zero(K)
    v0, v1 = CPoly.zero(K), CPoly.one(K)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0:
        s = K.inv(r0.lead())
        r0, u0, v0 = r0.scale(s), u0.scale(s), v0.scale(s)
    return r0, u0, v0


def conjugate_closures(f: CPoly) -> tuple[CPoly, CPoly]:
    """(gcd, lcm) of the Galois conjugates of f over GF(q).

    Both results have coefficients in GF(q); the gcd is the largest rational
    divisor of f and the lcm the smallest rational multiple.
    """
    K = f.K
    star, circ = f, f
    for i in range(1, K.m):
        fi = f.frobenius(i)
        star = cgcd(star, fi)
        circ = clcm(circ, fi)
    star, circ = star.monic(), circ.monic()
    assert star.is_rational() and circ.is_rational()
    return star, circ


# ------------------------------------------------------------ order logic --

def order_a(f: CPoly, a: int, n: int | None = None,
            cap: int = DEFAULT_ORDER_CAP):
    """Least e >= 1 with x^e congruent to a^e modulo f, i.e. the order of
    the unit (1/a)*x in the quotient ring.

    a must be a nonzero element of GF(q).  Returns None when x is not a
    unit modulo f (f(0) = 0), since no such e exists.  A length hint n with
    f dividing x^n - 1 turns the search into a divisor enumeration; without
    one the scan is incremental and capped.
    """
    K = f.K
    if a == 0 or not K.subfield_membership(a, 1):
        raise NotInBaseField("twist scalar must lie in GF(q)*")
    if f.is_zero():
        raise ZeroPoly("order of the zero polynomial is undefined")
    if f.degree == 0:
        return 1
    if f.c[0] == 0:
        return None
    x = CPoly.x(K)
    if n is not None and x.powmod(n, f).c == (K.pow(a, n),):
        # x^n = a^n mod f, so the order divides n * ord(a^n) in GF(q)*.
        an = K.pow(a, n)
        bound = n * _elt_order(K, an)
        for e in divisors(bound):
            if x.powmod(e, f).c == _const(K, K.pow(a, e)):
                return e
        raise AssertionError("divisor bound failed")  # unreachable
    xe = x % f
    ae = a
    for e in range(1, cap + 1):
        if xe.c == _const(K, ae):
            return e
        xe = (xe * x) % f
        ae = K.mul(ae, a)
    raise OrderCapExceeded(f"no twisted order found up to {cap}")


def _const(K, v: int) -> tuple:
    return (v,) if v else ()


def _elt_order(K, v: int) -> int:
    if v == 0:
        raise ZeroPoly("zero has no multiplicative order")
    e, acc = 1, v
    while acc != 1:
        acc = K.mul(acc, v)
        e += 1
    return e


# -------------------------------------------------------------- root sets --

@dataclass(frozen=True)
class RootSet:
    """Roots of a divisor of x^n - 1, recorded as exponents of the fixed
    primitive n-th root of unity."""
    n: int
    exponents: frozenset[int]

    def scaled(self, w: int) -> frozenset[int]:
        return frozenset((t * w) % self.n for t in self.exponents)


def root_set(f: CPoly, n: int) -> RootSet:
    K = f.K
    if math.gcd(n, K.p) != 1:
        raise NotCoprime(f"x^{n} - 1 is not squarefree in characteristic {K.p}")
    if not f.divides(CPoly.xn_minus_1(K, n)):
        raise NotADivisor("root sets are defined for divisors of x^n - 1")
    z = K.zeta(n)
    exps = frozenset(t for t in range(n) if f(K.pow(z, t)) == 0)
    assert len(exps) == f.degree
    return RootSet(n, exps)


def cyclotomic_cosets(n: int, w: int) -> list[frozenset[int]]:
    """Orbits of multiplication by w on Z/n, each as a frozenset, sorted by
    least element."""
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        orb, t = set(), s
        while t not in orb:
            orb.add(t)
            t = (t * w) % n
        seen |= orb
        out.append(frozenset(orb))
    return out


def mu_eta(f: CPoly, n: int) -> tuple[CPoly, int]:
    """The rational closure of f inside x^n - 1 and its degree, computed two
    ways: as the conjugate lcm, and from q-cyclotomic cosets meeting the
    root set.  Disagreement is fatal.
    """
    K = f.K
    _, circ = conjugate_closures(f)
    rs = root_set(f, n)
    z = K.zeta(n)
    prod = CPoly.one(K)
    for coset in cyclotomic_cosets(n, K.q):
        if coset & rs.exponents:
            for t in coset:
                prod = prod * CPoly(K, (K.neg(K.pow(z, t)), 1))
    prod = prod.monic()
    if prod != circ:
        raise PathDisagreement(
            f"rational closure mismatch: lcm path degree {circ.degree}, "
            f"coset path degree {prod.degree}")
    return circ, circ.degree if circ.c else 0


# ------------------------------------------------- factoring x^n - 1 ------

def factor_xn_minus_1(K: FieldTower, n: int) -> list[tuple[CPoly, int]]:
    """Monic irreducible factors of x^n - 1 over GF(q^m) with multiplicities.

    Writing n = n' * p^t with n' coprime to p, x^n - 1 = (x^{n'} - 1)^{p^t},
    and x^{n'} - 1 splits into one factor per q^m-cyclotomic coset mod n'.
    """
    np_, mult = n, 1
    while np_ % K.p == 0:
        np_ //= K.p
        mult *= K.p
    z = K.zeta(np_)
    qm = K.q ** K.m
    out = []
    for coset in cyclotomic_cosets(np_, qm):
        fac = CPoly.one(K)
        for t in sorted(coset):
            fac = fac * CPoly(K, (K.neg(K.pow(z, t)), 1))
        out.append((fac.monic(), mult))
    check = CPoly.one(K)
    for fac, mu in out:
        check = check * fac.pow(mu)
    assert check == CPoly.xn_minus_1(K, n)
    return out


def divisors_of_xn_minus_1(K: FieldTower, n: int):
    """Every monic divisor of x^n - 1 over GF(q^m), by exponent vectors on
    the irreducible factors.  Deterministic order."""
    facs = factor_xn_minus_1(K, n)
    out = [CPoly.one(K)]
    for fac, mult in facs:
        nxt = []
        for g in out:
            acc = g
            nxt.append(acc)
            for _ in range(mult):
                acc = acc * fac
                nxt.append(acc)
        out = nxt
    return out
