"""Linear codes over GF(q^m) with cyclic and twisted-cyclic structure.

A code is held as the reduced row echelon form of any generator matrix, so
two objects describe the same code exactly when their row tuples are equal.
Alongside plain linear-algebra operations (dual, sum, intersection) the
class extracts generator/check polynomials in the conventional and twisted
senses, always re-verifying the extraction by rebuilding the code.

Rank weight of a word is the GF(q)-dimension of the span of its components'
coordinate vectors; full weight distributions are enumerated under a cap
with a prefix-reusing depth first walk and cached per tower.
"""
from __future__ import annotations

import itertools
import weakref

from . import linalg
from .cpoly import CPoly, cgcd, cxgcd
from .errors import (
    EnumerationCapExceeded,
    LengthMismatch,
    NotADivisor,
    NotARightDivisor,
    NotCoprime,
    NotCoprimeGH,
    NotCosetClosed,
    NotCyclic,
    NotSkewCyclic,
    SkewDivisibilityViolated,
    VerificationFailed,
)
from .gf import FieldTower
from .lpoly import LPoly, rgcd as l_rgcd

DEFAULT_ENUM_CAP = 1 << 16

_dist_caches: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def poly_to_vec(f: CPoly, n: int) -> tuple[int, ...]:
    if f.degree >= n:
        raise LengthMismatch(f"degree {f.degree} does not fit in length {n}")
    return tuple(f[i] for i in range(n))


def vec_to_poly(K: FieldTower, vec) -> CPoly:
    return CPoly(K, vec)


def lpoly_to_vec(F: LPoly, n: int) -> tuple[int, ...]:
    if F.qdeg >= n:
        raise LengthMismatch(f"q-degree {F.qdeg} does not fit in length {n}")
    return tuple(F[i] for i in range(n))


def vec_to_lpoly(K: FieldTower, r: int, vec) -> LPoly:
    return LPoly(K, r, vec)


def twisted_shift(K: FieldTower, vec, s: int) -> tuple[int, ...]:
    """One step of the s-twisted cyclic shift: rotate right, apply theta^s."""
    n = len(vec)
    return tuple(K.frob(vec[(i - 1) % n], s) for i in range(n))


class LinearCode:
    __slots__ = ("K", "n", "rows", "pivots", "__weakref__")

    def __init__(self, K: FieldTower, rows, n: int | None = None):
        self.K = K
        if n is None:
            n = K.n
        self.n = n
        for row in rows:
            if len(row) != n:
                raise LengthMismatch("generator row has the wrong length")
        self.rows, self.pivots = linalg.rref(K, rows, n)

    # ------------------------------------------------------- constructors --

    @classmethod
    def zero(cls, K, n=None):
        return cls(K, (), n)

    @classmethod
    def full(cls, K, n=None):
        n = K.n if n is None else n
        eye = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        return cls(K, eye, n)

    @classmethod
    def from_gpoly(cls, K, g: CPoly, n: int | None = None) -> "LinearCode":
        """Cyclic code generated by a monic divisor g of x^n - 1."""
        n = K.n if n is None else n
        g = g.monic()
        if not g.divides(CPoly.xn_minus_1(K, n)):
            raise NotADivisor("generator must divide x^n - 1")
        rows = [poly_to_vec(g.shift(i), n) for i in range(n - g.degree)]
        code = cls(K, rows, n)
        assert code.dim == n - g.degree
        return code

    @classmethod
    def from_glpoly(cls, K, G: LPoly, n: int | None = None) -> "LinearCode":
        """Twisted cyclic code generated by a monic right divisor of
        x^[rn] - x."""
        n = K.n if n is None else n
        G = G.monic()
        X = LPoly.xqn_minus_x(K, G.r, n)
        if not G.right_divides(X):
            raise NotARightDivisor("generator must right-divide x^[rn] - x")
        y = LPoly(K, G.r, (0, 1))
        rows, acc = [], G
        for _ in range(n - G.qdeg):
            rows.append(lpoly_to_vec(acc, n))
            acc = y * acc
        code = cls(K, rows, n)
        assert code.dim == n - G.qdeg
        return code

    @classmethod
    def from_root_exponents(cls, K, exps, n: int | None = None) -> "LinearCode":
        """Cyclic code whose generator has roots zeta^s for s in exps; the
        set must be stable under multiplication by q^m mod n."""
        import math
        n = K.n if n is None else n
        if math.gcd(n, K.p) != 1:
            raise NotCoprime("root-exponent construction needs gcd(n, p) = 1")
        exps = frozenset(s % n for s in exps)
        qm = K.q ** K.m
        if frozenset((s * qm) % n for s in exps) != exps:
            raise NotCosetClosed("exponent set is not closed under multiplication by q^m")
        z = K.zeta(n)
        g = CPoly.one(K)
        for s in sorted(exps):
            g = g * CPoly(K, (K.neg(K.pow(z, s)), 1))
        assert g.is_rational(K.m)
        return cls.from_gpoly(K, g, n)

    # ------------------------------------------------------------- basics --

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        if isinstance(other, LinearCode):
            return self.K is other.K and self.n == other.n and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((id(self.K), self.n, self.rows))

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.dim})"

    def contains(self, vec) -> bool:
        K = self.K
        w = list(vec)
        for prow, pcol in zip(self.rows, self.pivots):
            if w[pcol]:
                c = w[pcol]
                w = [K.sub(a, K.mul(c, b)) for a, b in zip(w, prow)]
        return not any(w)

    def __le__(self, other: "LinearCode") -> bool:
        return all(other.contains(row) for row in self.rows)

    # ------------------------------------------------------ constructions --

    def dual(self) -> "LinearCode":
        kern = linalg.right_kernel(self.K, self.rows, self.n)
        return LinearCode(self.K, kern, self.n)

    def __add__(self, other: "LinearCode") -> "LinearCode":
        return LinearCode(self.K, self.rows + other.rows, self.n)

    def __and__(self, other: "LinearCode") -> "LinearCode":
        return (self.dual() + other.dual()).dual()

    def frobenius(self, s: int) -> "LinearCode":
        K = self.K
        return LinearCode(K, [tuple(K.frob(v, s) for v in row) for row in self.rows], self.n)

    def galois_closure(self) -> "LinearCode":
        K = self.K
        rows = []
        for i in range(K.m):
            for row in self.rows:
                rows.append(tuple(K.frob(v, i) for v in row))
        return LinearCode(K, rows, self.n)

    def galois_interior(self) -> "LinearCode":
        out = self
        for i in range(1, self.K.m):
            out = out & self.frobenius(i)
        return out

    # ------------------------------------------------- structure detection --

    def skew_orders(self) -> frozenset[int]:
        """All s in 0..m-1 whose twisted shift maps the code into itself."""
        K = self.K
        out = []
        for s in range(K.m):
            if all(self.contains(twisted_shift(K, row, s)) for row in self.rows):
                out.append(s)
        return frozenset(out)

    @property
    def is_cyclic(self) -> bool:
        return all(self.contains(twisted_shift(self.K, row, 0)) for row in self.rows)

    @property
    def is_galois_closed(self) -> bool:
        K = self.K
        return all(self.contains(tuple(K.frob(v, 1) for v in row)) for row in self.rows)

    # -------------------------------------------- polynomial extraction ----

    def generator_check_poly(self) -> tuple[CPoly, CPoly]:
        """(g, h) with g monic generating the code as an ideal and
        g * h = x^n - 1.  Requires cyclicity."""
        if not self.is_cyclic:
            raise NotCyclic("generator polynomial needs a cyclic code")
        K = self.K
        g = CPoly.xn_minus_1(K, self.n)
        for row in self.rows:
            g = cgcd(g, vec_to_poly(K, row))
        h = CPoly.xn_minus_1(K, self.n) // g
        if g.degree != self.n - self.dim or LinearCode.from_gpoly(K, g, self.n) != self:
            raise VerificationFailed("extracted generator does not rebuild the code")
        return g, h

    def generator_check_lpoly(self, r: int | None = None) -> tuple[LPoly, LPoly]:
        """(G, H) with G the monic twisted generator and G (*) H equal to
        x^[rn] - x on both sides.  Requires theta^r-cyclicity and m | rn."""
        K = self.K
        r = K.r if r is None else r
        if r < 1 or (r * self.n) % K.m != 0:
            raise SkewDivisibilityViolated("twisted extraction needs r >= 1 and m | rn")
        if (r % K.m) not in self.skew_orders():
            raise NotSkewCyclic("code is not closed under the r-twisted shift")
        X = LPoly.xqn_minus_x(K, r, self.n)
        G = X
        for row in self.rows:
            G = l_rgcd(G, vec_to_lpoly(K, r, row))
        H, rem = X.right_divmod(G)
        if not rem.is_zero():
            raise VerificationFailed("twisted generator fails to divide the modulus")
        if (G * H != X or H * G != X or G.qdeg != self.n - self.dim
                or LinearCode.from_glpoly(K, G, self.n) != self):
            raise VerificationFailed("extracted twisted pair fails verification")
        return G, H

    def idempotent_generator(self) -> CPoly:
        """The idempotent e with e^2 = e generating the same ideal; defined
        when gcd(g, h) = 1."""
        g, h = self.generator_check_poly()
        d, u, v = cxgcd(g, h)
        if not d.is_one():
            raise NotCoprimeGH("generator and check share a factor")
        K = self.K
        xn1 = CPoly.xn_minus_1(K, self.n)
        e = (u * g) % xn1
        if (e * e) % xn1 != e:
            raise VerificationFailed("idempotent construction failed")
        if LinearCode.from_ideal_element(K, e, self.n) != self:
            raise VerificationFailed("idempotent generates the wrong ideal")
        return e

    @classmethod
    def from_ideal_element(cls, K, f: CPoly, n: int) -> "LinearCode":
        """The cyclic code generated by all shifts of f modulo x^n - 1."""
        xn1 = CPoly.xn_minus_1(K, n)
        rows, acc = [], f % xn1
        for _ in range(n):
            rows.append(poly_to_vec(acc, n))
            acc = acc.shift(1) % xn1
        return cls(K, rows, n)

    def cyclic_complement(self) -> "LinearCode":
        """The cyclic code generated by the check polynomial; complements
        the code exactly when gcd(g, h) = 1."""
        g, h = self.generator_check_poly()
        comp = LinearCode.from_gpoly(self.K, h.monic(), self.n)
        inter = self & comp
        total = self + comp
        if inter.dim != 0 or total.dim != self.n:
            raise NotCoprimeGH("check polynomial does not give a complement")
        return comp

    # --------------------------------------------------------- rank metric --

    def rank_weight(self, word) -> int:
        """GF(q)-dimension of the span of the word's components."""
        K = self.K
        coord_rows = [K.coords_over(v, K.m, 1) for v in word if v]
        return linalg.rank(K, coord_rows, K.m)

    def weight_distribution(self, cap: int = DEFAULT_ENUM_CAP) -> dict[int, int]:
        """Counts of codewords by rank weight, by full enumeration."""
        K, k, n = self.K, self.dim, self.n
        size = (K.q ** K.m) ** k
        if size > cap:
            raise EnumerationCapExceeded(
                f"code has {size} words, above the enumeration cap {cap}")
        per_tower = _dist_caches.setdefault(K, {})
        key = (n, self.rows)
        got = per_tower.get(key)
        if got is not None:
            return dict(got)
        field = K.subfield_elements(K.m)
        if K.p == 2 and K.e == 1:
            dist = self._distribution_packed(field)
        else:
            dist = self._distribution_generic(field)
        assert sum(dist.values()) == size
        per_tower[key] = dict(dist)
        return dist

    def _distribution_packed(self, field) -> dict[int, int]:
        """Characteristic-2 prime-field walk: a word is one big integer in
        N-bit component slots, addition is XOR, and the coordinate bits of a
        component double as the rank-elimination rows."""
        K, n, N, m = self.K, self.n, self.K.N, self.K.m
        coordbits = {v: sum(bit << j for j, bit in enumerate(K.coords_over(v, m, 1)))
                     for v in K.subfield_elements(m)}
        mask = (1 << N) - 1
        mults = []
        for row in self.rows:
            packed = {}
            for s in field:
                w = 0
                for i, v in enumerate(row):
                    w |= K.mul(s, v) << (N * i)
                packed[s] = w
            mults.append(packed)
        dist: dict[int, int] = {}
        stack = [(0, 0)]
        while stack:
            depth, acc = stack.pop()
            if depth == len(mults):
                piv: dict[int, int] = {}
                rank = 0
                w = acc
                for i in range(n):
                    x = coordbits[(w >> (N * i)) & mask]
                    while x:
                        h = x.bit_length() - 1
                        if h in piv:
                            x ^= piv[h]
                        else:
                            piv[h] = x
                            rank += 1
                            break
                dist[rank] = dist.get(rank, 0) + 1
            else:
                for s in field:
                    stack.append((depth + 1, acc ^ mults[depth][s]))
        return dist

    def _distribution_generic(self, field) -> dict[int, int]:
        K, n = self.K, self.n
        mults = []
        for row in self.rows:
            mults.append({s: tuple(K.mul(s, v) for v in row) for s in field})
        dist: dict[int, int] = {}
        zero = tuple([0] * n)

        def walk(depth, acc):
            if depth == len(mults):
                w = self.rank_weight(acc)
                dist[w] = dist.get(w, 0) + 1
                return
            for s in field:
                row = mults[depth][s]
                walk(depth + 1, tuple(K.add(a, b) for a, b in zip(acc, row)))

        walk(0, zero)
        return dist

    def min_rank_distance(self, cap: int = DEFAULT_ENUM_CAP) -> int | None:
        """Smallest nonzero rank weight, None for the zero code."""
        dist = self.weight_distribution(cap)
        nz = [w for w in dist if w > 0]
        return min(nz) if nz else None

    def iter_words(self):
        """All codewords in lexicographic coefficient order; lazy."""
        K = self.K
        field = K.subfield_elements(K.m)
        for coeffs in itertools.product(field, repeat=self.dim):
            word = [0] * self.n
            for s, row in zip(coeffs, self.rows):
                if s:
                    for i, v in enumerate(row):
                        word[i] = K.add(word[i], K.mul(s, v))
            yield tuple(word)
