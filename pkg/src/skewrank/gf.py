"""Finite field towers with exact packed-integer arithmetic.

Every field in play -- GF(p), GF(q) with q = p^e, GF(q^m), GF(q^r),
GF(q^{rn}) and the splitting field needed for root sets -- lives inside one
ambient field GF(p^N).  The ambient field is GF(p)[x] modulo a fixed monic
irreducible polynomial, and an element is the packed base-p integer of its
coordinate vector (constant term in the least significant digit).  That
makes equality integer equality, keeps serialization trivial, and for p = 2
turns addition into XOR.

No discrete-log tables: multiplication reduces polynomials directly, and
the fixed primitive generator is found by a deterministic ascending scan
with an order test.
"""
from __future__ import annotations

import math
from functools import lru_cache, reduce

from .errors import (
    AmbientTooLarge,
    NonPrimeCharacteristic,
    NotCoprime,
    NotInBaseField,
    SkewDivisibilityViolated,
    UndeclaredSubfield,
    ZeroInput,
)

DEFAULT_AMBIENT_CAP = 1 << 24

# p^N at or below this bound gets full add/mul/inv tables when p is odd.
_TABLE_MAX = 1 << 12


def is_prime(v: int) -> bool:
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    f = 3
    while f * f <= v:
        if v % f == 0:
            return False
        f += 2
    return True


def prime_factors(v: int) -> list[int]:
    """Distinct prime factors of v, ascending."""
    out = []
    f = 2
    while f * f <= v:
        if v % f == 0:
            out.append(f)
            while v % f == 0:
                v //= f
        f += 1 if f == 2 else 2
    if v > 1:
        out.append(v)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n.  Requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise ZeroInput(f"{a} is not a unit modulo {n}")
    # The order divides the order of the unit group; scan divisors of the
    # Carmichael-style bound by brute force, which is fine at desk scale.
    t, x = 1, a
    while x != 1:
        x = (x * a) % n
        t += 1
    return t


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# --------------------------------------------------------------------------
# GF(p)[x] helpers on plain digit lists (used only for modulus search and
# the coordinate solver; everything else runs on packed ints).
# --------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_mod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by monic f
    df = len(f) - 1
    for i in range(len(res) - 1, df - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(df):
                res[i - df + j] = (res[i - df + j] - c * f[j]) % p
    return _trim(res)


def _poly_pow_mod(a: list[int], k: int, f: list[int], p: int) -> list[int]:
    res, base = [1], list(a)
    while k:
        if k & 1:
            res = _poly_mul_mod(res, base, f, p)
        base = _poly_mul_mod(base, base, f, p)
        k >>= 1
    return res


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        # a mod b with b made monic on the fly
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        r = list(a)
        while len(r) - 1 >= db and r:
            c = (r[-1] * inv) % p
            d = len(r) - 1 - db
            for j in range(len(b)):
                r[d + j] = (r[d + j] - c * b[j]) % p
            _trim(r)
        a, b = b, r
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Monic f of degree >= 1 over GF(p)."""
    n = len(f) - 1
    if n == 1:
        return True
    x = [0, 1]
    # powers[i] = x^{p^{i+1}} mod f
    powers = []
    t = x
    for _ in range(n):
        t = _poly_pow_mod(t, p, f, p)
        powers.append(t)
    if _trim(list(powers[n - 1])) != x:
        return False
    for ell in prime_factors(n):
        d = n // ell
        g = list(powers[d - 1])
        # g - x
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(g, f, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """The monic irreducible of degree n over GF(p) whose non-leading
    coefficient vector, packed base p with the constant term least
    significant, is the smallest integer.  For p=2, N=4 this is x^4+x+1.
    """
    for k in range(p ** n):
        digits = []
        kk = k
        for _ in range(n):
            digits.append(kk % p)
            kk //= p
        f = digits + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _solver_over_gfp(columns: list[list[int]], p: int):
    """Precompute a solver for  M.y = target  where M has the given columns
    over GF(p).  Returns solve(target) -> list of coefficients, assuming a
    solution exists and the columns are independent.
    """
    nrows = len(columns[0]) if columns else 0
    ncols = len(columns)
    rows = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    # Gauss-Jordan, recording the row transform E.
    eye = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    pivots = []
    rpos = 0
    for col in range(ncols):
        sel = next((i for i in range(rpos, nrows) if rows[i][col]), None)
        if sel is None:
            continue
        rows[rpos], rows[sel] = rows[sel], rows[rpos]
        eye[rpos], eye[sel] = eye[sel], eye[rpos]
        inv = pow(rows[rpos][col], -1, p)
        rows[rpos] = [(v * inv) % p for v in rows[rpos]]
        eye[rpos] = [(v * inv) % p for v in eye[rpos]]
        for i in range(nrows):
            if i != rpos and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rpos])]
                eye[i] = [(a - c * b) % p for a, b in zip(eye[i], eye[rpos])]
        pivots.append((rpos, col))
        rpos += 1
        if rpos == nrows:
            break

    def solve(target: list[int]) -> list[int]:
        w = [sum(e * t for e, t in zip(erow, target)) % p for erow in eye]
        y = [0] * ncols
        for i, c in pivots:
            y[c] = w[i]
        for i in range(len(pivots), nrows):
            if w[i]:
                raise ZeroInput("element outside the spanned subfield")
        return y

    return solve


# --------------------------------------------------------------------------
# The tower
# --------------------------------------------------------------------------

class FieldTower:
    """Ambient field GF(p^N) with the declared subfield chain for one
    analysis job: code entries in GF(q^m), skew scalars in GF(q^r), root
    spaces in GF(q^{rn}), and (coprime case) the n-th roots of unity.

    Parameters
    ----------
    p, e : characteristic and base extension degree, q = p^e.
    m : entry field degree over GF(q).
    r : skew order; 0 means purely conventional (cyclic) analysis.
    n : code length.
    modulus : optional explicit modulus (low-degree-first GF(p) coefficient
        list including the leading 1); by default the canonical smallest
        irreducible of the derived degree N is used.
    """

    def __init__(self, p: int, e: int = 1, m: int = 1, r: int = 0, n: int = 1,
                 *, ambient_cap: int = DEFAULT_AMBIENT_CAP,
                 modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p} is not prime")
        if e < 1 or m < 1 or n < 1 or r < 0:
            raise ZeroInput("need e, m, n >= 1 and r >= 0")
        if r >= 1 and (r * n) % m != 0:
            raise SkewDivisibilityViolated(
                f"m = {m} must divide r*n = {r * n} for skew analysis")
        self.p, self.e, self.m, self.r, self.n = p, e, m, r, n
        self.q = p ** e

        # Coprime part of n and the degree of the splitting field of
        # x^{n'} - 1 over GF(q^m); folded into N so that root sets and the
        # cyclotomic factorization can be computed inside the ambient field.
        np_ = n
        while np_ % p == 0:
            np_ //= p
        self.n_coprime = np_
        degs = [e * m]
        if r >= 1:
            degs.append(e * r * n)
        if np_ > 1:
            degs.append(e * m * multiplicative_order(self.q ** m, np_))
        self.N = reduce(math.lcm, degs)

        if p ** self.N > ambient_cap:
            raise AmbientTooLarge(
                f"ambient field GF({p}^{self.N}) exceeds cap {ambient_cap}")
        self.order = p ** self.N

        if modulus is None:
            modulus = smallest_irreducible(p, self.N)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != self.N + 1 or modulus[-1] != 1:
                raise ZeroInput("modulus must be monic of degree N")
            if not _is_irreducible(list(modulus), p):
                raise ZeroInput("modulus is not irreducible")
        self.modulus = modulus

        if p == 2:
            self._modmask = sum(c << i for i, c in enumerate(modulus))
        else:
            # reduction rows: x^{N+i} mod modulus as digit lists
            row = [(-modulus[j]) % p for j in range(self.N)]
            rows = [tuple(row)]
            for _ in range(self.N - 2):
                top = row[-1]
                row = [0] + row[:-1]
                if top:
                    for j in range(self.N):
                        row[j] = (row[j] + top * rows[0][j]) % p
                rows.append(tuple(row))
            self._red_rows = rows
            self._tables = None
            if self.order <= _TABLE_MAX:
                self._build_tables()

        self._frob_exp: dict[int, int] = {}
        self._sf_gen: dict[int, int] = {}
        self._sf_elems: dict[int, tuple[int, ...]] = {}
        self._coords_solvers: dict[tuple[int, int], object] = {}
        self._coords_cache: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {}

        self.generator = self._find_generator()

    # -------------------------------------------------------------- repr --

    def __repr__(self):
        return (f"FieldTower(p={self.p}, e={self.e}, m={self.m}, r={self.r}, "
                f"n={self.n}, N={self.N})")

    # ------------------------------------------------------ digit packing --

    def digits(self, v: int) -> tuple[int, ...]:
        """Base-p digit vector of a packed value, length N, low first."""
        p, out = self.p, []
        for _ in range(self.N):
            out.append(v % p)
            v //= p
        return tuple(out)

    def pack(self, digits) -> int:
        p, v = self.p, 0
        for d in reversed(list(digits)):
            v = v * p + (int(d) % p)
        return v

    # ---------------------------------------------------------- arithmetic --

    def _build_tables(self):
        o, p = self.order, self.p
        add = [[0] * o for _ in range(o)]
        mul = [[0] * o for _ in range(o)]
        for a in range(o):
            da = self.digits(a)
            for b in range(a, o):
                db = self.digits(b)
                s = self.pack((x + y) % p for x, y in zip(da, db))
                add[a][b] = add[b][a] = s
                m = self._mul_digits(a, b)
                mul[a][b] = mul[b][a] = m
        self._tables = (add, mul)

    def _mul_digits(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.digits(a), self.digits(b)
        res = [0] * (2 * self.N - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        res[i + j] = (res[i + j] + x * y) % p
        for i in range(2 * self.N - 2, self.N - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                row = self._red_rows[i - self.N]
                for j in range(self.N):
                    if row[j]:
                        res[j] = (res[j] + c * row[j]) % p
        return self.pack(res[:self.N])

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._tables is not None:
            return self._tables[0][a][b]
        p = self.p
        return self.pack((x + y) % p for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        return self.pack((-x) % p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            if a == 0 or b == 0:
                return 0
            mod, nbit, res = self._modmask, self.N, 0
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if (a >> nbit) & 1:
                    a ^= mod
            return res
        if self._tables is not None:
            return self._tables[1][a][b]
        return self._mul_digits(a, b)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        res, base = self.one, a
        while k:
            if k & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            k >>= 1
        return res

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    zero = 0

    @property
    def one(self) -> int:
        return 1

    def frob(self, v: int, s: int) -> int:
        """q^s-power Frobenius.  s may be any integer; it acts modulo N/e."""
        nq = self.N // self.e
        s %= nq
        if s == 0 or v == 0 or v == 1:
            return v
        exp = self._frob_exp.get(s)
        if exp is None:
            exp = self.p ** (self.e * s)
            self._frob_exp[s] = exp
        return self.pow(v, exp)

    # ---------------------------------------------------------- generator --

    def _find_generator(self) -> int:
        o = self.order - 1
        if o == 1:
            return 1
        facs = prime_factors(o)
        cofs = [o // f for f in facs]
        for cand in range(2, self.order):
            if all(self.pow(cand, c) != 1 for c in cofs):
                return cand
        raise AssertionError("no primitive element found")  # unreachable

    # ----------------------------------------------------------- subfields --

    def _check_subfield(self, d: int) -> int:
        """q-degree d -> p-degree, validating the declaration."""
        k = self.e * d
        if d < 1 or self.N % k != 0:
            raise UndeclaredSubfield(
                f"GF(q^{d}) with q={self.q} is not a subfield of GF({self.p}^{self.N})")
        return k

    def subfield_membership(self, v: int, d: int) -> bool:
        """True when v lies in GF(q^d)."""
        self._check_subfield(d)
        return self.frob(v, d) == v

    def _subfield_generator_p(self, k: int) -> int:
        g = self._sf_gen.get(k)
        if g is None:
            g = self.pow(self.generator, (self.order - 1) // (self.p ** k - 1))
            self._sf_gen[k] = g
        return g

    def subfield_generator(self, d: int) -> int:
        """A fixed primitive element of GF(q^d) (packed)."""
        return self._subfield_generator_p(self._check_subfield(d))

    def subfield_elements(self, d: int) -> tuple[int, ...]:
        """All of GF(q^d), sorted ascending by packed value (the fixed
        enumeration used for deterministic scans)."""
        k = self._check_subfield(d)
        cached = self._sf_elems.get(k)
        if cached is None:
            sz = self.p ** k
            if sz == 2:
                cached = (0, 1)
            else:
                g = self._subfield_generator_p(k)
                acc, elems = 1, {0, 1}
                for _ in range(sz - 2):
                    acc = self.mul(acc, g)
                    elems.add(acc)
                cached = tuple(sorted(elems))
            assert len(cached) == sz
            self._sf_elems[k] = cached
        return cached

    def subfield_nonzero(self, d: int) -> tuple[int, ...]:
        return self.subfield_elements(d)[1:]

    # ------------------------------------------------------- coordinates --

    def basis_over(self, big: int, small: int) -> tuple[int, ...]:
        """Basis of GF(q^big) over GF(q^small): powers of the fixed
        primitive element of GF(q^big)."""
        kb, ks = self._check_subfield(big), self._check_subfield(small)
        if kb % ks != 0:
            raise UndeclaredSubfield(f"GF(q^{small}) is not inside GF(q^{big})")
        g = self._subfield_generator_p(kb)
        out, acc = [1], 1
        for _ in range(kb // ks - 1):
            acc = self.mul(acc, g)
            out.append(acc)
        return tuple(out)

    def coords_over(self, v: int, big: int, small: int) -> tuple[int, ...]:
        """Coordinates of v in GF(q^big) over GF(q^small), with respect to
        basis_over(big, small).  Returned as packed subfield values."""
        kb, ks = self.e * big, self.e * small
        key = (kb, ks)
        cache = self._coords_cache.get(key)
        if cache is None:
            cache = {}
            self._coords_cache[key] = cache
        got = cache.get(v)
        if got is not None:
            return got
        solver = self._coords_solvers.get(key)
        if solver is None:
            basis = self.basis_over(big, small)
            gs = self._subfield_generator_p(ks)
            sp = [self.pow(gs, t) for t in range(ks)]
            columns = []
            for b in basis:
                for t in range(ks):
                    columns.append(list(self.digits(self.mul(b, sp[t]))))
            solver = (_solver_over_gfp(columns, self.p), sp, basis)
            self._coords_solvers[key] = solver
        solve, sp, basis = solver
        y = solve(list(self.digits(v)))
        out = []
        for j in range(len(basis)):
            c = 0
            for t in range(ks):
                digit = y[j * ks + t]
                if digit:
                    c = self.add(c, self.mul(digit, sp[t]))
            out.append(c)
        got = tuple(out)
        cache[v] = got
        return got

    def from_coords(self, coords, big: int, small: int) -> int:
        basis = self.basis_over(big, small)
        v = 0
        for c, b in zip(coords, basis):
            if c:
                v = self.add(v, self.mul(c, b))
        return v

    # ----------------------------------------------------- roots of unity --

    def zeta(self, n: int | None = None) -> int:
        """The fixed primitive n-th root of unity gamma^((p^N-1)/n)."""
        if n is None:
            n = self.n
        if math.gcd(n, self.p) != 1:
            raise NotCoprime(f"no primitive {n}-th root of unity in characteristic {self.p}")
        if (self.order - 1) % n != 0:
            raise UndeclaredSubfield(
                f"{n}-th roots of unity were not folded into this tower")
        return self.pow(self.generator, (self.order - 1) // n)

    # ------------------------------------------------------------- beta ----

    def solve_beta(self, b: int, r: int) -> int | None:
        """Least beta in the fixed enumeration of GF(q^m)* with
        beta^{q^r} = b*beta, or None when the exhaustive scan finds none.
        b must be a nonzero element of GF(q)."""
        if b == 0 or not self.subfield_membership(b, 1):
            raise NotInBaseField("b must lie in GF(q)*")
        for beta in self.subfield_nonzero(self.m):
            if self.frob(beta, r) == self.mul(b, beta):
                return beta
        return None

    # ------------------------------------------------ subfield linear maps --

    def kernel_over_subfield(self, rows: list, ncols: int, d: int,
                             entry_field: int | None = None) -> list[tuple[int, ...]]:
        """Basis, canonical over GF(q^d), of the right kernel of the matrix
        viewed as a GF(q^d)-linear map on GF(q^{entry_field})^ncols.

        Entries are expanded to coordinates over GF(q^d) before elimination,
        so a rank-1 matrix over GF(4) viewed over GF(2) contributes rank 2.
        """
        from . import linalg
        big = self.m if entry_field is None else entry_field
        self._check_subfield(d)
        self._check_subfield(big)
        if big == d:
            return linalg.right_kernel(self, [tuple(r) for r in rows], ncols)
        basis = self.basis_over(big, d)
        D = len(basis)
        exp_rows = []
        for row in rows:
            images = []
            for j in range(ncols):
                for bt in basis:
                    images.append(self.coords_over(self.mul(row[j], bt), big, d))
            for u in range(D):
                exp_rows.append(tuple(img[u] for img in images))
        kern = linalg.right_kernel(self, exp_rows, ncols * D)
        out = []
        for vec in kern:
            elem = []
            for j in range(ncols):
                v = 0
                for t in range(D):
                    c = vec[j * D + t]
                    if c:
                        v = self.add(v, self.mul(c, basis[t]))
                elem.append(v)
            out.append(tuple(elem))
        return out

    # -------------------------------------------------------- element API --

    def element(self, x) -> "Element":
        if isinstance(x, Element):
            if x.K is not self:
                raise ZeroInput("element from a different tower")
            return x
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ZeroInput("packed value out of range")
            return Element(self, x)
        return Element(self, self.pack(x))

    def alpha(self) -> int:
        """The fixed primitive element of GF(q^m), the 'a' of the text
        grammar."""
        return self.subfield_generator(self.m)


class Element:
    """A packed ambient field element bound to its tower.

    Thin operator-overloading wrapper; hot loops work on the packed ints
    directly through the tower methods.
    """

    __slots__ = ("K", "v")

    def __init__(self, K: FieldTower, v: int):
        self.K = K
        self.v = v

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.K.digits(self.v)

    def __add__(self, other):
        return Element(self.K, self.K.add(self.v, _val(self.K, other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Element(self.K, self.K.sub(self.v, _val(self.K, other)))

    def __rsub__(self, other):
        return Element(self.K, self.K.sub(_val(self.K, other), self.v))

    def __mul__(self, other):
        return Element(self.K, self.K.mul(self.v, _val(self.K, other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Element(self.K, self.K.div(self.v, _val(self.K, other)))

    def __rtruediv__(self, other):
        return Element(self.K, self.K.div(_val(self.K, other), self.v))

    def __pow__(self, k: int):
        return Element(self.K, self.K.pow(self.v, k))

    def __neg__(self):
        return Element(self.K, self.K.neg(self.v))

    def frobenius(self, s: int) -> "Element":
        return Element(self.K, self.K.frob(self.v, s))

    def in_subfield(self, d: int) -> bool:
        return self.K.subfield_membership(self.v, d)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.K is other.K and self.v == other.v
        if isinstance(other, int):
            return self.v == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.K), self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Element({list(self.coeffs)})"


def _val(K: FieldTower, x) -> int:
    if isinstance(x, Element):
        if x.K is not K:
            raise ZeroInput("mixing elements from different towers")
        return x.v
    if isinstance(x, int):
        if 0 <= x < K.order:
            return x
        # small integers act through the prime field
        return x % K.p
    raise TypeError(f"cannot coerce {x!r} to a field element")


@lru_cache(maxsize=None)
def _tower_cached(p: int, e: int, m: int, r: int, n: int, ambient_cap: int) -> FieldTower:
    return FieldTower(p, e, m, r, n, ambient_cap=ambient_cap)


def make_tower(p: int, e: int = 1, m: int = 1, r: int = 0, n: int = 1, *,
               ambient_cap: int = DEFAULT_AMBIENT_CAP,
               modulus: tuple[int, ...] | None = None) -> FieldTower:
    """Build (or fetch the cached copy of) the tower for one analysis job.

    Towers are immutable once built, so identical parameters share one
    instance and its internal lookup caches.
    """
    if modulus is not None:
        return FieldTower(p, e, m, r, n, ambient_cap=ambient_cap, modulus=tuple(modulus))
    return _tower_cached(p, e, m, r, n, ambient_cap)
