"""Text form of field elements and polynomials.

Elements of GF(q^m) are written as integer polynomials in `a`, the fixed
primitive element: "a^2 + 2*a + 1".  Conventional polynomials use `x`
terms, twisted ones use shift terms `x^[i]` (with `x` itself as the
identity, index 0).  Rendering is canonical (descending powers, omitted
unit coefficients, parenthesized sums); parsing is a small recursive
descent that accepts any whitespace and reassociation of the same grammar.
"""
from __future__ import annotations

from weakref import WeakKeyDictionary

from .cpoly import CPoly
from .errors import ParseError
from .gf import FieldTower, _solver_over_gfp
from .lpoly import LPoly

_a_solvers: "WeakKeyDictionary[FieldTower, object]" = WeakKeyDictionary()


def _a_solver(K: FieldTower):
    try:
        return _a_solvers[K]
    except KeyError:
        pass
    width = K.e * K.m
    alpha = K.alpha()
    cols = [list(K.digits(K.pow(alpha, j))) for j in range(width)]
    solve = _solver_over_gfp(cols, K.p)
    _a_solvers[K] = solve
    return solve


def element_coords(K: FieldTower, v: int) -> tuple[int, ...]:
    """GF(p)-coordinates of an element of GF(q^m) in the power basis of a,
    constant first."""
    return tuple(_a_solver(K)(list(K.digits(v))))


# ---------------------------------------------------------------- render --

def _coeff_term(c: int, sym: str) -> str:
    if not sym:
        return str(c)
    if c == 1:
        return sym
    return f"{c}*{sym}"


def render_element(K: FieldTower, v: int) -> str:
    if v == 0:
        return "0"
    coords = element_coords(K, v)
    terms = []
    for k in range(len(coords) - 1, -1, -1):
        c = coords[k]
        if not c:
            continue
        sym = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
        terms.append(_coeff_term(c, sym))
    return " + ".join(terms)


def _element_factor(K: FieldTower, v: int, sym: str) -> str:
    s = render_element(K, v)
    if s == "1":
        return sym
    if "+" in s:
        return f"({s})*{sym}"
    return f"{s}*{sym}"


def render_cpoly(K: FieldTower, f: CPoly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        v = f[i]
        if not v:
            continue
        if i == 0:
            terms.append(render_element(K, v))
        else:
            sym = "x" if i == 1 else f"x^{i}"
            terms.append(_element_factor(K, v, sym))
    return " + ".join(terms)


def render_lpoly(K: FieldTower, F: LPoly) -> str:
    if F.is_zero():
        return "0"
    terms = []
    for i in range(F.qdeg, -1, -1):
        v = F.c[i]
        if not v:
            continue
        sym = "x" if i == 0 else f"x^[{i}]"
        terms.append(_element_factor(K, v, sym))
    return " + ".join(terms)


def render_vector(K: FieldTower, vec) -> list[str]:
    return [render_element(K, v) for v in vec]


def render_matrix(K: FieldTower, rows) -> list[list[str]]:
    return [render_vector(K, row) for row in rows]


# ----------------------------------------------------------------- parse --

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError(f"expected '{ch}' at position {self.pos} "
                             f"in {self.text!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected a number at position {start} "
                             f"in {self.text!r}")
        return int(self.text[start:self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


# A parsed term is (element value, kind, power) where kind is None for a
# pure element, "x" for a conventional power, "xl" for a shift index.

def _parse_terms(K: FieldTower, sc: _Scanner, depth: int = 0):
    terms = [_parse_term(K, sc, depth)]
    while sc.take("+"):
        terms.append(_parse_term(K, sc, depth))
    return terms


def _parse_term(K: FieldTower, sc: _Scanner, depth: int):
    value, kind, power = _parse_factor(K, sc, depth)
    while sc.take("*"):
        v2, k2, p2 = _parse_factor(K, sc, depth)
        if kind is not None and k2 is not None:
            raise ParseError("a term may contain only one x factor")
        value = K.mul(value, v2)
        if k2 is not None:
            kind, power = k2, p2
    return value, kind, power


def _parse_factor(K: FieldTower, sc: _Scanner, depth: int):
    ch = sc.peek()
    if ch == "(":
        sc.expect("(")
        inner = _parse_terms(K, sc, depth + 1)
        sc.expect(")")
        acc = 0
        for value, kind, _ in inner:
            if kind is not None:
                raise ParseError("x factors cannot appear inside parentheses")
            acc = K.add(acc, value)
        return acc, None, 0
    if ch.isdigit():
        return K.element(sc.integer() % K.p).v, None, 0
    if ch == "a":
        sc.expect("a")
        k = sc.integer() if sc.take("^") else 1
        return K.pow(K.alpha(), k), None, 0
    if ch == "x":
        sc.expect("x")
        if sc.take("^"):
            if sc.take("["):
                idx = sc.integer()
                sc.expect("]")
                return 1, "xl", idx
            return 1, "x", sc.integer()
        return 1, "x", 1
    raise ParseError(f"unexpected character {ch!r} at position {sc.pos} "
                     f"in {sc.text!r}")


def _scan_all(K: FieldTower, text: str):
    sc = _Scanner(text)
    terms = _parse_terms(K, sc)
    if not sc.done():
        raise ParseError(f"trailing input at position {sc.pos} in {text!r}")
    return terms


def parse_element(K: FieldTower, text: str) -> int:
    acc = 0
    for value, kind, _ in _scan_all(K, text):
        if kind is not None:
            raise ParseError("an element cannot contain x")
        acc = K.add(acc, value)
    return acc


def parse_cpoly(K: FieldTower, text: str) -> CPoly:
    coeffs: dict[int, int] = {}
    for value, kind, power in _scan_all(K, text):
        if kind == "xl":
            raise ParseError("shift terms are not conventional polynomials")
        d = power if kind == "x" else 0
        coeffs[d] = K.add(coeffs.get(d, 0), value)
    if not coeffs:
        return CPoly.zero(K)
    top = max(coeffs)
    return CPoly(K, [coeffs.get(i, 0) for i in range(top + 1)])


def parse_lpoly(K: FieldTower, r: int, text: str) -> LPoly:
    coeffs: dict[int, int] = {}
    for value, kind, power in _scan_all(K, text):
        if kind is None:
            if value == 0:  # the zero map renders as "0"
                continue
            raise ParseError("every twisted term needs an x factor")
        if kind == "x":
            if power != 1:
                raise ParseError("conventional powers of x are not twisted "
                                 "terms; use x^[i]")
            idx = 0
        else:
            idx = power
        coeffs[idx] = K.add(coeffs.get(idx, 0), value)
    if not coeffs:
        return LPoly.zero(K, r)
    top = max(coeffs)
    return LPoly(K, r, [coeffs.get(i, 0) for i in range(top + 1)])


def parse_vector(K: FieldTower, items) -> tuple[int, ...]:
    return tuple(parse_element(K, s) for s in items)


def parse_matrix(K: FieldTower, rows) -> list[tuple[int, ...]]:
    return [parse_vector(K, row) for row in rows]
