"""Sparse exact bivariate polynomials in x, y and the quadratic-transform charts.

Chart convention used throughout the package, with new coordinates (u, v)
again written x, y:

* ``Finite(a)``: x = u, y = u(v + a); the new point is u = v = 0.
* ``Infinity``:  x = uv, y = v.

Terms are ordered graded-lexicographically with x > y.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import ZeroPolynomial
from .field import Field, FieldElement, UPoly
from .field import gcd as ugcd
from .field.univariate import join_terms
from .parse import evaluate


def _grlex(mono):
    i, j = mono
    return (i + j, i)


class Poly2:
    """A polynomial in k[x, y]; ``terms`` maps (i, j) to raw nonzero coefficients."""

    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field: Field, terms=None):
        self.field = field
        if terms:
            z = field.riszero
            terms = {m: c for m, c in terms.items() if not z(c)}
        self._terms = terms or {}
        self._hash = None

    @classmethod
    def x(cls, field):
        return cls(field, {(1, 0): field.rone})

    @classmethod
    def y(cls, field):
        return cls(field, {(0, 1): field.rone})

    @classmethod
    def const(cls, field, c):
        return cls(field, {(0, 0): field.to_raw(c)})

    @classmethod
    def monomial(cls, field, i, j, c=1):
        return cls(field, {(i, j): field.to_raw(c)})

    @classmethod
    def from_terms(cls, field, terms: dict) -> "Poly2":
        return cls(field, {m: field.to_raw(c) for m, c in terms.items()})

    @property
    def terms(self) -> dict[tuple[int, int], FieldElement]:
        w = self.field.wrap
        return {m: w(c) for m, c in self._terms.items()}

    def raw_terms(self):
        return self._terms

    def coeff(self, i, j) -> FieldElement:
        F = self.field
        return F.wrap(self._terms.get((i, j), F.rzero))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # --- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly2):
            if other.field == self.field:
                return self, other
            if other.field.contains(self.field):
                return self.over(other.field), other
            return self, other.over(self.field)
        if isinstance(other, FieldElement) and other.field != self.field \
                and other.field.contains(self.field):
            return self.over(other.field), Poly2.const(other.field, other)
        return self, Poly2.const(self.field, other)

    def __add__(self, other):
        a, b = self._coerce(other)
        F = a.field
        out = dict(a._terms)
        for m, c in b._terms.items():
            out[m] = F.radd(out[m], c) if m in out else c
        return Poly2(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly2(F, {m: F.rneg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        F = a.field
        out = {}
        for (i1, j1), c1 in a._terms.items():
            for (i2, j2), c2 in b._terms.items():
                m = (i1 + i2, j1 + j2)
                c = F.rmul(c1, c2)
                out[m] = F.radd(out[m], c) if m in out else c
        return Poly2(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly2.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly2):
            if other.field != self.field:
                try:
                    a, b = self._coerce(other)
                except TypeError:
                    return False
                return a._terms == b._terms
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == Poly2.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def over(self, field: Field) -> "Poly2":
        """The same polynomial with coefficients embedded into ``field``."""
        if field == self.field:
            return self
        w = self.field.wrap
        return Poly2(field, {m: field.to_raw(w(c)) for m, c in self._terms.items()})

    def scale(self, c) -> "Poly2":
        F = self.field
        c = F.to_raw(c)
        return Poly2(F, {m: F.rmul(v, c) for m, v in self._terms.items()})

    # --- derived quantities ---------------------------------------------
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def ord(self) -> int:
        if not self._terms:
            raise ZeroPolynomial()
        return min(i + j for i, j in self._terms)

    def leading_form(self) -> "Poly2":
        m = self.ord()
        return Poly2(self.field, {k: c for k, c in self._terms.items() if sum(k) == m})

    def constant_term(self) -> FieldElement:
        return self.coeff(0, 0)

    def leading_term(self):
        """(monomial, raw coefficient) of the grlex-largest term."""
        m = max(self._terms, key=_grlex)
        return m, self._terms[m]

    def monic(self) -> "Poly2":
        if not self._terms:
            return self
        return self.scale(self.field.wrap(self.field.rinv(self.leading_term()[1])))

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: _grlex(mc[0]), reverse=True)

    def render(self) -> str:
        parts = []
        F = self.field
        for (i, j), c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}"
                            for v, e in (("x", i), ("y", j)) if e)
            cs = F.render_raw(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if any(ch in "+-" for ch in cs[1:]):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return join_terms(parts, " ")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly2({self.field.spec()!r}, {self.render()!r})"

    # --- substitutions ----------------------------------------------------
    def total_substitute(self, center) -> "Poly2":
        """Pull back along one chart without removing the exceptional factor."""
        return _substitute(self, center, divide=False)[1]


def parse(text: str, field: Field) -> Poly2:
    """Parse ``text`` into a polynomial over ``field``.

    Generator names of an extension field (``t``, ``t2``, ...) may appear as
    coefficients.
    """
    variables = {"x": Poly2.x(field), "y": Poly2.y(field)}
    for name, g in field.generators().items():
        variables[name] = Poly2.const(field, g)
    return evaluate(text, variables, lambda q: Poly2.const(field, q))


def ord(f: Poly2) -> int:
    return f.ord()


def leading_form(f: Poly2) -> Poly2:
    return f.leading_form()


# --- charts ------------------------------------------------------------------

def _substitute(f: Poly2, center, divide: bool):
    if not f:
        raise ZeroPolynomial()
    if center.is_infinite:
        F = f.field
        m = f.ord() if divide else 0
        return m, Poly2(F, {(i, i + j - m): c for (i, j), c in f._terms.items()})
    a = center.value
    if a.field != f.field:
        f = f.over(a.field)
    F = f.field
    m = f.ord() if divide else 0
    ar = a.raw
    out: dict = {}
    if F.riszero(ar):
        for (i, j), c in f._terms.items():
            out[(i + j - m, j)] = c
        return m, Poly2(F, out)
    top = max(j for _, j in f._terms)
    apow = [F.rone]
    for _ in range(top):
        apow.append(F.rmul(apow[-1], ar))
    for (i, j), c in f._terms.items():
        ue = i + j - m
        for k in range(j + 1):
            term = F.rmul(c, F.rmul(F.rfrom_int(comb(j, k)), apow[j - k]))
            key = (ue, k)
            out[key] = F.radd(out[key], term) if key in out else term
    return m, Poly2(F, out)


def transform_at_center(f: Poly2, center) -> tuple[int, Poly2]:
    """Return ``(m, strict)`` with f(chart) = E^m * strict, E the exceptional coordinate.

    ``E`` is u (x in the new chart) for ``Finite(a)`` and v (y) for ``Infinity``;
    ``m = ord(f)`` and ``strict`` is not divisible by ``E``.
    """
    return _substitute(f, center, divide=True)


def pullback_total(f: Poly2, path: Iterable) -> Poly2:
    """Compose the chart substitutions along ``path`` without dividing."""
    if not f:
        raise ZeroPolynomial()
    for c in path:
        f = _substitute(f, c, divide=False)[1]
    return f


def strict_transform(f: Poly2, path: Iterable) -> Poly2:
    for c in path:
        f = _substitute(f, c, divide=True)[1]
    return f


# --- division and gcd ----------------------------------------------------------

def divide(f: Poly2, g: Poly2) -> tuple[Poly2, Poly2]:
    """Multivariate division by a single divisor in grlex order: f = q*g + r."""
    if not g:
        raise ZeroPolynomial("divisor")
    f, g = f._coerce(g)
    F = f.field
    (gi, gj), gc = g.leading_term()
    ginv = F.rinv(gc)
    rem = dict(f._terms)
    quot: dict = {}
    out: dict = {}
    while rem:
        m = max(rem, key=_grlex)
        c = rem.pop(m)
        if m[0] >= gi and m[1] >= gj:
            qm = (m[0] - gi, m[1] - gj)
            qc = F.rmul(c, ginv)
            quot[qm] = qc
            for (i, j), gv in g._terms.items():
                if (i, j) == (gi, gj):
                    continue
                key = (i + qm[0], j + qm[1])
                v = F.rneg(F.rmul(qc, gv))
                if key in rem:
                    nv = F.radd(rem[key], v)
                    if F.riszero(nv):
                        del rem[key]
                    else:
                        rem[key] = nv
                else:
                    rem[key] = v
        else:
            out[m] = c
    return Poly2(F, quot), Poly2(F, out)


def exact_div(f: Poly2, g: Poly2) -> Poly2:
    q, r = divide(f, g)
    if r:
        raise ArithmeticError(f"{g} does not divide {f}")
    return q


def _to_y(f: Poly2) -> list[UPoly]:
    """Coefficients in k[x] of the powers of y."""
    F = f.field
    deg = max((j for _, j in f._terms), default=-1)
    rows = [dict() for _ in range(deg + 1)]
    for (i, j), c in f._terms.items():
        rows[j][i] = c
    out = []
    for row in rows:
        n = max(row, default=-1) + 1
        out.append(UPoly(F, [row.get(i, F.rzero) for i in range(n)]))
    return out


def _from_y(field, coeffs: list[UPoly]) -> Poly2:
    terms = {}
    for j, u in enumerate(coeffs):
        for i, c in enumerate(u.coeffs):
            terms[(i, j)] = c
    return Poly2(field, terms)


def _trim(a: list[UPoly]) -> list[UPoly]:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _content(a: list[UPoly]) -> UPoly:
    g = UPoly(a[0].field)
    for c in a:
        g = ugcd(g, c)
        if g.degree() == 0:
            break
    return g


def _prim(a: list[UPoly]) -> list[UPoly]:
    c = _content(a)
    return [u // c for u in a]


def _prem(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    lb = b[-1]
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [u * lb for u in r]
        for k, bu in enumerate(b):
            r[k + shift] = r[k + shift] - bu * lr
        r = _trim(r)
    return r


def gcd2(f: Poly2, g: Poly2) -> Poly2:
    """Greatest common divisor in k[x, y], scaled so its grlex leading coefficient is 1.

    Works in k[x][y]: gcd of contents times the primitive remainder sequence.
    """
    if not f and not g:
        raise ZeroPolynomial("gcd argument")
    f, g = f._coerce(g)
    F = f.field
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a, b = _to_y(f), _to_y(g)
    cont = ugcd(_content(a), _content(b))
    a, b = _prim(a), _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_prim(r) if r else r)
    a = _prim(a)
    result = _from_y(F, [u * cont for u in a])
    return result.monic()
