"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

from fractions import Fraction

from .base import Field, FieldElement


def _strip(field, coeffs):
    coeffs = list(coeffs)
    while coeffs and field.riszero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def next_var(field: Field) -> str:
    """Name of the generator an extension of ``field`` would get."""
    return "t" if field.depth == 0 else f"t{field.depth + 1}"


def render_poly(field: Field, coeffs, var: str, sep: str = " ") -> str:
    """Render raw coefficients (lowest degree first), highest degree first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if field.riszero(c):
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        parts.append(_term(field.render_raw(c), mono))
    return join_terms(parts, sep)


def _term(cs: str, mono: str) -> str:
    if not mono:
        return cs
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    if any(ch in "+-" for ch in cs[1:]):
        cs = f"({cs})"
    return f"{cs}*{mono}"


def join_terms(parts: list[str], sep: str = " ") -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += f"{sep}-{sep}{p[1:]}"
        else:
            out += f"{sep}+{sep}{p}"
    return out


class UPoly:
    """Univariate polynomial; ``coeffs`` holds raw field values, lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        self.field = field
        self.coeffs = _strip(field, coeffs)

    @classmethod
    def from_elements(cls, field, elems):
        return cls(field, [field.to_raw(e) for e in elems])

    @classmethod
    def gen(cls, field):
        return cls(field, (field.rzero, field.rone))

    @classmethod
    def const(cls, field, c):
        return cls(field, (field.to_raw(c),))

    @classmethod
    def parse(cls, text: str, field: Field, var: str | None = None) -> "UPoly":
        from ..parse import evaluate
        var = var or next_var(field)
        variables = {name: cls.const(field, g) for name, g in field.generators().items()}
        variables[var] = cls.gen(field)
        return evaluate(text, variables, lambda q: cls.const(field, q))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.rone

    def coeff(self, i) -> FieldElement:
        F = self.field
        return F.wrap(self.coeffs[i] if i < len(self.coeffs) else F.rzero)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise TypeError("polynomials over different fields")
            return other
        return UPoly.const(self.field, other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.radd(out[i], c)
        return UPoly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return UPoly(F, [F.rneg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(F)
        out = [F.rzero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.riszero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.radd(out[i + j], F.rmul(x, y))
        return UPoly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = UPoly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree()
        inv = F.rinv(other.lc())
        quot = [F.rzero] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if F.riszero(c):
                continue
            q = F.rmul(c, inv)
            quot[k - db] = q
            for i, b in enumerate(other.coeffs):
                rem[k - db + i] = F.rsub(rem[k - db + i], F.rmul(q, b))
        return UPoly(F, quot), UPoly(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        F = self.field
        inv = F.rinv(self.lc())
        return UPoly(F, [F.rmul(c, inv) for c in self.coeffs])

    def derivative(self) -> "UPoly":
        F = self.field
        return UPoly(F, [F.rmul(F.rfrom_int(i), c) for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        """Evaluate at ``x``; ``x`` may live in an extension of the coefficient field."""
        if not isinstance(x, FieldElement):
            x = self.field(x)
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + self.field.wrap(c)
        return acc

    def over(self, field: Field) -> "UPoly":
        if field == self.field:
            return self
        return UPoly(field, [field.to_raw(self.field.wrap(c)) for c in self.coeffs])

    def pow_mod(self, e: int, m: "UPoly") -> "UPoly":
        result = UPoly.const(self.field, 1) % m if m.degree() > 0 else UPoly(self.field)
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == UPoly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree(), tuple(self.field.sort_key(c) for c in reversed(self.coeffs)))

    def render(self, var: str | None = None, sep: str = " ") -> str:
        return render_poly(self.field, self.coeffs, var or next_var(self.field), sep)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"UPoly({self.field.spec()!r}, {self.render()!r})"


def gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g (g not normalized)."""
    F = a.field
    s0, s1 = UPoly.const(F, 1), UPoly(F)
    t0, t1 = UPoly(F), UPoly.const(F, 1)
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0
