"""Exact coefficient fields: Q, prime fields and simple extensions.

Elements are thin wrappers around a canonical raw value:

* ``RationalField``: a ``Fraction``;
* ``PrimeField``: an ``int`` in ``range(p)``;
* ``ExtensionField``: a tuple of base raw values of length ``deg(modulus)``,
  coefficients of the reduced representative, lowest degree first.

Polynomials in this package store raw values and call the ``r*`` methods
directly, which keeps inner loops free of wrapper allocations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

from ..errors import FieldError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    characteristic: int
    order: int | None
    depth = 0
    gen_names: tuple[str, ...] = ()

    # raw arithmetic, overridden by subclasses
    def radd(self, a, b): raise NotImplementedError
    def rsub(self, a, b): raise NotImplementedError
    def rneg(self, a): raise NotImplementedError
    def rmul(self, a, b): raise NotImplementedError
    def rinv(self, a): raise NotImplementedError
    def rfrom_int(self, n: int): raise NotImplementedError
    def render_raw(self, a) -> str: raise NotImplementedError
    def sort_key(self, a): raise NotImplementedError

    @cached_property
    def rzero(self):
        return self.rfrom_int(0)

    @cached_property
    def rone(self):
        return self.rfrom_int(1)

    def riszero(self, a) -> bool:
        return a == self.rzero

    def rpow(self, a, e: int):
        if e < 0:
            a = self.rinv(a)
            e = -e
        result = self.rone
        while e:
            if e & 1:
                result = self.rmul(result, a)
            a = self.rmul(a, a)
            e >>= 1
        return result

    def rfrom_fraction(self, q: Fraction):
        den = self.rfrom_int(q.denominator)
        if self.riszero(den):
            raise FieldError(f"denominator {q.denominator} vanishes in {self.spec()}")
        return self.rmul(self.rfrom_int(q.numerator), self.rinv(den))

    # --- element level -------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.to_raw(value))

    def wrap(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    @property
    def zero(self):
        return self.wrap(self.rzero)

    @property
    def one(self):
        return self.wrap(self.rone)

    def to_raw(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.raw
            return self.embed_raw(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.rfrom_int(value)
        if isinstance(value, Fraction):
            return self.rfrom_fraction(value)
        if isinstance(value, str):
            return self.parse(value).raw
        raise TypeError(f"cannot coerce {value!r} into {self.spec()}")

    def embed_raw(self, elem: "FieldElement"):
        raise TypeError(f"{elem.field.spec()} is not a subfield of {self.spec()}")

    def tower(self) -> list["Field"]:
        """Fields from the prime/rational ground field up to ``self``."""
        return [self]

    @property
    def ground(self) -> "Field":
        return self.tower()[0]

    def contains(self, other: "Field") -> bool:
        return other in self.tower()

    def generators(self) -> dict[str, "FieldElement"]:
        return {}

    def parse(self, text: str) -> "FieldElement":
        """Parse a field-element literal such as ``-3/2`` or ``t^2+1``."""
        from ..parse import evaluate
        return evaluate(text, self.generators(), self)

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def elements(self):
        raise FieldError(f"{self.spec()} is infinite")

    def random_element(self, rng, bound: int = 5) -> "FieldElement":
        raise NotImplementedError

    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"Field({self.spec()!r})"


class RationalField(Field):
    characteristic = 0
    order = None

    def radd(self, a, b): return a + b
    def rsub(self, a, b): return a - b
    def rneg(self, a): return -a
    def rmul(self, a, b): return a * b

    def rinv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def rfrom_int(self, n): return Fraction(n)
    def rfrom_fraction(self, q): return Fraction(q)
    def render_raw(self, a): return str(a)
    def sort_key(self, a): return (abs(a), a < 0, a)

    def random_element(self, rng, bound=5):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return self.wrap(Fraction(num, den))

    def spec(self): return "q"
    def __eq__(self, other): return isinstance(other, RationalField)
    def __hash__(self): return hash("Q")


QQ = RationalField()


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def radd(self, a, b): return (a + b) % self.p
    def rsub(self, a, b): return (a - b) % self.p
    def rneg(self, a): return -a % self.p
    def rmul(self, a, b): return a * b % self.p

    def rinv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def rfrom_int(self, n): return n % self.p
    def render_raw(self, a): return str(a)
    def sort_key(self, a): return a

    def elements(self):
        return (self.wrap(a) for a in range(self.p))

    def random_element(self, rng, bound=5):
        return self.wrap(rng.randrange(self.p))

    def spec(self): return f"fp:{self.p}"
    def __eq__(self, other): return isinstance(other, PrimeField) and other.p == self.p
    def __hash__(self): return hash(("Fp", self.p))


class ExtensionField(Field):
    """``base[t]/(modulus)``; ``verified`` is False when irreducibility was assumed."""

    def __init__(self, base: Field, modulus, verified: bool = True):
        if modulus.field != base:
            raise FieldError("modulus must have coefficients in the base field")
        if modulus.degree() < 2 or not modulus.is_monic():
            raise FieldError("modulus must be monic of degree >= 2")
        self.base = base
        self.modulus = modulus
        self.n = modulus.degree()
        self.verified = verified
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order ** self.n
        self.depth = base.depth + 1
        self.gen_name = "t" if self.depth == 1 else f"t{self.depth}"
        self.gen_names = base.gen_names + (self.gen_name,)
        # x^(n+k) reduction table: x^n = -sum(m_i x^i)
        self._neg_mod = tuple(base.rneg(c) for c in modulus.coeffs[:-1])

    # raw values are tuples of length n
    def radd(self, a, b):
        B = self.base
        return tuple(B.radd(x, y) for x, y in zip(a, b))

    def rsub(self, a, b):
        B = self.base
        return tuple(B.rsub(x, y) for x, y in zip(a, b))

    def rneg(self, a):
        B = self.base
        return tuple(B.rneg(x) for x in a)

    def rmul(self, a, b):
        B = self.base
        n = self.n
        prod = [B.rzero] * (2 * n - 1)
        for i, x in enumerate(a):
            if B.riszero(x):
                continue
            for j, y in enumerate(b):
                if not B.riszero(y):
                    prod[i + j] = B.radd(prod[i + j], B.rmul(x, y))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if B.riszero(c):
                continue
            prod[k] = B.rzero
            for i, m in enumerate(self._neg_mod):
                prod[k - n + i] = B.radd(prod[k - n + i], B.rmul(c, m))
        return tuple(prod[:n])

    def rinv(self, a):
        if self.riszero(a):
            raise ZeroDivisionError("inverse of zero")
        from .univariate import UPoly, xgcd
        g, s, _ = xgcd(UPoly(self.base, a), self.modulus)
        # g is a nonzero constant because the modulus is irreducible
        if g.degree() != 0:
            raise FieldError(f"{self.spec()} is not a field: modulus is reducible")
        s = s * self.base.wrap(self.base.rinv(g.coeffs[0]))
        return self._from_coeffs(s.coeffs)

    def _from_coeffs(self, coeffs):
        B = self.base
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            from .univariate import UPoly
            coeffs = list((UPoly(B, coeffs) % self.modulus).coeffs)
        return tuple(coeffs) + (B.rzero,) * (self.n - len(coeffs))

    def rfrom_int(self, n):
        return (self.base.rfrom_int(n),) + (self.base.rzero,) * (self.n - 1)

    def rfrom_fraction(self, q):
        return (self.base.rfrom_fraction(q),) + (self.base.rzero,) * (self.n - 1)

    def embed_raw(self, elem):
        if not self.base.contains(elem.field):
            raise TypeError(f"{elem.field.spec()} is not a subfield of {self.spec()}")
        return (self.base.to_raw(elem),) + (self.base.rzero,) * (self.n - 1)

    def in_base(self, a) -> bool:
        return all(self.base.riszero(c) for c in a[1:])

    @property
    def gen(self) -> "FieldElement":
        B = self.base
        return self.wrap((B.rzero, B.rone) + (B.rzero,) * (self.n - 2))

    def tower(self):
        return self.base.tower() + [self]

    def generators(self):
        gens = {name: self(e) for name, e in self.base.generators().items()}
        gens[self.gen_name] = self.gen
        return gens

    def render_raw(self, a):
        from .univariate import render_poly
        return render_poly(self.base, a, self.gen_name, sep="")

    def sort_key(self, a):
        return tuple(self.base.sort_key(c) for c in reversed(a))

    def elements(self):
        if self.order is None:
            raise FieldError(f"{self.spec()} is infinite")
        base_elems = [e.raw for e in self.base.elements()]
        for combo in itertools.product(base_elems, repeat=self.n):
            yield self.wrap(tuple(reversed(combo)))

    def random_element(self, rng, bound=5):
        return self.wrap(tuple(self.base.random_element(rng, bound).raw for _ in range(self.n)))

    def spec(self):
        return f"ext:{self.base.spec()}:{self.modulus.render(self.gen_name, sep='')}"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))


class FieldElement:
    """An element of an exact field; immutable and hashable."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _other(self, other):
        if isinstance(other, FieldElement) and other.field != self.field:
            if other.field.contains(self.field):
                return other.field(self), other
            return self, self.field(other)
        return self, self.field(other)

    def __add__(self, other):
        a, b = self._other(other)
        return FieldElement(a.field, a.field.radd(a.raw, b.raw))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._other(other)
        return FieldElement(a.field, a.field.rsub(a.raw, b.raw))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.field, self.field.rneg(self.raw))

    def __mul__(self, other):
        a, b = self._other(other)
        return FieldElement(a.field, a.field.rmul(a.raw, b.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._other(other)
        return FieldElement(a.field, a.field.rmul(a.raw, a.field.rinv(b.raw)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        return FieldElement(self.field, self.field.rinv(self.raw))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.rpow(self.raw, e))

    def __bool__(self):
        return not self.field.riszero(self.raw)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other.raw == self.raw
            if other.field.contains(self.field) or self.field.contains(other.field):
                a, b = self._other(other)
                return a.raw == b.raw
            return False
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.field.to_raw(other) == self.raw
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def sort_key(self):
        return self.field.sort_key(self.raw)

    def __str__(self):
        return self.field.render_raw(self.raw)

    def __repr__(self):
        return f"FieldElement({self.field.spec()!r}, {str(self)!r})"
