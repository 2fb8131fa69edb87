"""Points of the quadratic tree over k[x,y]_(x,y) and the prime divisors they carry.

A point is the path of centers leading to it from the origin. Each step is a
``Center`` (a point on the exceptional line of the previous blowup); a finite
center whose value lies in a proper extension of the current residue field
"enters" that extension, and every later computation happens over it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import (ExtensionFactorizationUnsupported, NotCoprime, ParseError,
                     UnitElement, ZeroPolynomial)
from .field import (ExtensionField, Field, FieldElement, UPoly, conjugate_roots,
                    factor_univariate, make_extension)
from .poly import Poly2, strict_transform


@dataclass(frozen=True)
class Center:
    """A point on the exceptional line: ``Finite(a)`` or ``INFINITY`` (value None)."""

    value: FieldElement | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def sort_key(self):
        if self.value is None:
            return (2,)
        return (0, self.value.field.depth, self.value.sort_key())

    def __repr__(self):
        return "Infinity" if self.value is None else f"Finite({self.value})"


def Finite(a: FieldElement) -> Center:
    return Center(a)


INFINITY = Center(None)


class PointPath:
    """A point of the quadratic tree, given by its unique sequence of centers.

    ``fields[i]`` is the residue field in effect after step ``i``; ``base`` is
    the field before the first step.
    """

    __slots__ = ("base", "centers", "fields", "_hash")

    def __init__(self, base: Field, centers: Iterable[Center] = ()):
        self.base = base
        cur = base
        canon, fields = [], []
        for c in centers:
            if not c.is_infinite:
                a = c.value
                if cur.contains(a.field):
                    c = Center(cur(a))
                elif isinstance(a.field, ExtensionField) and a.field.base == cur:
                    K = a.field
                    if K.in_base(a.raw):
                        c = Center(cur.wrap(a.raw[0]))
                    elif a not in conjugate_roots(K):
                        raise ValueError(f"{a} is not a listed root of the modulus of {K.spec()}")
                    else:
                        cur = K
                else:
                    raise ValueError(f"center {a} is not over the residue field {cur.spec()}")
            canon.append(c)
            fields.append(cur)
        self.centers = tuple(canon)
        self.fields = tuple(fields)
        self._hash = None

    @property
    def field(self) -> Field:
        """Residue field at the point."""
        return self.fields[-1] if self.fields else self.base

    def field_at(self, k: int) -> Field:
        return self.base if k == 0 else self.fields[k - 1]

    @property
    def depth(self) -> int:
        return len(self.centers)

    def __len__(self):
        return len(self.centers)

    def __iter__(self):
        return iter(self.centers)

    def __getitem__(self, k):
        return self.centers[k]

    def child(self, c: Center) -> "PointPath":
        return PointPath(self.base, self.centers + (c,))

    def prefix(self, k: int) -> "PointPath":
        return PointPath(self.base, self.centers[:k])

    def suffix(self, k: int) -> "PointPath":
        """The rest of the path seen from the point reached after ``k`` steps."""
        return PointPath(self.field_at(k), self.centers[k:])

    def is_prefix_of(self, other: "PointPath") -> bool:
        return other.centers[:len(self.centers)] == self.centers

    def entered(self, k: int) -> bool:
        """True when step ``k`` introduced a field extension."""
        return self.field_at(k + 1) != self.field_at(k)

    def __eq__(self, other):
        return (isinstance(other, PointPath) and self.centers == other.centers
                and self.base == other.base)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, self.centers))
        return self._hash

    def sort_key(self):
        return tuple(c.sort_key() for c in self.centers)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def render_center(self, k: int) -> str:
        c = self.centers[k]
        if c.is_infinite:
            return "inf"
        if self.entered(k):
            K = self.field_at(k + 1)
            idx = conjugate_roots(K).index(c.value)
            return f"root({K.modulus.render(K.gen_name, sep='')})#{idx}"
        return str(c.value)

    def __str__(self):
        return "[" + ", ".join(self.render_center(k) for k in range(len(self))) + "]"

    def __repr__(self):
        return f"PointPath({self})"

    @classmethod
    def parse(cls, text: str, field: Field, start: "PointPath | None" = None) -> "PointPath":
        return parse_path(text, field, start)


@dataclass(frozen=True)
class PrimeDivisor:
    """The order valuation of ``point``; its level is depth + 1."""

    point: PointPath

    @property
    def level(self) -> int:
        return self.point.depth + 1

    def __str__(self):
        return str(self.point)


def as_path(obj) -> PointPath:
    return obj.point if isinstance(obj, PrimeDivisor) else obj


# --- path syntax -------------------------------------------------------------

def split_top(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside brackets, parentheses and quotes."""
    parts, depth, cur, quote = [], 0, [], None
    for ch in text:
        if quote:
            cur.append(ch)
            if ch == quote:
                quote = None
            continue
        if ch in "\"'":
            quote = ch
        elif ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_center(item: str, cur: Field, text: str = "") -> Center:
    item = item.strip()
    if item == "inf":
        return INFINITY
    if item.startswith("root(") and "#" in item:
        body, _, idx = item.rpartition("#")
        if not body.endswith(")"):
            raise ParseError(text or item, 0, "root(<modulus>)#<index>")
        g = UPoly.parse(body[5:-1], cur)
        K = make_extension(cur, g.monic())
        roots = conjugate_roots(K)
        k = int(idx)
        if k >= K.n:
            raise ParseError(text or item, 0, f"a root index below {K.n}")
        if k >= len(roots):
            raise ExtensionFactorizationUnsupported(cur, g)
        return Center(roots[k])
    return Center(cur.parse(item))


def parse_centers(text: str, field: Field) -> list[Center]:
    """Parse ``[c1, c2, ...]`` relative to ``field``, threading extensions."""
    return list(parse_path(text, field).centers)


def parse_path(text: str, field: Field, start: PointPath | None = None) -> PointPath:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(text, 0, "a bracketed path such as [0, inf]")
    body = s[1:-1].strip()
    path = start if start is not None else PointPath(field)
    if not body:
        return path
    for item in split_top(body):
        if not item:
            raise ParseError(text, 0, "a center between commas")
        path = path.child(parse_center(item, path.field, text))
    return path


# --- tangent directions -----------------------------------------------------

def _tangent_poly(f: Poly2) -> tuple[UPoly, int]:
    m = f.ord()
    F = f.field
    raw = f.raw_terms()
    coeffs = [raw.get((m - j, j), F.rzero) for j in range(m + 1)]
    return UPoly(F, coeffs), m


def tangent_directions(f: Poly2, field: Field | None = None):
    """Directions of the tangent cone of ``f`` at the origin.

    Returns ``(rational, nonrational)``: the rational centers (sorted, infinity
    last) and the monic irreducible factors of degree >= 2 of L(1, t), where L
    is the leading form.
    """
    if not f:
        raise ZeroPolynomial()
    if field is not None and field != f.field:
        f = f.over(field)
    h, m = _tangent_poly(f)
    if m == 0:
        raise UnitElement(f)
    F = f.field
    rational: list[Center] = []
    nonrational: list[UPoly] = []
    if h.degree() == 1:
        rational.append(Center(F.wrap(F.rneg(h.monic().coeffs[0]))))
    elif h.degree() >= 2:
        for g, _ in factor_univariate(h):
            if g.degree() == 1:
                rational.append(Center(F.wrap(F.rneg(g.coeffs[0]))))
            else:
                nonrational.append(g)
    rational.sort(key=Center.sort_key)
    if h.degree() < m:
        rational.append(INFINITY)
    return tuple(rational), nonrational


def tangent_polynomial(f: Poly2) -> UPoly:
    """L(1, t) for the leading form L of ``f``."""
    return _tangent_poly(f)[0]


def enter_direction(field: Field, g: UPoly) -> Center:
    """The center of the nonrational direction ``g`` (its generator root)."""
    K = make_extension(field, g)
    return Center(K.gen)


def children_on_strict(f: Poly2, path: PointPath):
    """Centers below ``path`` through which the strict transform of ``f`` passes.

    Returns ``(rational, nonrational, m)`` with ``m`` the order of the strict
    transform at the point (0 when it is a unit there).
    """
    if not f:
        raise ZeroPolynomial()
    s = strict_transform(f.over(path.base) if f.field != path.base else f, path)
    if s.field != path.field:
        s = s.over(path.field)
    m = s.ord()
    if m == 0:
        return (), [], 0
    rational, nonrational = tangent_directions(s)
    return rational, nonrational, m


def monomial_path(a: int, b: int, field: Field | None = None) -> PointPath:
    """Path of the divisor of the monomial valuation with v(x) = a, v(y) = b."""
    from .field import QQ

    field = field or QQ
    if a < 1 or b < 1:
        raise ValueError("weights must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(a, b)
    centers = []
    while (a, b) != (1, 1):
        if b > a:
            centers.append(Center(field.zero))
            b -= a
        else:
            centers.append(INFINITY)
            a -= b
    return PointPath(field, centers)


def rational_children(path: PointPath) -> list[PointPath]:
    """All children with rational centers (finite residue fields only)."""
    F = path.field
    return [path.child(Center(a)) for a in F.elements()] + [path.child(INFINITY)]


def enumerate_paths(field: Field, max_depth: int) -> list[PointPath]:
    """Every point of depth <= ``max_depth`` with rational centers over a finite field."""
    out = [PointPath(field)]
    frontier = [PointPath(field)]
    for _ in range(max_depth):
        frontier = [c for p in frontier for c in rational_children(p)]
        out.extend(frontier)
    return out
