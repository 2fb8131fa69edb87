"""Divisorial valuations of polynomials and the position of f/g at a point."""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache

from .errors import ZeroPolynomial
from .poly import Poly2, divide, gcd2, pullback_total, transform_at_center
from .tree import PointPath, as_path

#: value of the zero polynomial at every divisor
INFINITE = math.inf


class Position(Enum):
    ZERO = "zero"
    POLE = "pole"
    UNIT = "unit"
    UNDETERMINED = "undetermined"

    def __str__(self):
        return self.value


def _prepare(f: Poly2, path: PointPath) -> Poly2:
    if f.field != path.base:
        f = f.over(path.base)
    return f


@lru_cache(maxsize=65536)
def _val(f: Poly2, path: PointPath) -> int:
    if not path.centers:
        return f.ord()
    if f.constant_term():
        return 0
    c = path.centers[0]
    m, strict = transform_at_center(f, c)
    rest = path.suffix(1)
    E = Poly2.y(rest.base) if c.is_infinite else Poly2.x(rest.base)
    return m * _val(E, rest) + _val(strict, rest)


def val(f: Poly2, divisor) -> int:
    """Value of ``f`` at the prime divisor of a point (or a ``PrimeDivisor``).

    Computed through strict transforms: v(f) = ord(f) * v(E) + v(strict), where
    E is the exceptional coordinate of the first chart.
    """
    if not f:
        raise ZeroPolynomial()
    path = as_path(divisor)
    return _val(_prepare(f, path), path)


def val_by_pullback(f: Poly2, divisor) -> int:
    """Same value via the order of the total pullback (slow reference path)."""
    if not f:
        raise ZeroPolynomial()
    path = as_path(divisor)
    return pullback_total(_prepare(f, path), path).ord()


def val_frac(f: Poly2, g: Poly2, divisor):
    """v(f) - v(g); ``INFINITE`` when f = 0."""
    if not g:
        raise ZeroPolynomial("denominator")
    if not f:
        return INFINITE
    return val(f, divisor) - val(g, divisor)


def position(f: Poly2, g: Poly2, point) -> Position:
    """Classify f/g at ``point`` as a zero, pole, unit or undetermined (base point)."""
    if not g:
        raise ZeroPolynomial("denominator")
    if not f:
        return Position.ZERO
    path = as_path(point)
    F = pullback_total(_prepare(f, path), path)
    G = pullback_total(_prepare(g, path), path)
    F, G = F._coerce(G)
    h = gcd2(F, G)
    F = divide(F, h)[0]
    G = divide(G, h)[0]
    f0, g0 = bool(F.constant_term()), bool(G.constant_term())
    if f0 and g0:
        return Position.UNIT
    if g0:
        return Position.ZERO
    if f0:
        return Position.POLE
    return Position.UNDETERMINED
