"""Univariate factorization.

Finite fields (prime fields and their simple extensions) are handled here in
full: square-free decomposition, distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting with a seeded generator so results are
reproducible. Over Q the work is delegated to sympy. Extensions of Q support
arithmetic only.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import ExtensionFactorizationUnsupported, ZeroPolynomial
from .base import ExtensionField, Field, RationalField
from .univariate import UPoly, gcd


def supports_factorization(field: Field) -> bool:
    return field.is_finite or isinstance(field, RationalField)


def factor_univariate(f: UPoly) -> list[tuple[UPoly, int]]:
    """Monic irreducible factors of ``f`` with multiplicities.

    The product of the factors (with multiplicity) equals ``f`` divided by its
    leading coefficient. Output is sorted by degree, then coefficients.
    """
    if not f:
        raise ZeroPolynomial()
    F = f.field
    if f.degree() == 0:
        return []
    if F.is_finite:
        factors = _factor_finite(f.monic())
    elif isinstance(F, RationalField):
        factors = _factor_rational(f)
    else:
        raise ExtensionFactorizationUnsupported(F, f)
    merged: dict[UPoly, int] = {}
    for g, e in factors:
        merged[g] = merged.get(g, 0) + e
    return sorted(merged.items(), key=lambda ge: ge[0].sort_key())


def is_irreducible(f: UPoly) -> bool:
    if f.degree() < 1:
        return False
    facs = factor_univariate(f)
    return len(facs) == 1 and facs[0][1] == 1


# --- Q ------------------------------------------------------------------

def _factor_rational(f: UPoly) -> list[tuple[UPoly, int]]:
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
               for i, c in enumerate(f.coeffs))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for g, e in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((UPoly(f.field, coeffs).monic(), e))
    return out


# --- finite fields -----------------------------------------------------

def _pth_root_poly(f: UPoly) -> UPoly:
    """For f with f' = 0, return g with g^p = f."""
    F = f.field
    p = F.characteristic
    # a^(1/p) = a^(q/p) in F_q
    e = F.order // p
    coeffs = [F.rpow(f.coeffs[i], e) for i in range(0, len(f.coeffs), p)]
    return UPoly(F, coeffs)


def _squarefree(f: UPoly) -> list[tuple[UPoly, int]]:
    F = f.field
    p = F.characteristic
    out = []
    df = f.derivative()
    if not df:
        return [(g, e * p) for g, e in _squarefree(_pth_root_poly(f))]
    c = gcd(f, df)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = gcd(w, c)
        fac = w // y
        if fac.degree() > 0:
            out.append((fac.monic(), i))
        w = y
        c = c // y
        i += 1
    if c.degree() > 0:
        out += [(g, e * p) for g, e in _squarefree(_pth_root_poly(c.monic()))]
    return out


def _distinct_degree(f: UPoly) -> list[tuple[UPoly, int]]:
    F = f.field
    q = F.order
    t = UPoly.gen(F)
    out = []
    h = t
    d = 0
    while f.degree() >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, f)
        g = gcd(h - t, f)
        if g.degree() > 0:
            out.append((g, d))
            f = f // g
            h = h % f if f.degree() > 0 else h
    if f.degree() > 0:
        out.append((f.monic(), f.degree()))
    return out


def _equal_degree(f: UPoly, d: int, rng: random.Random) -> list[UPoly]:
    n = f.degree()
    if n == d:
        return [f.monic()]
    F = f.field
    q = F.order
    while True:
        a = UPoly(F, [F.random_element(rng).raw for _ in range(n)])
        if a.degree() < 1:
            continue
        if q % 2:
            b = a.pow_mod((q ** d - 1) // 2, f) - 1
        else:
            # absolute trace to F_2: q = 2^k
            k = q.bit_length() - 1
            b = UPoly(F)
            term = a % f
            for _ in range(k * d):
                b = b + term
                term = (term * term) % f
        g = gcd(f, b)
        if 0 < g.degree() < n:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _factor_finite(f: UPoly) -> list[tuple[UPoly, int]]:
    rng = random.Random(0x5EED)
    out = []
    for sq, e in _squarefree(f):
        for g, d in _distinct_degree(sq):
            for h in _equal_degree(g, d, rng):
                out.append((h, e))
    return out


# --- roots ---------------------------------------------------------------

def roots_in_field(f: UPoly) -> list:
    """Distinct roots of ``f`` in its coefficient field, sorted canonically."""
    F = f.field
    if f.degree() < 1:
        return []
    if f.degree() == 1:
        return [F.wrap(F.rneg(f.monic().coeffs[0]))]
    roots = []
    for g, _ in factor_univariate(f):
        if g.degree() == 1:
            roots.append(F.wrap(F.rneg(g.coeffs[0])))
    return sorted(roots, key=lambda r: r.sort_key())


def conjugate_roots(K: ExtensionField) -> list:
    """Roots of K's modulus inside K, starting with the generator.

    Finite fields: the Frobenius orbit gen^(q^i). Quadratic moduli: gen and
    its conjugate. Otherwise only the generator is known without factoring.
    """
    theta = K.gen
    if K.base.is_finite:
        q = K.base.order
        roots = [theta]
        r = theta
        for _ in range(K.n - 1):
            r = r ** q
            roots.append(r)
        return roots
    if K.n == 2:
        a1 = K.base.wrap(K.modulus.coeffs[1])
        return [theta, -theta - a1]
    return [theta]
