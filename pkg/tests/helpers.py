"""Random generators shared by the test modules."""

import random

from adk.field import QQ, PrimeField
from adk.poly import Poly2
from adk.tree import INFINITY, Center, PointPath

F5 = PrimeField(5)


def rand_poly(rng: random.Random, F, deg=6, nterms=4, min_ord=0) -> Poly2:
    """A nonzero polynomial with at most ``nterms`` terms of total degree in [min_ord, deg]."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, nterms)):
            total = rng.randint(min_ord, deg)
            i = rng.randint(0, total)
            terms[(i, total - i)] = F.random_element(rng, 4)
        f = Poly2.from_terms(F, terms)
        if f:
            return f


def rand_center(rng: random.Random, F) -> Center:
    if rng.random() < 0.25:
        return INFINITY
    if F == QQ:
        return Center(F(rng.randint(-2, 2)))
    return Center(F.random_element(rng))


def rand_path(rng: random.Random, F, max_depth=4) -> PointPath:
    path = PointPath(F)
    for _ in range(rng.randint(0, max_depth)):
        path = path.child(rand_center(rng, path.field))
    return path


def _monic_irreducibles(F, k):
    """Monic polynomials of degree 2 or 3 over F without roots (hence irreducible)."""
    import itertools

    from adk.field import UPoly

    elems = list(F.elements())
    out = []
    for tail in itertools.product(elems, repeat=k):
        h = UPoly.from_elements(F, list(tail) + [F.one])
        if all(h(a) for a in elems):
            out.append(h)
    return out


def _forced_degrees(polys, path):
    from adk.poly import strict_transform
    from adk.tree import tangent_polynomial
    from adk.field import factor_univariate

    degs = set()
    for f in polys:
        s = strict_transform(f.over(path.base) if f.field != path.base else f, path)
        if s.field != path.field:
            s = s.over(path.field)
        if s.ord() >= 1:
            h = tangent_polynomial(s)
            if h.degree() >= 2:
                degs |= {g.degree() for g, _ in factor_univariate(h) if g.degree() >= 2}
    return degs


class TooDeep(Exception):
    """The brute-force oracle would need an extension of an extension."""


def brute_force_values(f, g, d):
    """v(f) - v(g) at every enumerated divisor of level <= d over a prime field.

    Every rational child is visited; at a base-field node, every point with
    residue field of a degree forced there (by the tangent cones of the strict
    transforms) is visited too, one representative per irreducible polynomial.
    """
    from adk.field import make_extension
    from adk.tree import INFINITY, Center, PointPath
    from adk.valuation import val

    F = f.field
    irreducibles = {}
    out = {}

    def visit(path):
        out[path] = val(f, path) - val(g, path)
        if path.depth + 1 >= d:
            return
        K = path.field
        for a in K.elements():
            visit(path.child(Center(a)))
        visit(path.child(INFINITY))
        forced = _forced_degrees([f, g], path)
        if forced and K != F:
            raise TooDeep(path)
        for k in sorted(forced):
            if k > 3:
                raise TooDeep(path)
            if k not in irreducibles:
                irreducibles[k] = _monic_irreducibles(F, k)
            for h in irreducibles[k]:
                visit(path.child(Center(make_extension(F, h).gen)))

    visit(PointPath(F))
    return out
