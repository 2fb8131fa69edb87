"""Intersections of prime divisors: ideal arithmetic and bounded-level membership.

For a finite divisor set X the ring A(X) is a semilocal PID and a nonzero
ideal is its vector of values. For X = all divisors of level <= d the ring is
infinite-dimensional in spirit, so it is handled through a pruned walk of the
quadratic tree: at a point P with total transforms F, G, a child through which
neither strict transform passes sees f/g as E^(ordF - ordG) times a unit, E the
new exceptional coordinate. Only the finitely many children on the tangent
cone of F*G need to be visited; every other divisor below P is decided by the
sign of ordF - ordG.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Iterable, Sequence

from .errors import (AllGeneratorsZero, ExtensionFactorizationUnsupported,
                     LevelExceedsBound, MismatchedDivisorSets, UnitElement,
                     ZeroPolynomial)
from .field import Field, UPoly, make_extension
from .poly import Poly2, divide, gcd2
from .tree import (Center, INFINITY, PointPath, PrimeDivisor, as_path, parse_path,
                   tangent_directions, tangent_polynomial)
from .valuation import val


# --- finite divisor sets ------------------------------------------------------

class FiniteDivisorSet:
    """A nonempty finite list of distinct prime divisors."""

    def __init__(self, divisors: Iterable):
        paths = [as_path(v) for v in divisors]
        if not paths:
            raise ValueError("a divisor set must be nonempty")
        if len(set(paths)) != len(paths):
            raise ValueError("divisors must be pairwise distinct")
        self.points: tuple[PointPath, ...] = tuple(paths)

    @property
    def divisors(self) -> tuple[PrimeDivisor, ...]:
        return tuple(PrimeDivisor(p) for p in self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, FiniteDivisorSet) and other.points == self.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "FiniteDivisorSet(" + ", ".join(str(p) for p in self.points) + ")"


@dataclass(frozen=True)
class ValueVector:
    """The ideal {a : v_V(a) >= e_V for all V in X}."""

    divisor_set: FiniteDivisorSet
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.divisor_set):
            raise ValueError("one entry per divisor is required")
        if any(e < 0 for e in self.entries):
            raise ValueError("entries must be nonnegative")

    def __getitem__(self, point) -> int:
        return self.entries[self.divisor_set.points.index(as_path(point))]

    def as_dict(self) -> dict[PointPath, int]:
        return dict(zip(self.divisor_set.points, self.entries))

    def __str__(self):
        return ", ".join(f"{p}: {e}" for p, e in zip(self.divisor_set.points, self.entries))


def ideal_values(generators: Sequence[Poly2], X: FiniteDivisorSet) -> ValueVector:
    gens = [g for g in generators if g]
    if not gens:
        raise AllGeneratorsZero()
    return ValueVector(X, tuple(min(val(g, p) for g in gens) for p in X))


def _same(a: ValueVector, b: ValueVector):
    if a.divisor_set != b.divisor_set:
        raise MismatchedDivisorSets()


def intersect(a: ValueVector, b: ValueVector) -> ValueVector:
    _same(a, b)
    return ValueVector(a.divisor_set, tuple(map(max, a.entries, b.entries)))


def product(a: ValueVector, b: ValueVector) -> ValueVector:
    _same(a, b)
    return ValueVector(a.divisor_set, tuple(x + y for x, y in zip(a.entries, b.entries)))


def ideal_sum(a: ValueVector, b: ValueVector) -> ValueVector:
    _same(a, b)
    return ValueVector(a.divisor_set, tuple(map(min, a.entries, b.entries)))


_OPS = {"intersect": intersect, "product": product, "sum": ideal_sum}


def ideal_ops(a: ValueVector, b: ValueVector, op: str) -> ValueVector:
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown ideal operation {op!r}; use intersect, product or sum") from None


def contains(a: ValueVector, f: Poly2) -> bool:
    if not f:
        return True
    return all(val(f, p) >= e for p, e in zip(a.divisor_set.points, a.entries))


def primary_component(X: FiniteDivisorSet, point, e: int) -> ValueVector:
    """M_V^e as a value vector."""
    p = as_path(point)
    return ValueVector(X, tuple(e if q == p else 0 for q in X.points))


def decompose(a: ValueVector) -> list[tuple[PrimeDivisor, int]]:
    """The irredundant decomposition of ``a`` into powers of maximal ideals."""
    return [(PrimeDivisor(p), e) for p, e in zip(a.divisor_set.points, a.entries) if e >= 1]


def recompose(X: FiniteDivisorSet, components) -> ValueVector:
    """Intersection of the listed primary components (the unit ideal if none)."""
    result = ValueVector(X, (0,) * len(X))
    for V, e in components:
        result = intersect(result, primary_component(X, V, e))
    return result


# --- bounded level ---------------------------------------------------------------

@dataclass
class ValueProfile:
    """v(f) - v(g) over all divisors of level <= ``level``.

    ``visited`` holds exact differences at explicitly walked points;
    ``generic[P]`` is the coefficient c with v_V(f/g) = c * v_V(E) for every V
    below a child of P not in ``visited`` (E the exceptional coordinate of that
    child); ``unresolved`` lists (P, h) where the children of P at roots of h
    could not be entered.
    """

    level: int
    field: Field
    visited: dict[PointPath, int] = dc_field(default_factory=dict)
    generic: dict[PointPath, int] = dc_field(default_factory=dict)
    unresolved: list[tuple[PointPath, UPoly]] = dc_field(default_factory=list)

    def predict(self, point) -> int | None:
        """Predicted v(f) - v(g) at the divisor of ``point``; None if unresolved."""
        path = as_path(point)
        if path.depth >= self.level:
            raise LevelExceedsBound(path.depth + 1, self.level)
        if path in self.visited:
            return self.visited[path]
        k = path.depth
        while path.prefix(k) not in self.visited:
            k -= 1
        parent = path.prefix(k)
        c = path.centers[k]
        for P, h in self.unresolved:
            if P == parent and not c.is_infinite and not h(c.value):
                return None
        rest = path.suffix(k + 1)
        E = Poly2.y(rest.base) if c.is_infinite else Poly2.x(rest.base)
        return self.generic[parent] * val(E, rest)

    def bucket(self, point):
        """('visited', P), ('generic', P) or ('unresolved', P) for a divisor."""
        path = as_path(point)
        if path in self.visited:
            return ("visited", path)
        k = path.depth
        while path.prefix(k) not in self.visited:
            k -= 1
        parent = path.prefix(k)
        c = path.centers[k]
        for P, h in self.unresolved:
            if P == parent and not c.is_infinite and not h(c.value):
                return ("unresolved", parent)
        return ("generic", parent)

    def to_json(self) -> dict:
        order = sorted(self.visited)
        return {
            "level": self.level,
            "visited": [{"path": str(p), "delta": self.visited[p]} for p in order],
            "generic": [{"path": str(p), "sign": _sign(self.generic[p]),
                         "coefficient": self.generic[p]}
                        for p in order if p in self.generic],
            "unresolved": [{"path": str(p), "factor": h.render(sep="")}
                           for p, h in self.unresolved],
        }

    @classmethod
    def from_json(cls, data: dict, field: Field) -> "ValueProfile":
        prof = cls(int(data["level"]), field)
        for row in data["visited"]:
            prof.visited[parse_path(row["path"], field)] = int(row["delta"])
        for row in data["generic"]:
            prof.generic[parse_path(row["path"], field)] = int(row.get("coefficient", row["sign"]))
        for row in data["unresolved"]:
            p = parse_path(row["path"], field)
            prof.unresolved.append((p, UPoly.parse(row["factor"], p.field)))
        return prof


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _cancel(f: Poly2, g: Poly2) -> tuple[Poly2, Poly2]:
    f, g = f._coerce(g)
    h = gcd2(f, g)
    if h.degree() == 0:
        return f, g
    return divide(f, h)[0], divide(g, h)[0]


def _directions(F: Poly2, G: Poly2, field: Field):
    rational: set[Center] = set()
    nonrational: dict[UPoly, None] = {}
    for H in (F, G):
        if H.ord() == 0:
            continue
        r, n = tangent_directions(H)
        rational.update(r)
        for g in n:
            nonrational[g] = None
    return sorted(rational, key=Center.sort_key), sorted(nonrational, key=UPoly.sort_key)


def _walk(f: Poly2, g: Poly2, d: int) -> ValueProfile:
    if d < 1:
        raise ValueError("level bound must be >= 1")
    f, g = _cancel(f, g)
    root = PointPath(f.field)
    prof = ValueProfile(d, f.field)
    extensions: dict[tuple[Field, UPoly], Field] = {}

    def visit(path: PointPath, F: Poly2, G: Poly2):
        delta = F.ord() - G.ord()
        prof.visited[path] = delta
        if path.depth >= d - 1:
            return
        prof.generic[path] = delta
        try:
            rational, nonrational = _directions(F, G, path.field)
        except ExtensionFactorizationUnsupported:
            prof.unresolved.append((path, tangent_polynomial(F * G)))
            rational = [INFINITY] if _infinity_on(F) or _infinity_on(G) else []
            nonrational = []
            # roots of the tangent polynomial stay unresolved; infinity is exact
        for c in rational:
            visit(path.child(c), F.total_substitute(c), G.total_substitute(c))
        for h in nonrational:
            key = (path.field, h)
            if key not in extensions:
                extensions[key] = make_extension(path.field, h)
            K = extensions[key]
            c = Center(K.gen)
            FK, GK = F.over(K), G.over(K)
            visit(path.child(c), FK.total_substitute(c), GK.total_substitute(c))

    visit(root, f, g)
    return prof


def _infinity_on(F: Poly2) -> bool:
    m = F.ord()
    return m > 0 and not F.coeff(0, m)


def value_profile(f: Poly2, g: Poly2, d: int) -> ValueProfile:
    """Finite description of v(f) - v(g) over the divisors of level <= d."""
    if not f or not g:
        raise ZeroPolynomial()
    return _walk(f, g, d)


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: PointPath | None = None
    delta: int | None = None

    def __bool__(self):
        return self.member

    def __str__(self):
        if self.member:
            return "true"
        return f"false (witness {self.witness}, delta {self.delta})"


def member_bounded(f: Poly2, g: Poly2, d: int) -> Membership:
    """Is f/g in the intersection of all prime divisors of level <= d?

    A generic bucket below P carries the coefficient of P itself, so the
    verdict is decided by the visited points alone. Raises
    ``ExtensionFactorizationUnsupported`` rather than answering when a
    direction could not be entered and no negative value was found.
    """
    if not g:
        raise ZeroPolynomial("denominator")
    if not f:
        return Membership(True)
    prof = _walk(f, g, d)
    for path in _preorder(prof):
        if prof.visited[path] < 0:
            return Membership(False, path, prof.visited[path])
    if prof.unresolved:
        P, h = prof.unresolved[0]
        raise ExtensionFactorizationUnsupported(P.field, h)
    return Membership(True)


def _preorder(prof: ValueProfile) -> list[PointPath]:
    return sorted(prof.visited, key=lambda p: p.sort_key())


def jacobson_witness(f: Poly2, d: int) -> bool:
    """Check v_V(f) >= 1 at every divisor of level <= d."""
    if not f:
        raise ZeroPolynomial()
    if f.ord() == 0:
        raise UnitElement(f)
    prof = _walk(f, Poly2.const(f.field, 1), d)
    if prof.unresolved:
        P, h = prof.unresolved[0]
        raise ExtensionFactorizationUnsupported(P.field, h)
    # generic values are coefficient * v(E) with v(E) >= 1
    return (all(v >= 1 for v in prof.visited.values())
            and all(c >= 1 for c in prof.generic.values()))


class MaxIdealKind(Enum):
    FINITELY_GENERATED = "finitely-generated"
    NOT_FINITELY_GENERATED = "not-finitely-generated"

    def __str__(self):
        return self.value


def classify_max_ideal(V, d: int) -> MaxIdealKind:
    """The maximal ideal of V in A(Div_d) is finitely generated iff V is isolated."""
    level = as_path(V).depth + 1
    if d < 1:
        raise ValueError("level bound must be >= 1")
    if level > d:
        raise LevelExceedsBound(level, d)
    if level == d:
        return MaxIdealKind.FINITELY_GENERATED
    return MaxIdealKind.NOT_FINITELY_GENERATED
