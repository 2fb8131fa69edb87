"""Cantor-Bendixson calculus on symbolic subsets of the quadratic tree.

Points are identified with their divisors, so a node of the tree is a point
of the patch space. Limits follow one modeling rule: a node S is a limit of X
iff infinitely many child subtrees of S meet X, and the valuation at the end
of an infinite branch is a limit iff every subtree along the branch meets X
in something other than itself.

Internally every set is a finite union of three term kinds:

* ``Region(S, lo, hi, holes)``: nodes below S at relative depth in
  [lo, hi], minus every node having a hole as prefix. ``single``,
  ``children``, ``slice`` and ``layer`` are special cases.
* ``Tail(branch, start)``: nodes of an eventually periodic branch at depth
  >= start.
* ``Limit(branch)``: the valuation at the end of the branch (not a divisor).

The class is closed under derivative and set difference, so equality of
denotations is decided exactly: A == B iff A - B and B - A are both empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

from .errors import ParseError
from .field import QQ, Field
from .tree import Center, PointPath, parse_path, split_top

Node = tuple  # tuple[Center, ...]


def _le(a: Node, b: Node) -> bool:
    """a is a prefix of b (or equal)."""
    return len(a) <= len(b) and b[:len(a)] == a


@dataclass(frozen=True)
class Branch:
    """The infinite center sequence prefix + period + period + ... in canonical form."""

    prefix: Node
    period: Node

    @classmethod
    def make(cls, prefix: Iterable[Center], period: Iterable[Center]) -> "Branch":
        prefix, period = tuple(prefix), tuple(period)
        if not period:
            raise ValueError("a branch needs a nonempty period")
        n = len(period)
        for r in range(1, n + 1):
            if n % r == 0 and period[:r] * (n // r) == period:
                period = period[:r]
                break
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = (period[-1],) + period[:-1]
        return cls(prefix, period)

    def at(self, i: int) -> Center:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def node(self, depth: int) -> Node:
        return tuple(self.at(i) for i in range(depth))

    def passes(self, n: Node) -> bool:
        return all(n[i] == self.at(i) for i in range(len(n)))

    def divergence(self, other: "Branch") -> int | None:
        """First index where the sequences differ; None when they coincide."""
        bound = max(len(self.prefix), len(other.prefix)) + lcm(len(self.period), len(other.period))
        for i in range(bound):
            if self.at(i) != other.at(i):
                return i
        return None


@dataclass(frozen=True)
class Region:
    node: Node
    lo: int
    hi: int
    holes: frozenset = frozenset()

    def depths(self) -> tuple[int, int]:
        return len(self.node) + self.lo, len(self.node) + self.hi


@dataclass(frozen=True)
class Tail:
    branch: Branch
    start: int = 0


@dataclass(frozen=True)
class Limit:
    branch: Branch


def _region(node: Node, lo: int, hi: int, holes=()) -> list:
    lo = max(lo, 0)
    if lo > hi:
        return []
    deepest = len(node) + hi
    keep = []
    for h in holes:
        if _le(h, node):
            return []
        if _le(node, h) and len(h) <= deepest:
            keep.append(h)
    keep = [h for h in keep if not any(o != h and _le(o, h) for o in keep)]
    return [Region(node, lo, hi, frozenset(keep))]


def _single(node: Node) -> Region:
    return Region(node, 0, 0, frozenset())


# --- membership ----------------------------------------------------------------

def _has_node(term, n: Node) -> bool:
    if isinstance(term, Region):
        if not _le(term.node, n):
            return False
        r = len(n) - len(term.node)
        return term.lo <= r <= term.hi and not any(_le(h, n) for h in term.holes)
    if isinstance(term, Tail):
        return len(n) >= term.start and term.branch.passes(n)
    return False


# --- difference ------------------------------------------------------------------

def _remove_node(r: Region, n: Node) -> list:
    S = r.node
    return (_region(S, r.lo, r.hi, r.holes | {n})
            + _region(n, max(1, len(S) + r.lo - len(n)), len(S) + r.hi - len(n), r.holes))


def _region_minus_region(r: Region, s: Region) -> list:
    S, T = r.node, s.node
    a0, a1 = r.depths()
    b0, b1 = s.depths()
    i0, i1 = max(a0, b0), min(a1, b1)
    if i0 > i1 or not (_le(S, T) or _le(T, S)):
        return [r]
    if _le(T, S):
        if any(_le(h2, S) for h2 in s.holes):
            return [r]
    elif any(_le(h, T) for h in r.holes):
        return [r]
    out = []
    if a0 < i0:
        out += _region(S, r.lo, i0 - 1 - len(S), r.holes)
    if i1 < a1:
        out += _region(S, i1 + 1 - len(S), r.hi, r.holes)
    if _le(T, S):
        # inside the overlap only the parts of r hidden by holes of s survive
        for h2 in s.holes:
            if _le(S, h2):
                out += _region(h2, i0 - len(h2), i1 - len(h2), r.holes)
    else:
        out += _region(S, i0 - len(S), i1 - len(S), r.holes | {T})
        for h2 in s.holes:
            out += _region(h2, i0 - len(h2), i1 - len(h2), r.holes)
    return out


def _tail_minus_depths(t: Tail, depths: set[int]) -> list:
    if not depths:
        return [t]
    top = max(depths)
    out = [_single(t.branch.node(D)) for D in range(t.start, top + 1) if D not in depths]
    return out + [Tail(t.branch, top + 1)]


def _diff_term(t, u) -> list:
    if isinstance(t, Limit):
        return [] if isinstance(u, Limit) and u.branch == t.branch else [t]
    if isinstance(u, Limit):
        return [t]
    if isinstance(t, Region):
        if isinstance(u, Region):
            return _region_minus_region(t, u)
        a0, a1 = t.depths()
        pieces = [t]
        for D in range(max(a0, u.start), a1 + 1):
            n = u.branch.node(D)
            nxt = []
            for p in pieces:
                nxt += _remove_node(p, n) if _has_node(p, n) else [p]
            pieces = nxt
        return pieces
    # t is a Tail
    if isinstance(u, Region):
        a0, a1 = u.depths()
        gone = {D for D in range(max(a0, t.start), a1 + 1) if _has_node(u, t.branch.node(D))}
        return _tail_minus_depths(t, gone)
    i0 = t.branch.divergence(u.branch)
    if i0 is None:
        return [_single(t.branch.node(D)) for D in range(t.start, u.start)]
    return _tail_minus_depths(t, set(range(max(t.start, u.start), i0 + 1)))


def _diff_terms(terms: Iterable, others: Iterable) -> list:
    pieces = list(terms)
    for u in others:
        nxt = []
        for p in pieces:
            nxt += _diff_term(p, u)
        pieces = nxt
    return pieces


# --- simplification -----------------------------------------------------------

def _term_key(t):
    if isinstance(t, Region):
        return (0, len(t.node), [c.sort_key() for c in t.node], t.lo, t.hi,
                sorted([c.sort_key() for c in h] for h in t.holes))
    if isinstance(t, Tail):
        return (1, [c.sort_key() for c in t.branch.prefix],
                [c.sort_key() for c in t.branch.period], t.start)
    return (2, [c.sort_key() for c in t.branch.prefix], [c.sort_key() for c in t.branch.period])


def _simplify(terms: Iterable) -> tuple:
    terms = list(dict.fromkeys(terms))
    changed = True
    while changed:
        changed = False
        # drop terms covered by the others, smallest first
        for t in sorted(terms, key=_term_key, reverse=True):
            rest = [u for u in terms if u != t]
            if not _diff_terms([t], rest):
                terms = rest
                changed = True
        # grow terms into pieces the others already cover
        for idx, t in enumerate(terms):
            rest = terms[:idx] + terms[idx + 1:]
            grown = None
            if isinstance(t, Region):
                a0, a1 = t.depths()
                for h in sorted(t.holes, key=lambda n: [c.sort_key() for c in n]):
                    piece = _region(h, a0 - len(h), a1 - len(h), t.holes - {h})
                    if not _diff_terms(piece, rest):
                        grown = Region(t.node, t.lo, t.hi, t.holes - {h})
                        break
                if grown is None and t.lo > 0:
                    piece = _region(t.node, t.lo - 1, t.lo - 1, t.holes)
                    if not _diff_terms(piece, rest):
                        grown = _region(t.node, t.lo - 1, t.hi, t.holes)[0]
                if grown is None:
                    piece = _region(t.node, t.hi + 1, t.hi + 1, t.holes)
                    if not _diff_terms(piece, rest):
                        grown = _region(t.node, t.lo, t.hi + 1, t.holes)[0]
            elif isinstance(t, Tail) and t.start > 0:
                if not _diff_terms([_single(t.branch.node(t.start - 1))], rest):
                    grown = Tail(t.branch, t.start - 1)
            if grown is not None:
                terms = rest + [grown]
                changed = True
                break
    return tuple(sorted(terms, key=_term_key))


# --- public expression type ---------------------------------------------------

class TreeSetExpr:
    """A finite union of symbolic terms; ``field`` only matters for rendering."""

    def __init__(self, terms: Iterable = (), field: Field = QQ):
        self.field = field
        self.terms = _simplify(terms)

    def __or__(self, other: "TreeSetExpr") -> "TreeSetExpr":
        return TreeSetExpr(self.terms + other.terms, self.field)

    __add__ = __or__

    def __sub__(self, other: "TreeSetExpr") -> "TreeSetExpr":
        return difference(self, other)

    def is_empty(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def contains_node(self, point) -> bool:
        n = _as_node(point)
        return any(_has_node(t, n) for t in self.terms)

    def contains_limit(self, prefix, period) -> bool:
        b = Branch.make(_as_node(prefix), _as_node(period))
        return Limit(b) in self.terms

    def __eq__(self, other):
        return (isinstance(other, TreeSetExpr)
                and frozenset(self.terms) == frozenset(other.terms))

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"TreeSetExpr({render(self)!r})"


def _as_node(obj) -> Node:
    if isinstance(obj, PointPath):
        return obj.centers
    return tuple(obj)


def single(point, field: Field | None = None) -> TreeSetExpr:
    return TreeSetExpr([_single(_as_node(point))], _field_of(point, field))


def children(point, excluded: Iterable[Center] = (), field: Field | None = None) -> TreeSetExpr:
    n = _as_node(point)
    return TreeSetExpr(_region(n, 1, 1, {n + (c,) for c in excluded}), _field_of(point, field))


def slice_(point, k: int, field: Field | None = None) -> TreeSetExpr:
    if k < 0:
        raise ValueError("slice depth must be >= 0")
    return TreeSetExpr(_region(_as_node(point), 0, k), _field_of(point, field))


def layer(point, k: int, field: Field | None = None) -> TreeSetExpr:
    return TreeSetExpr(_region(_as_node(point), k, k), _field_of(point, field))


def region(point, lo: int, hi: int, holes=(), field: Field | None = None) -> TreeSetExpr:
    return TreeSetExpr(_region(_as_node(point), lo, hi, {_as_node(h) for h in holes}),
                       _field_of(point, field))


def branch_tail(prefix, period, start: int = 0, field: Field | None = None) -> TreeSetExpr:
    b = Branch.make(_as_node(prefix), _as_node(period))
    return TreeSetExpr([Tail(b, start)], _field_of(prefix, field))


def branch_limit(prefix, period, field: Field | None = None) -> TreeSetExpr:
    b = Branch.make(_as_node(prefix), _as_node(period))
    return TreeSetExpr([Limit(b)], _field_of(prefix, field))


def empty(field: Field = QQ) -> TreeSetExpr:
    return TreeSetExpr((), field)


def _field_of(point, field):
    if field is not None:
        return field
    return point.base if isinstance(point, PointPath) else QQ


# --- operations ----------------------------------------------------------------

def _derive_term(t) -> list:
    if isinstance(t, Region):
        return _region(t.node, 0, t.hi - 1, t.holes) if t.hi >= 1 else []
    if isinstance(t, Tail):
        return [Limit(t.branch)]
    return []


def derivative(X: TreeSetExpr) -> TreeSetExpr:
    """The set of limit points of X."""
    return TreeSetExpr([u for t in X.terms for u in _derive_term(t)], X.field)


def difference(X: TreeSetExpr, Y: TreeSetExpr) -> TreeSetExpr:
    return TreeSetExpr(_diff_terms(X.terms, Y.terms), X.field)


def equivalent(X: TreeSetExpr, Y: TreeSetExpr) -> bool:
    """Do X and Y denote the same set?"""
    return not _diff_terms(X.terms, Y.terms) and not _diff_terms(Y.terms, X.terms)


def subset(X: TreeSetExpr, Y: TreeSetExpr) -> bool:
    return not _diff_terms(X.terms, Y.terms)


def isolated_points(X: TreeSetExpr) -> TreeSetExpr:
    return difference(X, derivative(X))


@dataclass
class CBReport:
    chain: list[TreeSetExpr]
    rank: int
    scattered: bool
    isolated: list[TreeSetExpr]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "scattered": self.scattered,
            "chain": [str(x) for x in self.chain],
            "isolated": [str(x) for x in self.isolated],
        }


def cb_report(X: TreeSetExpr, max_steps: int = 10_000) -> CBReport:
    """Iterate the derivative until it is stationary.

    ``scattered`` certifies that every nonempty stage has an isolated point.
    """
    chain = [X]
    for _ in range(max_steps):
        nxt = derivative(chain[-1])
        if equivalent(nxt, chain[-1]):
            break
        chain.append(nxt)
    else:
        raise RuntimeError("derivative chain did not stabilize")
    isolated = [isolated_points(Y) for Y in chain]
    scattered = all(bool(I) for Y, I in zip(chain, isolated) if Y)
    return CBReport(chain, len(chain) - 1, scattered, isolated)


def cb_rank(X: TreeSetExpr) -> int:
    return cb_report(X).rank


# --- branch criteria ----------------------------------------------------------

def _count_below(t, n: Node, skip: Branch | None = None) -> int:
    """|X(n) meet t|, capped at 2."""
    if isinstance(t, Region):
        if _le(n, t.node):
            return 1 if t.hi == 0 else 2
        if not _le(t.node, n) or any(_le(h, n) for h in t.holes):
            return 0
        rn = len(n) - len(t.node)
        piece = _region(n, t.lo - rn, t.hi - rn, t.holes)
        if not piece:
            return 0
        return 1 if piece[0].hi == 0 else 2
    if isinstance(t, Tail):
        return 2 if t.branch.passes(n) else 0
    if t.branch == skip:
        return 0
    return 1 if t.branch.passes(n) else 0


def _stable_depth(X: TreeSetExpr, b: Branch) -> int:
    bound = 0
    for t in X.terms:
        if isinstance(t, Region):
            bound = max(bound, t.depths()[1] + 1)
        else:
            i0 = b.divergence(t.branch)
            if i0 is not None:
                bound = max(bound, i0 + 1)
            if isinstance(t, Tail):
                bound = max(bound, t.start)
    return bound


def is_limit_of_branch(prefix, period, X: TreeSetExpr) -> bool:
    """Is the end of the branch a limit of X? Every X(R_i) must meet X minus the end."""
    b = Branch.make(_as_node(prefix), _as_node(period))
    for i in range(_stable_depth(X, b) + 1):
        n = b.node(i)
        if sum(_count_below(t, n, skip=b) for t in X.terms) == 0:
            return False
    # past the stable depth only tails along b contribute, identically at every depth
    return True


def _branch_isolated(X: TreeSetExpr, b: Branch) -> bool:
    """Some X(R_i) along b meets X in at most one point."""
    for i in range(_stable_depth(X, b) + 1):
        if min(2, sum(_count_below(t, b.node(i)) for t in X.terms)) <= 1:
            return True
    return False


def prufer_conditions(X: TreeSetExpr) -> tuple[bool, bool]:
    """(limits are all divisors, every branch eventually meets X at most once).

    Only branches named by tail or limit terms can fail the second test: any
    other branch leaves every region (bounded depth) and diverges from every
    named branch, so deep enough subtrees along it miss X entirely.
    """
    cond1 = not any(isinstance(t, Limit) for t in derivative(X).terms)
    branches = {t.branch for t in X.terms if not isinstance(t, Region)}
    cond2 = all(_branch_isolated(X, b) for b in branches)
    return cond1, cond2


def limits_are_divisors(X: TreeSetExpr) -> bool:
    cond1, cond2 = prufer_conditions(X)
    if cond1 != cond2:
        raise AssertionError(f"limit criteria disagree on {X}")
    return cond1


# --- syntax -------------------------------------------------------------------

def _path_str(field: Field, node: Node) -> str:
    return str(PointPath(field, node))


def _centers_str(field: Field, base: Node, extra: Node) -> str:
    p = PointPath(field, base + extra)
    return "[" + ", ".join(p.render_center(k) for k in range(len(base), len(p))) + "]"


def _render_term(t, F: Field) -> str:
    if isinstance(t, Region):
        S = _path_str(F, t.node)
        if t.lo == 0 and t.hi == 0:
            return f'single("{S}")'
        if t.lo == 1 and t.hi == 1 and all(len(h) == len(t.node) + 1 for h in t.holes):
            if not t.holes:
                return f'children("{S}")'
            ex = tuple(sorted((h[-1] for h in t.holes), key=Center.sort_key))
            inner = ", ".join(PointPath(F, t.node + (c,)).render_center(len(t.node)) for c in ex)
            return f'children("{S}", exclude=[{inner}])'
        if not t.holes and t.lo == 0:
            return f'slice("{S}", {t.hi})'
        if not t.holes and t.lo == t.hi:
            return f'layer("{S}", {t.hi})'
        holes = ", ".join(f'"{_path_str(F, h)}"'
                          for h in sorted(t.holes, key=lambda n: [c.sort_key() for c in n]))
        return f'region("{S}", {t.lo}, {t.hi}, holes=[{holes}])'
    b = t.branch
    P = _path_str(F, b.prefix)
    per = _centers_str(F, b.prefix, b.period)
    if isinstance(t, Tail):
        if t.start:
            return f'branchtail("{P}", period={per}, start={t.start})'
        return f'branchtail("{P}", period={per})'
    return f'branchlimit("{P}", period={per})'


def render(X: TreeSetExpr) -> str:
    if not X.terms:
        return "empty"
    return " + ".join(_render_term(t, X.field) for t in X.terms)


def _unquote(s: str) -> str:
    s = s.strip()
    if len(s) >= 2 and s[0] == s[-1] and s[0] in "\"'":
        return s[1:-1]
    return s


def _parse_term(text: str, field: Field) -> TreeSetExpr:
    s = text.strip()
    name, paren, rest = s.partition("(")
    name = name.strip()
    if not paren or not rest.endswith(")"):
        raise ParseError(text, 0, "a term such as slice(\"[]\", 2)")
    pos, kw = [], {}
    body = rest[:-1].strip()
    for arg in (split_top(body) if body else []):
        key, eq, value = arg.partition("=")
        if eq and key.strip().isidentifier() and not key.strip().startswith(("\"", "'", "[")):
            kw[key.strip()] = value.strip()
        else:
            pos.append(arg)

    def path(a):
        return parse_path(_unquote(a), field)

    def integer(a):
        try:
            return int(a)
        except ValueError:
            raise ParseError(text, 0, f"an integer, not {a!r}") from None

    def relative(base: PointPath, a: str) -> Node:
        return parse_path(_unquote(a), field, start=base).centers[len(base):]

    try:
        if name == "single":
            return single(path(pos[0]), field)
        if name == "children":
            p = path(pos[0])
            ex = relative(p, kw["exclude"]) if "exclude" in kw else ()
            return TreeSetExpr(_region(p.centers, 1, 1, {p.centers + (c,) for c in ex}), field)
        if name == "slice":
            return slice_(path(pos[0]), integer(pos[1]), field)
        if name == "layer":
            return layer(path(pos[0]), integer(pos[1]), field)
        if name == "region":
            p = path(pos[0])
            holes = []
            if "holes" in kw:
                inner = kw["holes"].strip()[1:-1].strip()
                holes = [path(h) for h in split_top(inner)] if inner else []
            return region(p, integer(pos[1]), integer(pos[2]), holes, field)
        if name in ("branchtail", "branchlimit"):
            p = path(pos[0])
            per = relative(p, kw["period"] if "period" in kw else pos[1])
            if name == "branchlimit":
                return branch_limit(p, per, field)
            return branch_tail(p, per, integer(kw.get("start", "0")), field)
    except (IndexError, KeyError):
        raise ParseError(text, 0, f"the arguments of {name}") from None
    raise ParseError(text, 0, "single, children, slice, layer, region, branchtail or branchlimit")


def parse_expr(text: str, field: Field = QQ) -> TreeSetExpr:
    """Parse a union of terms joined by ``+``; ``empty`` is the empty set."""
    s = text.strip()
    if s in ("empty", ""):
        return empty(field)
    out = empty(field)
    for part in split_top(s, "+"):
        if part != "empty":
            out = out | _parse_term(part, field)
    return out
