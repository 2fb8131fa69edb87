import itertools
import random
from fractions import Fraction

import pytest

from adk.errors import ExtensionFactorizationUnsupported, ReducibleModulus, ZeroPolynomial
from adk.field import (QQ, PrimeField, UPoly, conjugate_roots, factor_univariate, gcd,
                       is_irreducible, make_extension, parse_field, roots_in_field, xgcd)

F2, F3, F5, F7 = (PrimeField(p) for p in (2, 3, 5, 7))
Q_SQRT2 = make_extension(QQ, "t^2 - 2")
F49 = make_extension(F7, "t^2 + 1")
CATALOG = [QQ, F5, F49, Q_SQRT2]


def up(text, F):
    return UPoly.parse(text, F)


def product(factors, F):
    out = UPoly.const(F, 1)
    for g, e in factors:
        out = out * g ** e
    return out


@pytest.mark.parametrize("F", CATALOG, ids=lambda F: F.spec())
def test_field_axioms(F):
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (F.random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == F.zero
        if a != F.zero:
            assert a * a.inverse() == F.one


def test_prime_field_rejects_composite():
    with pytest.raises(Exception):
        PrimeField(6)


def test_canonical_rationals():
    assert QQ(Fraction(4, -6)).raw == Fraction(-2, 3)
    assert QQ.parse("4/6") == QQ(Fraction(2, 3))


def test_factor_examples():
    assert set(factor_univariate(up("t^2 - 1", QQ))) == {(up("t - 1", QQ), 1), (up("t + 1", QQ), 1)}
    assert set(factor_univariate(up("t^2 + 1", F5))) == {(up("t + 2", F5), 1), (up("t - 2", F5), 1)}
    assert factor_univariate(up("t^2 - 2", QQ)) == [(up("t^2 - 2", QQ), 1)]


def test_factor_errors():
    with pytest.raises(ExtensionFactorizationUnsupported):
        factor_univariate(UPoly.parse("t2^2 - 3", Q_SQRT2))
    with pytest.raises(ZeroPolynomial):
        factor_univariate(UPoly(QQ, ()))


def test_make_extension_examples():
    K = make_extension(F5, "t^2 + 2")
    assert len(list(K.elements())) == 25
    assert K.gen ** 2 == K(-2)
    assert Q_SQRT2.gen ** 2 == Q_SQRT2(2)
    with pytest.raises(ReducibleModulus):
        make_extension(F2, "t^2")


def test_unverified_extension_over_q_extension():
    with pytest.raises(ExtensionFactorizationUnsupported):
        make_extension(Q_SQRT2, "t2^2 - 3")
    K = make_extension(Q_SQRT2, "t2^2 - 3", assume_irreducible=True)
    assert not K.verified
    assert K.gen ** 2 == K(3)


def test_parse_field_specs():
    assert parse_field("q") == QQ
    assert parse_field("fp:7") == F7
    K = parse_field("ext:fp:5:t^2+2")
    assert K.spec() == "ext:fp:5:t^2+2"
    assert parse_field(K.spec()) == K


def _monic_polys(F, deg):
    elems = list(F.elements())
    for tail in itertools.product(elems, repeat=deg):
        yield UPoly.from_elements(F, list(tail) + [F.one])


def _brute_irreducible(g):
    # no monic factor of degree <= deg/2 divides g
    F = g.field
    return not any(not (g % h) for d in range(1, g.degree() // 2 + 1) for h in _monic_polys(F, d))


@pytest.mark.parametrize("F", [QQ, F5], ids=["q", "fp5"])
def test_factor_remultiplies(F):
    rng = random.Random(3)
    for _ in range(100):
        deg = rng.randint(1, 6)
        f = UPoly.from_elements(F, [F.random_element(rng) for _ in range(deg)] + [F(rng.choice([1, 2, 3]))])
        facs = factor_univariate(f)
        assert product(facs, F) == f.monic()
        assert len({g for g, _ in facs}) == len(facs)
        for g, _ in facs:
            assert g.is_monic()
            if F == F5 and g.degree() <= 4:
                assert _brute_irreducible(g)


def test_rational_factors_match_sympy():
    import sympy
    t = sympy.Symbol("t")
    rng = random.Random(5)
    for _ in range(30):
        coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))] + [1]
        f = UPoly.from_elements(QQ, [QQ(c) for c in coeffs])
        expected = sympy.factor_list(sum(c * t ** i for i, c in enumerate(coeffs)))[1]
        assert sorted(g.degree() for g, _ in factor_univariate(f) for _ in range(_)) == \
            sorted(sympy.degree(g, t) for g, e in expected for _ in range(e))


def _exhaustive_root_multiplicities(f):
    K = f.field
    total = 0
    for r in K.elements():
        g = f
        lin = UPoly.from_elements(K, [-r, K.one])
        while g.degree() > 0 and not g(r):
            g = g // lin
            total += 1
    return total


def test_splits_after_two_extensions():
    rng = random.Random(8)
    for _ in range(25):
        deg = rng.randint(1, 4)
        f = UPoly.from_elements(F3, [F3.random_element(rng) for _ in range(deg)] + [F3.one])
        K = F3
        for _ in range(2):
            g = next((g for g, _ in factor_univariate(f.over(K)) if g.degree() > 1), None)
            if g is None:
                break
            K = make_extension(K, g)
        assert _exhaustive_root_multiplicities(f.over(K)) == deg


def test_xgcd_and_gcd():
    a, b = up("t^3 - 1", QQ), up("t^2 - 1", QQ)
    g, s, t = xgcd(a, b)
    assert g == up("t - 1", QQ) == gcd(a, b)
    assert s * a + t * b == g


def test_roots_and_conjugates():
    assert sorted(int(r.raw) for r in roots_in_field(up("t^2 + 1", F5))) == [2, 3]
    K = make_extension(F5, "t^2 + 2")
    roots = conjugate_roots(K)
    assert roots[0] == K.gen and len(roots) == 2
    assert all(not K.modulus.over(K)(r) for r in roots)
    assert conjugate_roots(Q_SQRT2) == [Q_SQRT2.gen, -Q_SQRT2.gen]


def test_is_irreducible():
    assert is_irreducible(up("t^2 - 2", QQ))
    assert not is_irreducible(up("t^2 + 1", F5))
