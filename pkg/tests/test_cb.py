import random

import pytest

from adk.cb import (branch_limit, branch_tail, cb_rank, cb_report, children, derivative,
                    difference, equivalent, is_limit_of_branch, isolated_points,
                    limits_are_divisors, parse_expr, prufer_conditions, single, slice_)
from adk.errors import ParseError
from adk.field import QQ
from adk.tree import INFINITY, Center, PointPath, parse_path
from cb_oracle import (CATALOG, branch_is_limit, has_node, node_is_limit, random_terms,
                       render, universe)

ROOT = PointPath(QQ)
ZERO = Center(QQ(0))


def E(text):
    return parse_expr(text, QQ)


def node_path(n):
    return parse_path("[" + ", ".join(n) + "]", QQ)


def test_derivative_examples():
    assert equivalent(derivative(slice_(ROOT, 1)), single(ROOT))
    assert equivalent(derivative(children(ROOT)), single(ROOT))
    assert equivalent(derivative(branch_tail(ROOT, [ZERO])), branch_limit(ROOT, [ZERO]))
    for X in (single(ROOT), single(parse_path("[0, inf]", QQ)), branch_limit(ROOT, [ZERO])):
        assert derivative(X).is_empty()


def test_rank_examples():
    assert cb_rank(single(ROOT)) == 1
    assert cb_rank(E('branchtail("[]", period=[0]) + children("[]")')) == 2
    rep = cb_report(E('branchtail("[]", period=[0]) + children("[]")'))
    assert equivalent(rep.chain[1], E('single("[]") + branchlimit("[]", period=[0])'))
    for d in range(1, 7):
        rep = cb_report(slice_(ROOT, d - 1))
        assert rep.rank == d
        assert equivalent(rep.chain[d - 1], single(ROOT))


def test_isolated_examples():
    assert equivalent(isolated_points(slice_(ROOT, 1)), children(ROOT))
    assert str(isolated_points(slice_(ROOT, 1))) == 'children("[]")'
    assert equivalent(isolated_points(single(ROOT)), single(ROOT))
    assert equivalent(isolated_points(children(ROOT)), children(ROOT))


def test_limits_are_divisors_examples():
    assert limits_are_divisors(slice_(ROOT, 2))
    assert not limits_are_divisors(branch_tail(ROOT, [ZERO]))
    assert limits_are_divisors(branch_limit(ROOT, [ZERO]))


def test_is_limit_of_branch_examples():
    assert is_limit_of_branch(ROOT, [ZERO], branch_tail(ROOT, [ZERO]))
    assert not is_limit_of_branch(ROOT, [ZERO], slice_(ROOT, 3))
    assert not is_limit_of_branch(ROOT, [ZERO], branch_limit(ROOT, [ZERO]))


def test_syntax():
    assert str(E("slice([],2)")) == 'slice("[]", 2)'
    assert str(E('single("[0,inf]")')) == 'single("[0, inf]")'
    assert str(E('children("[]", exclude=[0])')) == 'children("[]", exclude=[0])'
    assert str(E('branchtail("[]", period=[0, 0])')) == 'branchtail("[]", period=[0])'
    assert str(E('branchtail("[0]", period=[0])')) == 'branchtail("[]", period=[0])'
    assert str(E("empty")) == "empty"
    for bad in ['slice("[]")', 'nothing("[]")', 'single("[0")', 'slice("[]", two)']:
        with pytest.raises(ParseError):
            E(bad)


@pytest.mark.parametrize("text", CATALOG)
def test_render_roundtrip(text):
    X = E(text)
    assert equivalent(E(str(X)), X)
    assert str(E(str(X))) == str(X)


def _check_against_oracle(terms):
    X = E(render(terms))
    D = derivative(X)
    iso = isolated_points(X)
    for n in universe(4):
        p = node_path(n)
        assert X.contains_node(p) == has_node(terms, n), (render(terms), n)
        assert D.contains_node(p) == node_is_limit(terms, n), (render(terms), n)
        assert iso.contains_node(p) == (has_node(terms, n) and not node_is_limit(terms, n))
    for t in terms:
        if t[0] in ("tail", "limit"):
            prefix, period = node_path(t[1]), node_path(t[1] + t[2]).centers[len(t[1]):]
            expected = branch_is_limit(terms, t[1], t[2])
            assert D.contains_limit(prefix, period) == expected, (render(terms), t)
            assert is_limit_of_branch(prefix, period, X) == expected


def test_derivative_matches_term_model():
    rng = random.Random(1)
    for _ in range(150):
        _check_against_oracle(random_terms(rng))


def test_derivative_distributes_over_union():
    rng = random.Random(2)
    for _ in range(50):
        A, B = E(render(random_terms(rng))), E(render(random_terms(rng)))
        assert equivalent(derivative(A | B), derivative(A) | derivative(B))


def test_difference_is_exact():
    rng = random.Random(3)
    for _ in range(100):
        ta, tb = random_terms(rng), random_terms(rng)
        A, B = E(render(ta)), E(render(tb))
        C = difference(A, B)
        for n in universe(3):
            assert C.contains_node(node_path(n)) == (has_node(ta, n) and not has_node(tb, n))


@pytest.mark.parametrize("text", CATALOG)
def test_scattered(text):
    rep = cb_report(E(text))
    assert rep.scattered
    for Y, I in zip(rep.chain, rep.isolated):
        if not Y.is_empty():
            assert not I.is_empty()
    assert derivative(rep.chain[-1]).is_empty()


@pytest.mark.parametrize("text", CATALOG)
def test_prufer_conditions_agree(text):
    c1, c2 = prufer_conditions(E(text))
    assert c1 == c2


def test_random_prufer_conditions_agree():
    rng = random.Random(4)
    for _ in range(200):
        c1, c2 = prufer_conditions(E(render(random_terms(rng))))
        assert c1 == c2


def test_json_report():
    data = cb_report(E("slice([],2)")).to_json()
    assert data["rank"] == 3 and data["scattered"]
    assert data["chain"] == ['slice("[]", 2)', 'slice("[]", 1)', 'single("[]")', "empty"]
