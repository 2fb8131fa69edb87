"""Exact divisorial valuations over k[x,y] localized at the origin."""

from .adomain import (FiniteDivisorSet, MaxIdealKind, Membership, ValueProfile,
                      ValueVector, classify_max_ideal, contains, decompose,
                      ideal_ops, ideal_values, jacobson_witness, member_bounded,
                      value_profile)
from .cb import (TreeSetExpr, cb_rank, cb_report, derivative, equivalent,
                 is_limit_of_branch, isolated_points, limits_are_divisors,
                 parse_expr)
from .errors import AdkError
from .field import QQ, PrimeField, make_extension, parse_field
from .poly import Poly2, gcd2, parse, pullback_total, strict_transform
from .tree import (INFINITY, Center, Finite, PointPath, PrimeDivisor,
                   monomial_path, parse_path)
from .valuation import Position, position, val, val_frac

__all__ = [
    "AdkError", "QQ", "PrimeField", "make_extension", "parse_field",
    "Poly2", "parse", "gcd2", "pullback_total", "strict_transform",
    "Center", "Finite", "INFINITY", "PointPath", "PrimeDivisor", "parse_path",
    "monomial_path", "val", "val_frac", "position", "Position",
    "FiniteDivisorSet", "ValueVector", "ValueProfile", "Membership", "MaxIdealKind",
    "ideal_values", "ideal_ops", "contains", "decompose", "value_profile",
    "member_bounded", "jacobson_witness", "classify_max_ideal",
    "TreeSetExpr", "parse_expr", "derivative", "isolated_points", "cb_rank",
    "cb_report", "equivalent", "limits_are_divisors", "is_limit_of_branch",
]
