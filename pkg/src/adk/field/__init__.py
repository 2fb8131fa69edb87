"""Effective fields: exact arithmetic and, where possible, factorization."""

from ..errors import (ExtensionFactorizationUnsupported, FieldError,
                      ReducibleModulus)
from .base import (QQ, ExtensionField, Field, FieldElement, PrimeField,
                   RationalField)
from .factor import (conjugate_roots, factor_univariate, is_irreducible,
                     roots_in_field, supports_factorization)
from .univariate import UPoly, gcd, xgcd

__all__ = [
    "QQ", "ExtensionField", "Field", "FieldElement", "PrimeField", "RationalField",
    "UPoly", "gcd", "xgcd", "factor_univariate", "is_irreducible", "roots_in_field",
    "conjugate_roots", "make_extension", "parse_field", "FieldError",
    "ReducibleModulus", "ExtensionFactorizationUnsupported",
]


def make_extension(base: Field, g, assume_irreducible: bool = False) -> ExtensionField:
    """Build ``base[t]/(g)`` after checking that ``g`` is irreducible.

    ``g`` may be a ``UPoly`` over ``base`` or a string in the base's next
    generator name. Over extensions of Q irreducibility cannot be checked; pass
    ``assume_irreducible=True`` to proceed anyway (the result has
    ``verified=False``).
    """
    if isinstance(g, str):
        g = UPoly.parse(g, base)
    if g.field != base:
        g = g.over(base)
    if g.degree() < 2 or not g.is_monic():
        raise FieldError(f"modulus {g} must be monic of degree >= 2")
    if supports_factorization(base):
        facs = factor_univariate(g)
        if not (len(facs) == 1 and facs[0][1] == 1):
            raise ReducibleModulus(g, facs)
        return ExtensionField(base, g)
    if not assume_irreducible:
        raise ExtensionFactorizationUnsupported(base, g)
    return ExtensionField(base, g, verified=False)


def parse_field(text: str) -> Field:
    """Parse ``q``, ``fp:<p>`` or ``ext:<base>:<modulus in t>``."""
    text = text.strip()
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad prime in field spec {text!r}") from None
        return PrimeField(p)
    if text.startswith("ext:"):
        rest = text[4:]
        base_spec, sep, modulus = rest.rpartition(":")
        if not sep:
            raise FieldError(f"bad extension spec {text!r}")
        return make_extension(parse_field(base_spec), modulus)
    raise FieldError(f"unknown field spec {text!r}; use q, fp:<p> or ext:<base>:<modulus>")
