"""Exception hierarchy shared by every module of the package."""


class AdkError(Exception):
    """Base class for all domain errors raised by adk."""


class FieldError(AdkError):
    pass


class ZeroPolynomial(AdkError, ValueError):
    """Raised when an operation needs a nonzero polynomial."""

    def __init__(self, what="polynomial"):
        super().__init__(f"{what} must be nonzero")


class UnitElement(AdkError, ValueError):
    """Raised when an element of the maximal ideal was expected but a unit was given."""

    def __init__(self, f):
        self.poly = f
        super().__init__(f"{f} is a unit at the origin (order 0)")


class ExtensionFactorizationUnsupported(AdkError):
    """Factorization over an extension of Q is not available."""

    def __init__(self, field, f):
        self.field = field
        self.poly = f
        super().__init__(f"cannot factor {f} over {field.spec()}: "
                         "factorization over extensions of Q is unsupported")


class ReducibleModulus(FieldError):
    def __init__(self, g, factors):
        self.modulus = g
        self.factors = factors
        super().__init__(f"modulus {g} is reducible")


class NotCoprime(AdkError, ValueError):
    def __init__(self, a, b):
        super().__init__(f"weights {a} and {b} are not coprime")


class AllGeneratorsZero(AdkError, ValueError):
    def __init__(self):
        super().__init__("at least one generator must be nonzero")


class MismatchedDivisorSets(AdkError, ValueError):
    def __init__(self):
        super().__init__("value vectors live over different divisor sets")


class LevelExceedsBound(AdkError, ValueError):
    def __init__(self, level, d):
        super().__init__(f"divisor level {level} exceeds the bound {d}")


class ParseError(AdkError):
    """Malformed input text; ``position`` is a 0-based character offset."""

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"at position {position}: expected {expected}\n"
                         f"  {text}\n  {' ' * position}^")


class NonIntegerExponent(ParseError):
    def __init__(self, text, position):
        super().__init__(text, position, "a nonnegative integer exponent")


class UnknownVariable(ParseError):
    def __init__(self, text, position, name):
        self.name = name
        ParseError.__init__(self, text, position, f"a known variable, not {name!r}")
