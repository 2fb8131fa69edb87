"""Recursive descent evaluator for the polynomial input grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nonneg-int)?
    base   := name | integer | integer '/' integer | '(' expr ')'

The parser does not build a tree; it evaluates directly into whatever ring
the caller supplies through ``variables`` and ``constant``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Mapping

from .errors import NonIntegerExponent, ParseError, UnknownVariable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(text, m.start(3), "an operator, number or variable")
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables, constant):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = variables
        self.constant = constant

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, expected):
        raise ParseError(self.text, self.tok[2], expected)

    def accept(self, op):
        if self.tok[0] == "op" and self.tok[1] == op:
            self.i += 1
            return True
        return False

    def expr(self):
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.accept("*"):
            value = value * self.factor()
        return value

    def factor(self):
        value = self.base()
        if self.accept("^"):
            kind, text, pos = self.tok
            if kind == "int":
                self.i += 1
                if self.tok[0] == "op" and self.tok[1] == "/":
                    raise NonIntegerExponent(self.text, pos)
                return value ** int(text)
            if kind == "name" or (kind == "op" and text == "("):
                raise NonIntegerExponent(self.text, pos)
            self.error("a nonnegative integer exponent")
        return value

    def base(self):
        kind, text, pos = self.tok
        if kind == "int":
            self.i += 1
            num = int(text)
            if self.accept("/"):
                if self.tok[0] != "int":
                    self.error("an integer denominator")
                den = int(self.tok[1])
                if den == 0:
                    self.error("a nonzero denominator")
                self.i += 1
                return self.constant(Fraction(num, den))
            return self.constant(Fraction(num))
        if kind == "name":
            if text not in self.variables:
                raise UnknownVariable(self.text, pos, text)
            self.i += 1
            return self.variables[text]
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                self.error("')'")
            return value
        self.error("a variable, number or '('")


def evaluate(text: str, variables: Mapping[str, Any],
             constant: Callable[[Fraction], Any]) -> Any:
    """Parse ``text`` and evaluate it in the ring defined by the callbacks."""
    p = _Parser(text, variables, constant)
    value = p.expr()
    if p.tok[0] != "eof":
        p.error("end of input or an operator")
    return value
