"""Recursive-descent parser for polynomial expressions.

Grammar: integers, rational literals a/b, variable names [A-Za-z][A-Za-z0-9_']*,
operators + - * ^, parentheses.  '*' is mandatory between factors, '^' binds
tightest and takes a nonnegative integer exponent, unary minus is allowed at
the start of an expression or term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Polynomial
from .ring import RingCtx

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_']*)
  | (?P<op>[-+*^/()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingCtx):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    # expr := ['-'] term { ('+'|'-') term }
    def expr(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result - rhs if value == "-" else result + rhs
            else:
                return result

    # term := ['-'] factor { '*' factor }
    def term(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value == "-":
            self.advance()
            negate = True
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.factor()
            else:
                return -result if negate else result

    # factor := atom ['^' exponent]
    def factor(self) -> Polynomial:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        kind, value, pos = self.peek()
        if kind == "int":
            self.advance()
            return int(value)
        if kind == "op" and value == "(":
            self.advance()
            sign = 1
            kind, value, pos = self.peek()
            if kind == "op" and value == "-":
                self.advance()
                sign = -1
            kind, value, pos = self.peek()
            if kind != "int":
                raise ParseError("non-integer exponent", pos)
            self.advance()
            kind2, value2, pos2 = self.peek()
            if kind2 == "op" and value2 == "/":
                raise ParseError("non-integer exponent", pos2)
            self.expect_op(")")
            if sign < 0:
                raise ParseError("negative exponent", pos)
            return int(value)
        if kind == "name":
            raise ParseError("non-integer exponent", pos)
        raise ParseError("expected an integer exponent", pos)

    # atom := INT ['/' INT] | NAME | '(' expr ')'
    def atom(self) -> Polynomial:
        kind, value, pos = self.advance()
        if kind == "int":
            num = int(value)
            kind2, value2, _ = self.peek()
            if kind2 == "op" and value2 == "/":
                self.advance()
                kind3, value3, pos3 = self.peek()
                if kind3 != "int":
                    raise ParseError("expected an integer denominator", pos3)
                self.advance()
                den = int(value3)
                if den == 0:
                    raise ParseError("zero denominator", pos3)
                return Polynomial.constant(self.ring, Fraction(num, den))
            return Polynomial.constant(self.ring, num)
        if kind == "name":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(self.ring, value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str, ring: RingCtx) -> Polynomial:
    """Parse an expression string into a polynomial over `ring`."""
    p = _Parser(text, ring)
    result = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing input {value!r}", pos)
    return result
