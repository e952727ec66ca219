"""Recursive-descent parser for univariate polynomial expressions in ``x``.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | factor)*      # juxtaposition multiplies
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | 'x' | '(' expr ')'

Numbers are integers or decimals and are read exactly; ``10/3`` is an exact
division.  Juxtaposition (``2x``, ``(10/3)x^3``, ``(x-1)^3 (x+3)``) is
allowed before ``x`` and ``(``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .polycore import Poly, X

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            name = m.group(2)
            if name != "x":
                raise ParseError(f"unknown symbol {name!r}", start)
            tokens.append(("x", name, start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        t = self.tok
        if kind is not None and t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", t[2])
        self.i += 1
        return t

    def parse(self) -> Poly:
        p = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while True:
            kind = self.tok[0]
            if kind == "*":
                self.take()
                p = p * self.unary()
            elif kind == "/":
                pos = self.take()[2]
                d = self.unary()
                if d.degree > 0:
                    raise ParseError("division by a non-constant", pos)
                if d.is_zero():
                    raise ParseError("division by zero", pos)
                p = p / d.coeff(0)
            elif kind in ("x", "("):
                p = p * self.power()
            else:
                return p

    def unary(self) -> Poly:
        if self.tok[0] == "-":
            self.take()
            return -self.unary()
        if self.tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.tok[0] != "^":
            return base
        self.take()
        kind, text, pos = self.tok
        if kind != "num":
            what = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"exponent must be a non-negative integer, found {what}", pos)
        if not text.isdigit():
            raise ParseError(f"non-integer exponent {text!r}", pos)
        self.take()
        return base ** int(text)

    def atom(self) -> Poly:
        kind, text, pos = self.tok
        if kind == "num":
            self.take()
            return Poly.constant(Fraction(text))
        if kind == "x":
            self.take()
            return X
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {what}", pos)


def parse_polynomial(text: str) -> Poly:
    """Parse ``text`` into an exact polynomial; errors carry a 0-based position."""
    return _Parser(text).parse()
