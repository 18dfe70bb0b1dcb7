"""Recursive-descent reader for polynomial text.

Accepted grammar (whitespace insignificant)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := atom ('*' atom)*
    atom   := int ['/' int] | ident ['^' int] | '(' poly ')' ['^' int]

``sqrtm3`` is the reserved name for sqrt(-3).  The printer only emits the
restricted form where parentheses wrap coefficients, which this reads back.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .poly import Polynomial, RingSignature
from .printer import RADICAL_NAME
from .scalar import QQ, SQRT_M3

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownVariableError(PolynomialSyntaxError):
    pass


class RationalLiteralError(PolynomialSyntaxError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        num, ident, sym = mt.groups()
        start = mt.start(1) if num else mt.start(2) if ident else mt.start(3)
        if num:
            tokens.append(("int", num, start))
        elif ident:
            tokens.append(("ident", ident, start))
        else:
            if sym not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {sym!r}", start, text)
            tokens.append((sym, sym, start))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, signature: RingSignature):
        self.text = text
        self.sig = signature
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty polynomial", 0, self.text)
        p = self.poly()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return p

    def poly(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.atom()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.atom()
        return acc

    def exponent(self) -> int:
        if self.peek()[0] == "^":
            self.take()
            return int(self.take("int")[1])
        return 1

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(value)
            if self.peek()[0] == "/":
                slash = self.take()
                nxt = self.peek()
                if nxt[0] != "int":
                    raise RationalLiteralError("malformed rational literal", slash[2], self.text)
                den = int(self.take()[1])
                if den == 0:
                    raise RationalLiteralError("zero denominator in rational literal", nxt[2],
                                               self.text)
                return self.sig.const(QQ(num, den))
            return self.sig.const(num)
        if kind == "ident":
            self.take()
            if value == RADICAL_NAME:
                return self.sig.const(SQRT_M3 ** self.exponent())
            if value not in self.sig.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", pos, self.text)
            return self.sig.gen(value) ** self.exponent()
        if kind == "(":
            self.take()
            inner = self.poly()
            self.take(")")
            return inner ** self.exponent()
        what = "end of input" if kind == "end" else repr(value)
        raise PolynomialSyntaxError(f"unexpected {what}", pos, self.text)


def parse_polynomial(text: str, signature: RingSignature) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over ``signature``."""
    return _Parser(text, signature).parse()
