"""Operator expressions such as ``i*q*dy - dx*dq`` or ``Xs^2 + 1/2*E``.

Precedence from tightest: ``^`` (nonnegative integer exponent), ``*``,
unary ``-``, then binary ``+``/``-``.  Identifiers are ``i``, the generators
``x y q dx dy dq`` (optionally indexed, ``q2``) and the names known to
:func:`sympclif.oplib.build`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .scalars import I, Scalar
from .weyl import WeylElement, gen
from . import oplib as O

__all__ = ["ParseError", "Num", "Imag", "Name", "Neg", "BinOp", "Pow", "parse", "render", "evaluate"]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - *
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Imag, Name, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_GENERATOR = re.compile(r"(dx|dy|dq|x|y|q)(\d*)$")


def _known(name: str) -> bool:
    return name == "i" or bool(_GENERATOR.match(name)) or O.is_op_name(name)


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        num, ident, sym = m.groups()
        if num is not None:
            out.append(("num", num, start))
        elif ident is not None:
            out.append(("ident", ident, start))
        elif sym in "+-*^()":
            out.append((sym, sym, start))
        else:
            raise ParseError(f"unexpected character {sym!r}", start)
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.open_parens: list = []

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok):
        if tok[0] == "eof" and self.open_parens:
            raise ParseError("unmatched '('", self.open_parens[-1])
        raise ParseError(message, tok[2])

    def expr(self):
        node = self.unary()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.product()

    def product(self):
        node = self.power()
        while self.peek()[0] == "*":
            self.take()
            node = BinOp("*", node, self.power())
        return node

    def power(self):
        node = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or "/" in tok[1]:
                self.fail("exponent must be a nonnegative integer", tok)
            node = Pow(node, int(tok[1]))
        return node

    def atom(self):
        tok = self.take()
        kind, text, pos = tok
        if kind == "num":
            return Num(Fraction(text))
        if kind == "ident":
            if not _known(text):
                raise ParseError(f"unknown identifier {text!r}", pos)
            return Imag() if text == "i" else Name(text)
        if kind == "(":
            self.open_parens.append(pos)
            node = self.expr()
            close = self.take()
            if close[0] != ")":
                self.fail("expected ')'", close)
            self.open_parens.pop()
            return node
        self.fail("expected an operand" if kind != "eof" else "unexpected end of input", tok)


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
    return node


# -- rendering --------------------------------------------------------------------

def _prec(e) -> int:
    if isinstance(e, BinOp):
        return 1 if e.op in "+-" else 3
    if isinstance(e, Neg):
        return 2
    if isinstance(e, Pow):
        return 4
    return 5


def _wrap(e, need: int) -> str:
    s = render(e)
    return f"({s})" if _prec(e) < need else s


def render(e: Expr) -> str:
    """Text that parses back to ``e``."""
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Imag):
        return "i"
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 2)
    if isinstance(e, Pow):
        return f"{_wrap(e.base, 5)}^{e.exponent}"
    if isinstance(e, BinOp):
        if e.op == "*":
            return f"{_wrap(e.left, 3)}*{_wrap(e.right, 4)}"
        return f"{_wrap(e.left, 1)} {e.op} {_wrap(e.right, 2)}"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation ---------------------------------------------------------------------

def _name(name: str, n: int) -> WeylElement:
    m = _GENERATOR.match(name)
    if m:
        return gen(m[1], int(m[2] or 1), n)
    return O.build(name, n)


def evaluate(e, n: int = 1) -> WeylElement:
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Num):
        return WeylElement.scalar(n, Scalar.gauss(e.value))
    if isinstance(e, Imag):
        return WeylElement.scalar(n, I)
    if isinstance(e, Name):
        return _name(e.name, n)
    if isinstance(e, Neg):
        return -evaluate(e.operand, n)
    if isinstance(e, Pow):
        return evaluate(e.base, n) ** e.exponent
    if isinstance(e, BinOp):
        a, b = evaluate(e.left, n), evaluate(e.right, n)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        return a * b
    raise TypeError(f"not an expression node: {e!r}")
