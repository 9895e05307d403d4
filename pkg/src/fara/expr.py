"""Arithmetic expressions over sexagesimal literals.

Grammar (``×`` binds tighter than ``+``/``-``; both left-associative)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "×" | "/" | "÷") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INTEGER)?
    atom   := LITERAL | "(" expr ")"

Division multiplies by the reciprocal of the divisor, so the divisor must be
regular.  In ``divmod`` mode ``/`` is whole-number division instead, and a
top-level division also reports its remainder.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Union

from fara.regnum import divide
from fara.sexcore import SexagesimalError, SexValue, divmod_int, parse_literal, pow_int


class ExprError(SexagesimalError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at offset {position} in {text!r}")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKENS = re.compile(
    r"\s*(?:(?P<num>\d+(?:,\d+)*(?:;\d+(?:,\d+)*)?)|(?P<op>[-+*/^()×÷−]))"
)
_OPS = {"×": "*", "÷": "/", "−": "-"}


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKENS.match(text, pos)
        if not m:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[at]!r}", text, at)
        if m.group("num"):
            out.append(Token("num", m.group("num"), m.start("num")))
        else:
            op = m.group("op")
            out.append(Token("op", _OPS.get(op, op), m.start("op")))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


Node = Union[SexValue, tuple]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ExprError(msg, self.text, tok.pos)

    def parse(self) -> Node:
        if self.peek().kind == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            node = (op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().text in ("*", "/") and self.peek().kind == "op":
            op = self.take()
            node = (op.text, node, self.unary(), op.pos)
        return node

    def unary(self) -> Node:
        if self.peek().kind == "op" and self.peek().text == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "num":
                self.fail("exponent must be a whole number", tok)
            k = parse_literal(tok.text)
            if not k.is_integer():
                self.fail("exponent must be a whole number", tok)
            node = ("^", node, int(k))
        return node

    def atom(self) -> Node:
        tok = self.take()
        if tok.kind == "num":
            return parse_literal(tok.text)
        if tok.text == "(":
            node = self.expr()
            if self.take().text != ")":
                self.fail("missing ')'", self.tokens[self.i - 1])
            return node
        self.fail(f"expected a number, got {tok.text or 'end of input'!r}", tok)


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


def _eval(node: Node, divmod_mode: bool) -> SexValue:
    if isinstance(node, SexValue):
        return node
    op = node[0]
    if op == "neg":
        return -_eval(node[1], divmod_mode)
    if op == "^":
        return pow_int(_eval(node[1], divmod_mode), node[2])
    a = _eval(node[1], divmod_mode)
    b = _eval(node[2], divmod_mode)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if divmod_mode:
        return divmod_int(a, b)[0]
    return divide(a, b)


def evaluate(text: str, divmod_mode: bool = False) -> tuple[SexValue, SexValue | None]:
    """Value of ``text`` and, in divmod mode, the remainder of a top-level ``/``."""
    node = parse_expression(text)
    if divmod_mode and isinstance(node, tuple) and node[0] == "/":
        a = _eval(node[1], True)
        b = _eval(node[2], True)
        q, r = divmod_int(a, b)
        return q, r
    return _eval(node, divmod_mode), None
