"""Parsing and canonical printing of polynomial expressions.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

Implicit multiplication is rejected (``2x`` is a syntax error).  Division
by a constant gives rational coefficients, so ``p/q`` literals come for
free; division by a non-constant is only accepted by :func:`parse_ratfunc`.
"""

from __future__ import annotations

import re

from .arith import MultiPoly, PolyInX, RatFunc, VarTable, format_poly, format_ratfunc


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, src: str):
        super().__init__(f"{message} at offset {offset}: {src!r}")
        self.offset = offset
        self.src = src


class UnknownVariable(ExprSyntaxError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(3), src)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, vars: VarTable):
        self.src = src
        self.vars = vars
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(message, tok[2], self.src)

    def parse(self) -> RatFunc:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name") or tok[1] == "(":
                raise self.error("implicit multiplication is not allowed")
            raise self.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ExprSyntaxError("division by zero", op_tok[2], self.src)
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.take()
            base = base ** int(tok[1])
        return base

    def atom(self) -> RatFunc:
        tok = self.take()
        kind, text, _ = tok
        if kind == "int":
            return RatFunc.constant(self.vars, int(text))
        if kind == "name":
            if text not in self.vars:
                raise UnknownVariable(f"unknown variable {text!r}", tok[2], self.src)
            return RatFunc.var(self.vars, text)
        if kind == "op" and text == "(":
            value = self.expr()
            close = self.peek()
            if close[0] != "op" or close[1] != ")":
                raise self.error("expected ')'")
            self.take()
            return value
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", tok[2], self.src)
        raise ExprSyntaxError(f"unexpected {text!r}", tok[2], self.src)


def parse_ratfunc(src: str, vars: VarTable) -> RatFunc:
    return _Parser(src, vars).parse()


def parse_poly(src: str, vars: VarTable) -> MultiPoly:
    """Parse a polynomial over ``vars``; non-constant division is rejected."""
    value = parse_ratfunc(src, vars)
    if not value.is_poly():
        raise ExprSyntaxError("not a polynomial (division by a non-constant)", 0, src)
    return value.num.scale(1 / value.den.constant_value())


def parse_polyx(src: str, vars: VarTable) -> PolyInX:
    """Parse a polynomial in ``x`` whose coefficients may be rational in the parameters."""
    value = parse_ratfunc(src, vars)
    if value.den.degree("x") > 0:
        raise ExprSyntaxError("x appears in a denominator", 0, src)
    num = PolyInX.from_multipoly(value.num)
    return num.scale(RatFunc._raw(MultiPoly.constant(vars, 1), value.den))


def print_canonical(e) -> str:
    """Deterministic text form: grlex-descending terms, ``(num)/(den)`` for quotients."""
    if isinstance(e, MultiPoly):
        return format_poly(e)
    if isinstance(e, RatFunc):
        return format_ratfunc(e)
    if isinstance(e, PolyInX):
        return format_ratfunc(e.to_ratfunc())
    raise TypeError(f"cannot print {type(e).__name__}")
