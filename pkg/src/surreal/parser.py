"""Expression grammar and evaluator.

Grammar::

    expr    := add
    add     := mul (('+' | '-') mul)*
    mul     := unary (('*' | '/') unary)*
    unary   := '-' unary | pow
    pow     := atom ('^' powexp)?
    powexp  := '-' powexp | pow
    atom    := number | 'w' | 'x' | ident '(' args ')' | ident | '(' expr ')'

``^`` binds tighter than unary minus and is right associative, so
``-w^-w^2`` is ``-(w^(-(w^2)))``.  ``w^e`` is the monomial with exponent e;
any other base needs a rational exponent.  Ordinal arguments (of lambda,
kappa, logw, S, prodlogw) are ordinary expressions whose value must be an
ordinal; sums and products there are the surreal (natural) ones.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EvalError, ParseError

__all__ = [
    "Node",
    "Num",
    "Omega",
    "Var",
    "Name",
    "BinOp",
    "UMinus",
    "Pow",
    "Call",
    "parse",
    "parse_ordinal",
    "parse_number",
    "ARITY",
]

# name -> (min args, max args)
ARITY = {
    "exp": (1, 2),
    "log": (1, 2),
    "pow": (2, 2),
    "lambda": (2, 2),
    "kappa": (1, 1),
    "logw": (1, 1),
    "S": (1, 1),
    "prodlogw": (1, 1),
    "D": (1, 1),
    "cmp": (2, 2),
    "signexp": (1, 1),
    "simplest": (2, 2),
    "paths": (1, 1),
    "check": (1, 3),
    "g": (1, 1),
    "h": (1, 1),
    "ell": (1, 1),
}


@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Num(Node):
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class Omega(Node):
    pass


@dataclass(frozen=True)
class Var(Node):
    pass


@dataclass(frozen=True)
class Name(Node):
    name: str = ""


@dataclass(frozen=True)
class BinOp(Node):
    op: str = "+"
    left: Node = None
    right: Node = None


@dataclass(frozen=True)
class UMinus(Node):
    arg: Node = None


@dataclass(frozen=True)
class Pow(Node):
    base: Node = None
    exponent: Node = None


@dataclass(frozen=True)
class Call(Node):
    name: str = ""
    args: tuple = ()


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            break
        num, ident, sym = m.groups()
        pos = m.start(m.lastindex)
        if num is not None:
            out.append(("num", num, pos))
        elif ident is not None:
            out.append(("ident", ident, pos))
        else:
            if sym not in "+-*/^(),":
                raise ParseError(f"unexpected character {sym!r}", pos)
            out.append(("sym", sym, pos))
        i = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, sym):
        kind, val, _ = self.peek()
        if kind == "sym" and val == sym:
            return self.take()
        return None

    def expect(self, sym):
        tok = self.accept(sym)
        if tok is None:
            kind, val, pos = self.peek()
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {sym!r}, found {found}", pos)
        return tok

    def parse(self):
        node = self.add()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return node

    def add(self):
        node = self.mul()
        while True:
            tok = self.accept("+") or self.accept("-")
            if tok is None:
                return node
            node = BinOp(tok[2], tok[1], node, self.mul())

    def mul(self):
        node = self.unary()
        while True:
            tok = self.accept("*") or self.accept("/")
            if tok is None:
                return node
            node = BinOp(tok[2], tok[1], node, self.unary())

    def unary(self):
        tok = self.accept("-")
        if tok is not None:
            return UMinus(tok[2], self.unary())
        return self.pow()

    def pow(self):
        base = self.atom()
        tok = self.accept("^")
        if tok is None:
            return base
        return Pow(tok[2], base, self.powexp())

    def powexp(self):
        tok = self.accept("-")
        if tok is not None:
            return UMinus(tok[2], self.powexp())
        return self.pow()

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(pos, Fraction(val))
        if kind == "ident":
            if self.accept("("):
                return self.call(val, pos)
            if val == "w":
                return Omega(pos)
            if val == "x":
                return Var(pos)
            return Name(pos, val)
        if kind == "sym" and val == "(":
            node = self.add()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", pos)

    def call(self, name, pos):
        if name not in ARITY:
            raise ParseError(f"unknown function {name!r}", pos)
        args = []
        if not self.accept(")"):
            args.append(self.add())
            while self.accept(","):
                args.append(self.add())
            self.expect(")")
        lo, hi = ARITY[name]
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            raise ParseError(f"{name} takes {want} arguments, got {len(args)}", pos)
        return Call(pos, name, tuple(args))


def parse(text: str) -> Node:
    return _Parser(text).parse()


def parse_number(text: str):
    """Parse and evaluate an expression to a Number."""
    from .evaluator import Evaluator
    from .number import Number

    value = Evaluator().eval(parse(text))
    if not isinstance(value, Number):
        raise EvalError(f"{text!r} is not a number", position=0)
    return value


def parse_ordinal(text: str):
    """Parse an ordinal such as ``w^2*3+w+1``."""
    from .number import to_ordinal

    value = parse_number(text)
    alpha = to_ordinal(value)
    if alpha is None:
        raise EvalError(f"{text!r} is not an ordinal", position=0)
    return alpha

