"""Log-exp expressions in x, their derivative, and the embedding x -> w.

The embedding sends X to w, constants to themselves, Exp to ``exp_J`` and Log
to ``log_monomial``.  ``check_commute`` compares the surreal derivative of the
image with the image of the formal derivative.  ``check_order_embedding``
compares the surreal order of images with the asymptotic sign of ``f - g``
as decided by sympy's limit-sign routine, which never sees the surreal side.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .derivation import DEFAULT_CONFIG, DerivationConfig, derive
from .errors import DivisionByZero
from .explog import exp_J, log_monomial
from .number import OMEGA, Number, cmp

__all__ = [
    "TExpr",
    "X",
    "Const",
    "Add",
    "Neg",
    "Mul",
    "Div",
    "IntPow",
    "Exp",
    "Log",
    "tdiff",
    "iota",
    "check_commute",
    "check_order_embedding",
    "t_sign",
    "to_sympy",
]


class TExpr:
    def __add__(self, other):
        return add(self, _lift(other))

    def __radd__(self, other):
        return add(_lift(other), self)

    def __sub__(self, other):
        return add(self, neg(_lift(other)))

    def __rsub__(self, other):
        return add(_lift(other), neg(self))

    def __mul__(self, other):
        return mul(self, _lift(other))

    def __rmul__(self, other):
        return mul(_lift(other), self)

    def __truediv__(self, other):
        return div(self, _lift(other))

    def __rtruediv__(self, other):
        return div(_lift(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, n: int):
        return intpow(self, n)


@dataclass(frozen=True)
class _X(TExpr):
    def __str__(self):
        return "x"


@dataclass(frozen=True)
class Const(TExpr):
    value: Fraction

    def __str__(self):
        return str(self.value) if self.value >= 0 else f"({self.value})"


@dataclass(frozen=True)
class Add(TExpr):
    left: TExpr
    right: TExpr

    def __str__(self):
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Neg(TExpr):
    arg: TExpr

    def __str__(self):
        return f"-({self.arg})"


@dataclass(frozen=True)
class Mul(TExpr):
    left: TExpr
    right: TExpr

    def __str__(self):
        return f"{self.left}*{self.right}"


@dataclass(frozen=True)
class Div(TExpr):
    left: TExpr
    right: TExpr

    def __post_init__(self):
        if self.right == Const(Fraction(0)):
            raise DivisionByZero("division by the constant 0")

    def __str__(self):
        return f"({self.left})/({self.right})"


@dataclass(frozen=True)
class IntPow(TExpr):
    base: TExpr
    exponent: int

    def __str__(self):
        return f"({self.base})^({self.exponent})"


@dataclass(frozen=True)
class Exp(TExpr):
    arg: TExpr

    def __str__(self):
        return f"exp({self.arg})"


@dataclass(frozen=True)
class Log(TExpr):
    arg: TExpr

    def __str__(self):
        return f"log({self.arg})"


X = _X()
ZERO_T, ONE_T = Const(Fraction(0)), Const(Fraction(1))


def _lift(v) -> TExpr:
    return v if isinstance(v, TExpr) else Const(Fraction(v))


# simplifying constructors ---------------------------------------------------------------

def add(a: TExpr, b: TExpr) -> TExpr:
    if a == ZERO_T:
        return b
    if b == ZERO_T:
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value + b.value)
    return Add(a, b)


def neg(a: TExpr) -> TExpr:
    if isinstance(a, Const):
        return Const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def mul(a: TExpr, b: TExpr) -> TExpr:
    if a == ZERO_T or b == ZERO_T:
        return ZERO_T
    if a == ONE_T:
        return b
    if b == ONE_T:
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value * b.value)
    return Mul(a, b)


def div(a: TExpr, b: TExpr) -> TExpr:
    if a == ZERO_T:
        return ZERO_T
    if b == ONE_T:
        return a
    if isinstance(a, Const) and isinstance(b, Const):
        return Const(a.value / b.value)
    return Div(a, b)


def intpow(a: TExpr, n: int) -> TExpr:
    if n == 0:
        return ONE_T
    if n == 1:
        return a
    if isinstance(a, Const):
        return Const(a.value ** n)
    return IntPow(a, n)


def tdiff(f: TExpr) -> TExpr:
    """The formal derivative d/dx."""
    if isinstance(f, _X):
        return ONE_T
    if isinstance(f, Const):
        return ZERO_T
    if isinstance(f, Add):
        return add(tdiff(f.left), tdiff(f.right))
    if isinstance(f, Neg):
        return neg(tdiff(f.arg))
    if isinstance(f, Mul):
        return add(mul(tdiff(f.left), f.right), mul(f.left, tdiff(f.right)))
    if isinstance(f, Div):
        top = add(mul(tdiff(f.left), f.right), neg(mul(f.left, tdiff(f.right))))
        return div(top, intpow(f.right, 2))
    if isinstance(f, IntPow):
        return mul(mul(Const(Fraction(f.exponent)), intpow(f.base, f.exponent - 1)), tdiff(f.base))
    if isinstance(f, Exp):
        return mul(tdiff(f.arg), f)
    if isinstance(f, Log):
        return div(tdiff(f.arg), f.arg)
    raise TypeError(f"not a transseries expression: {f!r}")


def iota(f: TExpr) -> Number:
    """The image of f under x -> w."""
    if isinstance(f, _X):
        return OMEGA
    if isinstance(f, Const):
        return Number.coerce(f.value)
    if isinstance(f, Add):
        return iota(f.left) + iota(f.right)
    if isinstance(f, Neg):
        return -iota(f.arg)
    if isinstance(f, Mul):
        return iota(f.left) * iota(f.right)
    if isinstance(f, Div):
        return iota(f.left) / iota(f.right)
    if isinstance(f, IntPow):
        return iota(f.base) ** f.exponent
    if isinstance(f, Exp):
        return exp_J(iota(f.arg))
    if isinstance(f, Log):
        return log_monomial(iota(f.arg))
    raise TypeError(f"not a transseries expression: {f!r}")


def check_commute(f: TExpr, cfg: DerivationConfig = DEFAULT_CONFIG):
    """Compare d(iota(f)) with iota(f')."""
    lhs = derive(iota(f), cfg)
    rhs = iota(tdiff(f))
    return {"expr": str(f), "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}


# the transseries-side order ----------------------------------------------------------

def to_sympy(f: TExpr, x=None):
    import sympy

    if x is None:
        x = sympy.Symbol("x", positive=True)
    if isinstance(f, _X):
        return x
    if isinstance(f, Const):
        return sympy.Rational(f.value.numerator, f.value.denominator)
    if isinstance(f, Add):
        return to_sympy(f.left, x) + to_sympy(f.right, x)
    if isinstance(f, Neg):
        return -to_sympy(f.arg, x)
    if isinstance(f, Mul):
        return to_sympy(f.left, x) * to_sympy(f.right, x)
    if isinstance(f, Div):
        return to_sympy(f.left, x) / to_sympy(f.right, x)
    if isinstance(f, IntPow):
        return to_sympy(f.base, x) ** f.exponent
    if isinstance(f, Exp):
        return sympy.exp(to_sympy(f.arg, x))
    if isinstance(f, Log):
        return sympy.log(to_sympy(f.arg, x))
    raise TypeError(f"not a transseries expression: {f!r}")


def t_sign(f: TExpr) -> int:
    """Sign of f(x) for large x, decided by sympy's limit-sign routine."""
    import sympy
    from sympy.series.gruntz import sign

    x = sympy.Symbol("x", positive=True)
    e = sympy.simplify(to_sympy(f, x))
    if e == 0:
        return 0
    return int(sign(e, x))


def check_order_embedding(pairs, cfg: DerivationConfig = DEFAULT_CONFIG):
    """Compare the order of iota-images with the asymptotic order in x."""
    out = []
    for f, g in pairs:
        surreal = cmp(iota(f), iota(g))
        formal = t_sign(add(f, neg(g)))
        out.append({"f": str(f), "g": str(g), "surreal": surreal, "transseries": formal, "equal": surreal == formal})
    return {"checks": out, "violations": sum(not c["equal"] for c in out)}
