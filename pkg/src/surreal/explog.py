"""Exponential and logarithm on the representable fragment.

``exp(w^x) = w^(w^g(x))`` for x > 0 and ``w^(w^y) = exp(w^h(y))``; g and h
are mutually inverse increasing bijections.  Both are evaluated from closed
forms first.  The remaining cases are:

* h on dyadic arguments, by the recursion
  ``h(y) = {0, h(y')} | {h(y''), w^y/2^n}`` over the (finite) canonical options;
* sign-pattern rules for arguments whose sign expansion is ``-^a +^b`` with a
  a limit ordinal: ``h`` gives ``+ -^(w*a) +^b'`` where ``b = 1 + b'``, and
  ``g(w^y)`` gives ``-^a +^(w^b)``;
* g elsewhere, by descending the sign tree with h as an oracle.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .conv import from_signexp, to_signexp
from .errors import (
    BadLeadingCoefficient,
    BadLogArgument,
    DomainError,
    InexactPower,
    NonzeroRealPart,
    NotPurelyInfinite,
    Unconvertible,
    Undetermined,
    Unrepresentable,
    ZeroInput,
)
from .number import ONE, ZERO, Number, cmp, decompose, expand, monomial, omega_pow, to_ordinal
from .ordinal import ONE as ORD_ONE
from .ordinal import OMEGA as ORD_OMEGA
from .ordinal import ZERO as ORD_ZERO
from .ordinal import ord_left_sub, ord_mul, ord_omega_pow
from .signseq import MINUS, PLUS, SignExpansion, simplest_between

__all__ = [
    "GhTable",
    "DEFAULT_TABLE",
    "g_map",
    "h_map",
    "exp_J",
    "log_monomial",
    "leading_log",
    "exp_trunc",
    "log_trunc",
    "power",
]

DEFAULT_CAP = 64
EXPAND_CAP = 256


def _neg_ordinal(y: Number):
    """The ordinal a with y = -a, or None."""
    return to_ordinal(-y)


def _limit_pattern(y: Number):
    """(a, b) when y has sign expansion ``-^a +^b`` with a a limit or 0."""
    try:
        s = to_signexp(y)
    except Unconvertible:
        return None
    runs = s.runs
    if not runs:
        return None
    if runs[0][0] == PLUS:
        return (None, runs[0][1]) if len(runs) == 1 else None
    a = runs[0][1]
    if not a.is_limit():
        return None
    if len(runs) == 1:
        return a, ORD_ZERO
    if len(runs) == 2:
        return a, runs[1][1]
    return None


class GhTable:
    """The maps g and h with a shared memo of verified pairs ``(y, h(y))``."""

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap
        self.h_memo: dict = {}
        self.g_memo: dict = {}

    def _remember(self, y: Number, x: Number) -> Number:
        self.h_memo[y] = x
        self.g_memo[x] = y
        return x

    # h -----------------------------------------------------------------------
    def h(self, y) -> Number:
        y = Number.coerce(y)
        if y in self.h_memo:
            return self.h_memo[y]
        x = self._h_closed(y)
        if x is None:
            x = self._h_recursive(y, self.cap)
        return self._remember(y, x)

    def _h_closed(self, y: Number):
        alpha = to_ordinal(y)
        if alpha is not None and not alpha.is_zero():
            return y
        alpha = _neg_ordinal(y)
        if alpha is not None:
            return omega_pow(y - ONE)
        pat = _limit_pattern(y)
        if pat is not None and pat[0] is not None and not pat[1].is_zero():
            a, b = pat
            rest = ord_left_sub(ORD_ONE, b)
            s = SignExpansion([(PLUS, 1), (MINUS, ord_mul(ORD_OMEGA, a)), (PLUS, rest)])
            return from_signexp(s)
        return None

    def _h_recursive(self, y: Number, depth: int) -> Number:
        try:
            s = to_signexp(y)
        except Unconvertible:
            raise Unconvertible(f"h({y}): argument has no supported sign expansion") from None
        if not s.is_finite():
            raise Undetermined(f"h({y}): no rule for infinite sign expansion {s}", cap=self.cap)
        if depth <= 0:
            raise Undetermined(f"h({y}): recursion depth exceeded", cap=self.cap)
        lower, upper = [SignExpansion()], []
        n = s.length().finite_value()
        for i in range(n):
            prefix = s.prefix(i)
            side = lower if s.sign_at(i) == PLUS else upper
            side.append(to_signexp(self._h_at(from_signexp(prefix), depth - 1)))
        x = from_signexp(simplest_between(lower, upper))
        # the options w^y/2^n bind only when x is not dominated by w^y
        if x.sign() > 0 and cmp(x.leading()[1], y) >= 0:
            raise Undetermined(f"h({y}): the options w^y/2^n bind", cap=self.cap)
        return x

    def _h_at(self, y: Number, depth: int) -> Number:
        if y in self.h_memo:
            return self.h_memo[y]
        x = self._h_closed(y)
        if x is None:
            x = self._h_recursive(y, depth)
        return self._remember(y, x)

    # g -----------------------------------------------------------------------
    def g(self, x) -> Number:
        x = Number.coerce(x)
        if x.sign() <= 0:
            raise DomainError(f"g is defined on positive numbers only, got {x}")
        if x in self.g_memo:
            return self.g_memo[x]
        y = self._g_closed(x)
        if y is None:
            y = self._g_search(x)
        self.g_memo[x] = y
        self.h_memo.setdefault(y, x)
        return y

    def _g_closed(self, x: Number):
        if to_ordinal(x) is not None:
            return x
        if not x.is_monomial():
            return None
        z = x.monomial_exponent()
        alpha = _neg_ordinal(z)
        if alpha is not None:
            return z + ONE
        pat = _limit_pattern(z)
        if pat is not None and pat[0] is not None:
            a, b = pat
            return from_signexp(SignExpansion([(MINUS, a), (PLUS, ord_omega_pow(b))]))
        return None

    def _g_search(self, x: Number) -> Number:
        s = SignExpansion()
        for _ in range(self.cap):
            z = from_signexp(s)
            c = cmp(self.h(z), x)
            if c == 0:
                return z
            s = s.append(PLUS if c < 0 else MINUS)
        raise Undetermined(f"g({x}): no preimage within {self.cap} refinement steps", cap=self.cap)


DEFAULT_TABLE = GhTable()


def g_map(x, cap: int | None = None, table: GhTable | None = None) -> Number:
    table = table or (GhTable(cap) if cap is not None else DEFAULT_TABLE)
    return table.g(x)


def h_map(y, cap: int | None = None, table: GhTable | None = None) -> Number:
    table = table or (GhTable(cap) if cap is not None else DEFAULT_TABLE)
    return table.h(y)


# exp and log ---------------------------------------------------------------------

def exp_J(j, table: GhTable | None = None) -> Number:
    """exp of a purely infinite number; the result is a monomial."""
    table = table or DEFAULT_TABLE
    j = Number.coerce(j)
    inf, real, rest = decompose(j)
    if real or not rest.is_zero():
        raise NotPurelyInfinite(f"{j} is not purely infinite")
    b = ZERO
    for a, x in inf:
        b = b + monomial(a, table.g(x))
    return omega_pow(b)


def _finite_terms(x: Number, what: str):
    terms, done = expand(x, EXPAND_CAP)
    if not done:
        raise Unrepresentable(f"{what} {x} has an infinite expansion")
    return terms


def log_monomial(m, table: GhTable | None = None) -> Number:
    """log of a monomial w^b: the sum of b_y * w^h(y)."""
    table = table or DEFAULT_TABLE
    m = Number.coerce(m)
    if not m.is_monomial():
        raise BadLogArgument(f"{m} is not a monomial")
    out = ZERO
    for c, y in _finite_terms(m.monomial_exponent(), "exponent"):
        out = out + monomial(c, table.h(y))
    return out


def leading_log(a, table: GhTable | None = None) -> Number:
    """log of the leading monomial of a."""
    a = Number.coerce(a)
    if a.is_zero():
        raise ZeroInput("ell(0) is undefined")
    return log_monomial(omega_pow(a.leading()[1]), table)


def exp_trunc(x, n: int, table: GhTable | None = None) -> Number:
    """exp(x) for x with zero real part, Taylor series truncated after n terms."""
    x = Number.coerce(x)
    inf, real, eps = decompose(x)
    if real:
        raise NonzeroRealPart(f"exp({x}): real part {real} is not 0")
    total, power_ = ZERO, ONE
    for k in range(n + 1):
        total = total + power_ / factorial(k)
        power_ = power_ * eps
    return exp_J(Number._make(inf, None), table) * total


def log_trunc(x, n: int, table: GhTable | None = None) -> Number:
    """log(x) for x > 0 with leading coefficient 1, truncated after n terms."""
    x = Number.coerce(x)
    if x.sign() <= 0:
        raise BadLogArgument(f"log({x}): argument must be positive")
    c, e = x.leading()
    if c != 1:
        raise BadLeadingCoefficient(f"log({x}): leading coefficient {c} is not 1")
    m = omega_pow(e)
    eps = x / m - ONE
    total, power_ = ZERO, ONE
    for k in range(1, n + 1):
        power_ = power_ * eps
        total = total + power_ * Fraction((-1) ** (k + 1), k)
    return log_monomial(m, table) + total


def power(a, r) -> Number:
    """a^r = exp(r log a) in the exact cases."""
    a = Number.coerce(a)
    r = Fraction(r)
    if r.denominator == 1:
        if a.is_zero() and r < 0:
            raise InexactPower("0 to a negative power")
        return a ** int(r)
    if a.is_monomial():
        return omega_pow(a.monomial_exponent() * r)
    raise InexactPower(f"{a}^{r} is not exactly representable")
