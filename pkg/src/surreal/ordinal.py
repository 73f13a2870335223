"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents (themselves ordinals) and positive integer
coefficients.  The empty tuple is 0.  Every ordinal built through this module
is in normal form, so equality is structural.
"""
from __future__ import annotations

from functools import total_ordering
from typing import Iterable

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "ord_cmp",
    "ord_add",
    "ord_mul",
    "ord_omega_pow",
    "ord_classify",
    "ord_left_sub",
    "ord_split_at_power",
]


@total_ordering
class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable = ()):
        terms = tuple(terms)
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, Ordinal):
                raise TypeError("exponents must be Ordinal")
            if not isinstance(c, int) or c < 1:
                raise ValueError("coefficients must be positive integers")
            if i and ord_cmp(terms[i - 1][0], e) <= 0:
                raise ValueError("exponents must be strictly decreasing")
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def nat(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls._raw(((ZERO, n),)) if n else ZERO

    @classmethod
    def coerce(cls, x) -> "Ordinal":
        if isinstance(x, Ordinal):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls.nat(x)
        raise TypeError(f"cannot interpret {x!r} as an ordinal")

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def finite_part(self) -> int:
        """The trailing natural number n with self = limit_part + n."""
        if self.terms and self.terms[-1][0].is_zero():
            return self.terms[-1][1]
        return 0

    def limit_part(self) -> "Ordinal":
        if self.terms and self.terms[-1][0].is_zero():
            return Ordinal._raw(self.terms[:-1])
        return self

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    def last_exponent(self) -> "Ordinal":
        return self.terms[-1][0]

    def below_omega_pow_omega(self) -> bool:
        return all(e.is_finite() for e, _ in self.terms)

    # dunder plumbing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.nat(other) if other >= 0 else None
            if other is None:
                return False
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        other = Ordinal.coerce(other)
        return ord_cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Ordinal", self.terms))
        return self._hash

    def __add__(self, other):
        return ord_add(self, Ordinal.coerce(other))

    def __radd__(self, other):
        return ord_add(Ordinal.coerce(other), self)

    def __mul__(self, other):
        return ord_mul(self, Ordinal.coerce(other))

    def __rmul__(self, other):
        return ord_mul(Ordinal.coerce(other), self)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Ordinal({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e.is_zero():
                parts.append(str(c))
                continue
            if e == ONE:
                base = "w"
            elif e.is_finite():
                base = f"w^{e.finite_value()}"
            else:
                base = f"w^({e})"
            parts.append(base if c == 1 else f"{base}*{c}")
        return "+".join(parts)


ZERO = Ordinal._raw(())
ONE = Ordinal._raw(((ZERO, 1),))
OMEGA = Ordinal._raw(((ONE, 1),))


def ord_cmp(a: Ordinal, b: Ordinal) -> int:
    """Return -1, 0 or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    eb, cb = b.terms[0]
    kept = []
    for e, c in a.terms:
        s = ord_cmp(e, eb)
        if s > 0:
            kept.append((e, c))
        elif s == 0:
            cb += c
            break
        else:
            break
    return Ordinal._raw(kept + [(eb, cb)] + list(b.terms[1:]))


def ord_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    lead_e, lead_c = a.terms[0]
    out = ZERO
    for f, d in b.terms:
        if f.is_zero():
            piece = Ordinal._raw(((lead_e, lead_c * d),) + a.terms[1:])
        else:
            piece = Ordinal._raw(((ord_add(lead_e, f), d),))
        out = ord_add(out, piece)
    return out


def ord_omega_pow(a: Ordinal) -> Ordinal:
    return Ordinal._raw(((a, 1),))


def ord_classify(a: Ordinal):
    """Return ``("zero",)``, ``("successor", predecessor)`` or ``("limit",)``."""
    if not a.terms:
        return ("zero",)
    e, c = a.terms[-1]
    if e.is_zero():
        head = a.terms[:-1]
        pred = head + ((ZERO, c - 1),) if c > 1 else head
        return ("successor", Ordinal._raw(pred))
    return ("limit",)


def ord_left_sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique d with a + d = b; requires a <= b."""
    if ord_cmp(a, b) > 0:
        raise ValueError(f"{a} > {b}: no left difference")
    for i, ((ea, ca), (eb, cb)) in enumerate(zip(a.terms, b.terms)):
        if (ea, ca) == (eb, cb):
            continue
        s = ord_cmp(eb, ea)
        if s > 0:
            return Ordinal._raw(b.terms[i:])
        # equal exponent, cb > ca
        return Ordinal._raw(((eb, cb - ca),) + b.terms[i + 1:])
    return Ordinal._raw(b.terms[len(a.terms):])


def ord_split_at_power(k: Ordinal, q: Ordinal):
    """Write k = w^q * m + r with r < w^q; return (m, r)."""
    high, low = [], []
    for e, c in k.terms:
        if ord_cmp(e, q) >= 0:
            high.append((ord_left_sub(q, e), c))
        else:
            low.append((e, c))
    return Ordinal._raw(high), Ordinal._raw(low)
