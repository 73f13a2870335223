"""Exact surreal fragment: fractions of finite normal form series.

A series is a tuple of ``(coefficient, exponent)`` terms with rational
coefficients and :class:`Number` exponents in strictly decreasing order; the
term ``(c, e)`` stands for ``c * w^e``.  A :class:`Number` is ``num / den``
with ``den`` having leading coefficient 1.  Whenever ``den`` divides ``num``
exactly the quotient is stored instead, so polynomial values have a unique
representation; genuine fractions compare by cross multiplication.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import CapExceeded, DivisionByZero, UnsupportedOrdinal, ZeroInput
from .ordinal import Ordinal

__all__ = [
    "Number",
    "ZERO",
    "ONE",
    "OMEGA",
    "omega_pow",
    "monomial",
    "from_ordinal",
    "to_ordinal",
    "expand",
    "decompose",
    "geom_sum_S",
    "prod_log_omega",
    "val_cmp",
]


# --- series helpers ---------------------------------------------------------

def _s_neg(a):
    return tuple((-c, e) for c, e in a)


def _s_scale(a, k):
    if not k:
        return ()
    return tuple((c * k, e) for c, e in a)


def _s_shift(a, s):
    """Multiply a series by w^s."""
    if s.is_zero():
        return a
    return tuple((c, e + s) for c, e in a)


def _s_add(a, b):
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        (ca, ea), (cb, eb) = a[i], b[j]
        s = cmp(ea, eb)
        if s > 0:
            out.append(a[i])
            i += 1
        elif s < 0:
            out.append(b[j])
            j += 1
        else:
            c = ca + cb
            if c:
                out.append((c, ea))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _s_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = ()
    for c, e in a:
        out = _s_add(out, _s_scale(_s_shift(b, e), c))
    return out


def _s_cmp(a, b):
    """Sign of a - b for two series, without building the difference."""
    for (ca, ea), (cb, eb) in zip(a, b):
        s = cmp(ea, eb)
        if s > 0:
            return 1 if ca > 0 else -1
        if s < 0:
            return -1 if cb > 0 else 1
        if ca != cb:
            return 1 if ca > cb else -1
    if len(a) > len(b):
        return 1 if a[len(b)][0] > 0 else -1
    if len(b) > len(a):
        return -1 if b[len(a)][0] > 0 else 1
    return 0


def _s_divide_exact(num, den, max_terms=None):
    """Return q with q*den == num if such a finite q exists, else None.

    A finite quotient ends at exponent last(num) - last(den); the search stops
    there, or after ``max_terms`` quotient terms (then None, which only costs
    canonicity, never correctness).
    """
    if not num:
        return ()
    if max_terms is None:
        max_terms = 64 + 4 * len(num) * len(den)
    last = num[-1][1] - den[-1][1]
    lead_c, lead_e = den[0]
    rem, quot = num, []
    while rem:
        c, e = rem[0]
        qe = e - lead_e
        if cmp(qe, last) < 0 or len(quot) >= max_terms:
            return None
        qc = c / lead_c
        quot.append((qc, qe))
        rem = _s_add(rem, _s_neg(_s_scale(_s_shift(den, qe), qc)))
    return tuple(quot)


def _series_key(s):
    return tuple((c, e.key) for c, e in s)


# --- Number -------------------------------------------------------------------

@total_ordering
class Number:
    """An element of the fraction fragment of No."""

    __slots__ = ("num", "den", "_key", "_hash", "_lead")

    def __new__(cls, num=(), den=None):
        if den is None or _is_one(den):
            return cls._make(tuple(num), None)
        den = tuple(den)
        if not den:
            raise DivisionByZero("zero denominator")
        num = tuple(num)
        lead_c, lead_e = den[0]
        if lead_c != 1:
            num = _s_scale(num, 1 / lead_c)
            den = _s_scale(den, 1 / lead_c)
        if len(den) == 1:
            return cls._make(_s_shift(num, -lead_e), None)
        q = _s_divide_exact(num, den)
        if q is not None:
            return cls._make(q, None)
        return cls._make(num, den)

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._key = None
        obj._hash = None
        obj._lead = None
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "Number":
        if isinstance(x, Number):
            return x
        if isinstance(x, Ordinal):
            return from_ordinal(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            x = Fraction(x)
            return cls._make(((x, ZERO),), None) if x else ZERO
        raise TypeError(f"cannot interpret {x!r} as a Number")

    # structure -----------------------------------------------------------
    @property
    def key(self):
        """Structural key; equal keys imply equal values."""
        if self._key is None:
            den = None if self.den is None else _series_key(self.den)
            self._key = (_series_key(self.num), den)
        return self._key

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den is None

    @property
    def denominator(self):
        return ((Fraction(1), ZERO),) if self.den is None else self.den

    def terms(self):
        """The finite normal form; only for polynomial values."""
        if self.den is not None:
            raise ValueError("fraction has no finite term list; use expand()")
        return self.num

    def leading(self):
        """(coefficient, exponent) of the leading term of the expansion."""
        if self.is_zero():
            raise ZeroInput("0 has no leading term")
        if self._lead is None:
            c, e = self.num[0]
            if self.den is not None:
                e = e - self.den[0][1]
            self._lead = (c, e)
        return self._lead

    def sign(self) -> int:
        if not self.num:
            return 0
        return 1 if self.num[0][0] > 0 else -1

    def is_rational(self) -> bool:
        return self.den is None and (not self.num or (len(self.num) == 1 and self.num[0][1].is_zero()))

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.num[0][0] if self.num else Fraction(0)

    def is_monomial(self) -> bool:
        """A single term with coefficient 1, i.e. an element w^x of M."""
        return self.den is None and len(self.num) == 1 and self.num[0][0] == 1

    def monomial_exponent(self) -> "Number":
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial")
        return self.num[0][1]

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.den is None and other.den is None:
            return Number._make(_s_add(self.num, other.num), None)
        a, b, c, d = self.num, self.denominator, other.num, other.denominator
        return Number(_s_add(_s_mul(a, d), _s_mul(c, b)), _s_mul(b, d))

    __radd__ = __add__

    def __neg__(self):
        if self.den is None:
            return Number._make(_s_neg(self.num), None)
        return Number._make(_s_neg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Number.coerce(other) - self

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self.den is None and other.den is None:
            return Number._make(_s_mul(self.num, other.num), None)
        return Number(_s_mul(self.num, other.num), _s_mul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero")
        num = _s_mul(self.num, other.denominator)
        den = _s_mul(self.denominator, other.num)
        return Number(num, den)

    def __rtruediv__(self, other):
        return Number.coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** -n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # order -------------------------------------------------------------------
    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return cmp(self, other) == 0

    def __lt__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            if self.is_zero():
                self._hash = 0
            else:
                c, e = self.leading()
                self._hash = hash((c, hash(e)))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # rendering -----------------------------------------------------------------
    def __str__(self):
        from .render import render_number

        return render_number(self)

    def __repr__(self):
        return f"Number({self})"

    def to_json(self):
        def ser(s):
            return [{"c": str(c), "e": e.to_json()} for c, e in s]

        return {"num": ser(self.num), "den": None if self.den is None else ser(self.den)}

    @classmethod
    def from_json(cls, data) -> "Number":
        def de(s):
            return tuple((Fraction(t["c"]), cls.from_json(t["e"])) for t in s)

        den = data.get("den")
        return cls(de(data["num"]), None if den is None else de(den))


def _is_one(den):
    den = tuple(den)
    return len(den) == 1 and den[0][0] == 1 and den[0][1].is_zero()


def _coerce_or_none(x):
    try:
        return Number.coerce(x)
    except TypeError:
        return None


ZERO = Number._make((), None)
ONE = Number._make(((Fraction(1), ZERO),), None)
OMEGA = Number._make(((Fraction(1), ONE),), None)


def cmp(x: Number, y: Number) -> int:
    """Return -1, 0 or 1 according to the surreal order."""
    if x is y:
        return 0
    if x.den is None and y.den is None:
        if x._key is not None and x._key == y._key:
            return 0
        return _s_cmp(x.num, y.num)
    lhs = _s_mul(x.num, y.denominator)
    rhs = _s_mul(y.num, x.denominator)
    return _s_cmp(lhs, rhs)


def omega_pow(x) -> Number:
    return Number._make(((Fraction(1), Number.coerce(x)),), None)


def monomial(c, x) -> Number:
    c = Fraction(c)
    if not c:
        return ZERO
    return Number._make(((c, Number.coerce(x)),), None)


def from_ordinal(alpha: Ordinal) -> Number:
    alpha = Ordinal.coerce(alpha)
    return Number._make(tuple((Fraction(c), from_ordinal(e)) for e, c in alpha.terms), None)


def to_ordinal(x: Number):
    """The ordinal equal to x, or None when x is not an ordinal."""
    if x.den is not None:
        return None
    terms = []
    for c, e in x.num:
        if c <= 0 or c.denominator != 1:
            return None
        eo = to_ordinal(e)
        if eo is None:
            return None
        terms.append((eo, int(c)))
    return Ordinal._raw(terms)


# --- valuation ------------------------------------------------------------------

PRECEQ, PREC, ASYMP, SIM = "PRECEQ", "PREC", "ASYMP", "SIM"


def val_cmp(x: Number, y: Number) -> set:
    """Dominance relations that hold between x and y.

    The result contains PRECEQ (x <= y in dominance), PREC (x strictly
    dominated), ASYMP (same leading exponent) and SIM (x - y dominated by x).
    """
    if y.is_zero():
        raise ZeroInput("dominance against 0")
    out = set()
    if x.is_zero():
        return {PRECEQ, PREC}
    ex, ey = x.leading()[1], y.leading()[1]
    s = cmp(ex, ey)
    if s <= 0:
        out.add(PRECEQ)
    if s < 0:
        out.add(PREC)
    if s == 0:
        out.add(ASYMP)
        d = x - y
        if d.is_zero() or cmp(d.leading()[1], ex) < 0:
            out.add(SIM)
    return out


# --- lazy expansion ---------------------------------------------------------------

def iter_terms(x: Number):
    """Terms of the Hahn expansion of x in decreasing exponent order."""
    if x.den is None:
        yield from x.num
        return
    den = x.den
    lead_e = den[0][1]
    rem = x.num
    while rem:
        c, e = rem[0]
        qe = e - lead_e
        yield (c, qe)
        rem = _s_add(rem, _s_neg(_s_scale(_s_shift(den, qe), c)))


def expand(x: Number, n: int):
    """First n terms of x as a series and whether the expansion ended."""
    out = []
    it = iter_terms(x)
    for t in it:
        if len(out) == n:
            return tuple(out), False
        out.append(t)
    return tuple(out), True


def decompose(x: Number, cap: int = 1024):
    """Split x into (purely infinite series, real part, infinitesimal Number)."""
    inf, real = [], Fraction(0)
    for c, e in iter_terms(x):
        s = e.sign()
        if s > 0:
            if len(inf) >= cap:
                raise CapExceeded(f"more than {cap} purely infinite terms", partial=tuple(inf))
            inf.append((c, e))
            continue
        if s == 0:
            real = c
        break
    inf = tuple(inf)
    rest = x - Number._make(inf, None) - Number.coerce(real)
    return inf, real, rest


# --- transfinite geometric sums -----------------------------------------------------

def _S_power(k: int) -> Number:
    """S(w^k) for natural k."""
    s = ONE  # S(w^0) = S(1)
    for j in range(k):
        t = omega_pow(-from_ordinal(Ordinal._raw(((Ordinal.nat(j), 1),))))
        s = s / (ONE - t)
    return s


def geom_sum_S(alpha) -> Number:
    """Closed form of the Hahn sum of w^(-beta) over all beta < alpha."""
    return _geom_sum_S(Ordinal.coerce(alpha))


@lru_cache(maxsize=None)
def _geom_sum_S(alpha: Ordinal) -> Number:
    if not alpha.below_omega_pow_omega():
        raise UnsupportedOrdinal(f"S({alpha}) needs alpha < w^w")
    total, offset = ZERO, Ordinal()
    for e, c in alpha.terms:
        k = e.finite_value()
        block = _S_power(k)
        step = Ordinal._raw(((e, 1),))
        for _ in range(c):
            total = total + omega_pow(-from_ordinal(offset)) * block
            offset = offset + step
    return total


def prod_log_omega(alpha) -> Number:
    """Product of log_beta(w) over beta < alpha, i.e. w^S(alpha)."""
    return _prod_log_omega(Ordinal.coerce(alpha))


@lru_cache(maxsize=None)
def _prod_log_omega(alpha: Ordinal) -> Number:
    return omega_pow(geom_sum_S(alpha))
