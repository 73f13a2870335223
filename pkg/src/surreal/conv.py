"""Partial conversion between Numbers and sign expansions.

Supported family, closed under negation:

* dyadic rationals;
* ordinals, and ``alpha + z`` with alpha an ordinal and z a supported number
  whose leading exponent is below the last exponent of alpha (the sign
  expansion is the concatenation ``+^alpha`` then z);
* ``c * w^y`` with c a positive dyadic and y supported, using the monomial sign rule:
  a leading ``+``, then for each run of y a block ``+^(w^(p+k))`` for k pluses
  or ``-^(w^(p+1) * k)`` for k minuses (p = pluses of y seen so far), then the
  signs of c after its first, each repeated ``w^P`` times (P = pluses of y).

Decoding enumerates the ways a sign expansion can split along those rules and
keeps a candidate only if it re-encodes to the input.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NonDyadic, Unconvertible
from .number import ZERO, Number, from_ordinal, monomial, to_ordinal
from .ordinal import ONE as ORD_ONE
from .ordinal import ZERO as ORD_ZERO
from .ordinal import Ordinal, ord_add, ord_cmp, ord_left_sub, ord_mul, ord_split_at_power
from .signseq import MINUS, PLUS, SignExpansion, from_dyadic, to_dyadic

__all__ = ["to_signexp", "from_signexp", "length_of", "is_convertible"]


def _w(e: Ordinal) -> Ordinal:
    return Ordinal._raw(((e, 1),))


def _is_dyadic(c: Fraction) -> bool:
    d = c.denominator
    return d & (d - 1) == 0


def _encode_monomial(c: Fraction, ysig: SignExpansion) -> SignExpansion:
    runs = [(PLUS, ORD_ONE)]
    p = ORD_ZERO
    for s, k in ysig.runs:
        if s == PLUS:
            p = ord_add(p, k)
            runs.append((PLUS, _w(p)))
        else:
            runs.append((MINUS, ord_mul(_w(ord_add(p, ORD_ONE)), k)))
    unit = _w(p)
    tail = from_dyadic(c).suffix(ORD_ONE)
    runs.extend((s, ord_mul(unit, m)) for s, m in tail.runs)
    return SignExpansion(runs)


def _ordinal_prefix(terms):
    """Length of the longest leading run of terms forming an ordinal."""
    n = 0
    for c, e in terms:
        if c <= 0 or c.denominator != 1 or to_ordinal(e) is None:
            break
        n += 1
    return n


def to_signexp(x) -> SignExpansion:
    x = Number.coerce(x)
    if x.is_zero():
        return SignExpansion()
    if not x.is_polynomial():
        raise Unconvertible(f"{x} is a proper fraction")
    if x.sign() < 0:
        return to_signexp(-x).negate()
    if x.is_rational():
        try:
            return from_dyadic(x.rational())
        except NonDyadic as exc:
            raise Unconvertible(str(exc)) from None
    alpha = to_ordinal(x)
    if alpha is not None:
        return SignExpansion([(PLUS, alpha)])
    terms = x.terms()
    n = _ordinal_prefix(terms)
    if n:
        head = to_ordinal(Number._make(terms[:n], None))
        rest = Number._make(terms[n:], None)
        return SignExpansion([(PLUS, head)]).concat(to_signexp(rest))
    if len(terms) == 1:
        c, y = terms[0]
        if not _is_dyadic(c):
            raise Unconvertible(f"coefficient {c} is not dyadic")
        return _encode_monomial(c, to_signexp(y))
    raise Unconvertible(f"{x} is outside the supported shape family")


def is_convertible(x) -> bool:
    try:
        to_signexp(x)
    except Unconvertible:
        return False
    return True


def length_of(x) -> Ordinal:
    return to_signexp(x).length()


# --- decoding ----------------------------------------------------------------

def _monomial_candidates(s: SignExpansion):
    """Yield (c, y-sign-expansion) splits of s under the monomial rule."""
    runs = list(s.runs)
    first = ord_left_sub(ORD_ONE, runs[0][1])
    body = ([(PLUS, first)] if first else []) + runs[1:]

    def tail_from(i, unit, head):
        """Divide runs[i:] by w^unit; ``head`` is an already split first run."""
        out = [(PLUS, ORD_ONE)] + head
        for sg, k in body[i:]:
            m, r = ord_split_at_power(k, unit)
            if r or not m:
                return None
            out.append((sg, m))
        sig = SignExpansion(out)
        if not sig.is_finite():
            return None
        return to_dyadic(sig)

    def walk(i, p, yruns):
        ysig = SignExpansion(yruns)
        # tail starts exactly at run i
        c = tail_from(i, p, [])
        if c is not None:
            yield c, ysig
        if i >= len(body):
            return
        sg, k = body[i]
        if sg == PLUS:
            if len(k.terms) == 1 and k.terms[0][1] == 1:
                e = k.terms[0][0]
                if ord_cmp(e, ord_add(p, ORD_ONE)) >= 0:
                    yield from walk(i + 1, e, yruns + [(PLUS, ord_left_sub(p, e))])
            if k.terms:
                e, n = k.terms[0]
                if len(k.terms) == 1 and n > 1 and ord_cmp(e, ord_add(p, ORD_ONE)) >= 0:
                    c = tail_from(i + 1, e, [(PLUS, Ordinal.nat(n - 1))])
                    if c is not None:
                        yield c, SignExpansion(yruns + [(PLUS, ord_left_sub(p, e))])
        else:
            q = ord_add(p, ORD_ONE)
            kk, r = ord_split_at_power(k, q)
            if kk and not r:
                yield from walk(i + 1, p, yruns + [(MINUS, kk)])
            if kk and r:
                m, r2 = ord_split_at_power(r, p)
                if m and not r2:
                    c = tail_from(i + 1, p, [(MINUS, m)])
                    if c is not None:
                        yield c, SignExpansion(yruns + [(MINUS, kk)])

    yield from walk(0, ORD_ZERO, [])


def from_signexp(s: SignExpansion) -> Number:
    if not s.runs:
        return ZERO
    if s.is_finite():
        return Number.coerce(to_dyadic(s))
    if s.runs[0][0] == MINUS:
        return -from_signexp(s.negate())
    if len(s.runs) == 1:
        return from_ordinal(s.runs[0][1])
    for c, ysig in _monomial_candidates(s):
        if not c or c < 0 or ysig == s:
            continue
        try:
            y = from_signexp(ysig)
        except Unconvertible:
            continue
        cand = monomial(c, y)
        if _reencodes(cand, s):
            return cand
    head = s.runs[0][1]
    splits = [
        Ordinal._raw(head.terms[:i] + ((e, j),))
        for i, (e, c) in enumerate(head.terms)
        for j in range(1, c + 1)
    ]
    for alpha in splits:
        rest = s.suffix(alpha)
        try:
            z = from_signexp(rest)
        except Unconvertible:
            continue
        if z.is_zero():
            continue
        cand = from_ordinal(alpha) + z
        if _reencodes(cand, s):
            return cand
    raise Unconvertible(f"sign expansion {s} is outside the supported family")


def _reencodes(x: Number, s: SignExpansion) -> bool:
    try:
        return to_signexp(x) == s
    except Unconvertible:
        return False
