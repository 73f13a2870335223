"""Surreal numbers as run-length encoded sign sequences.

A sign expansion is a tuple of maximal runs ``(sign, count)`` with sign in
{+1, -1} and an ordinal count >= 1.  Transfinite runs are exact values, so
order, simplicity and ``A|B`` never iterate over individual signs.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Iterable

from .errors import NonDyadic, NotSeparated
from .ordinal import ONE, ZERO, Ordinal, ord_add, ord_cmp, ord_left_sub

PLUS, MINUS = 1, -1


@total_ordering
class SignExpansion:
    __slots__ = ("runs",)

    def __init__(self, runs: Iterable = ()):
        merged = []
        for sign, count in runs:
            if sign not in (PLUS, MINUS):
                raise ValueError(f"bad sign {sign!r}")
            count = Ordinal.coerce(count)
            if count.is_zero():
                continue
            if merged and merged[-1][0] == sign:
                merged[-1] = (sign, ord_add(merged[-1][1], count))
            else:
                merged.append((sign, count))
        self.runs = tuple(merged)

    @classmethod
    def parse(cls, text: str) -> "SignExpansion":
        """Parse the compact ``+^w -^1`` rendering (counts in ordinal syntax)."""
        from .parser import parse_ordinal

        text = text.strip()
        if text in ("", "0", "()"):
            return cls()
        runs = []
        for tok in text.split():
            sign = PLUS if tok[0] == "+" else MINUS if tok[0] == "-" else None
            if sign is None:
                raise ValueError(f"bad run {tok!r}")
            count = parse_ordinal(tok[2:]) if tok[1:2] == "^" else ONE
            runs.append((sign, count))
        return cls(runs)

    def __eq__(self, other):
        if not isinstance(other, SignExpansion):
            return NotImplemented
        return self.runs == other.runs

    def __lt__(self, other):
        return seq_cmp(self, other) < 0

    def __hash__(self):
        return hash(self.runs)

    def __bool__(self):
        return bool(self.runs)

    def __str__(self):
        if not self.runs:
            return "0"
        return " ".join(f"{'+' if s > 0 else '-'}^{c}" for s, c in self.runs)

    def __repr__(self):
        return f"SignExpansion({self})"

    def to_json(self):
        return [{"sign": "+" if s > 0 else "-", "count": str(c)} for s, c in self.runs]

    # structure ----------------------------------------------------------
    def length(self) -> Ordinal:
        total = ZERO
        for _, c in self.runs:
            total = ord_add(total, c)
        return total

    def is_finite(self) -> bool:
        return all(c.is_finite() for _, c in self.runs)

    def negate(self) -> "SignExpansion":
        return SignExpansion((-s, c) for s, c in self.runs)

    def concat(self, other: "SignExpansion") -> "SignExpansion":
        return SignExpansion(self.runs + other.runs)

    def append(self, sign: int, count=ONE) -> "SignExpansion":
        return SignExpansion(self.runs + ((sign, count),))

    def sign_at(self, pos: Ordinal) -> int:
        """The sign at ordinal position ``pos``, or 0 past the end."""
        pos = Ordinal.coerce(pos)
        start = ZERO
        for s, c in self.runs:
            end = ord_add(start, c)
            if ord_cmp(pos, end) < 0:
                return s
            start = end
        return 0

    def prefix(self, n: Ordinal) -> "SignExpansion":
        n = Ordinal.coerce(n)
        out, start = [], ZERO
        for s, c in self.runs:
            end = ord_add(start, c)
            if ord_cmp(end, n) <= 0:
                out.append((s, c))
                start = end
                continue
            if ord_cmp(start, n) < 0:
                out.append((s, ord_left_sub(start, n)))
            break
        return SignExpansion(out)

    def suffix(self, n: Ordinal) -> "SignExpansion":
        """Everything after the first ``n`` signs."""
        n = Ordinal.coerce(n)
        out, start = [], ZERO
        for s, c in self.runs:
            end = ord_add(start, c)
            if ord_cmp(end, n) <= 0:
                start = end
                continue
            if ord_cmp(start, n) >= 0:
                out.append((s, c))
            else:
                out.append((s, ord_left_sub(n, end)))
            start = end
        return SignExpansion(out)


def seq_cmp(a: SignExpansion, b: SignExpansion) -> int:
    """Lexicographic comparison with - < 0 < +."""
    ra, rb = a.runs, b.runs
    for i in range(max(len(ra), len(rb))):
        if i >= len(ra):
            return -rb[i][0]
        if i >= len(rb):
            return ra[i][0]
        (sa, ca), (sb, cb) = ra[i], rb[i]
        if sa != sb:
            return 1 if sa > sb else -1
        c = ord_cmp(ca, cb)
        if c == 0:
            continue
        # the shorter run is followed by its next sign (opposite) or by 0
        if c < 0:
            nxt = ra[i + 1][0] if i + 1 < len(ra) else 0
            return (nxt > sa) - (nxt < sa)
        nxt = rb[i + 1][0] if i + 1 < len(rb) else 0
        return (sb > nxt) - (sb < nxt)
    return 0


def is_simpler(a: SignExpansion, b: SignExpansion) -> bool:
    """``a <=_s b``: a is an initial segment of b."""
    ra, rb = a.runs, b.runs
    if len(ra) > len(rb):
        return False
    for i, (s, c) in enumerate(ra):
        sb, cb = rb[i]
        if s != sb:
            return False
        if i < len(ra) - 1:
            if c != cb:
                return False
        elif ord_cmp(c, cb) > 0:
            return False
    return True


def common_prefix(a: SignExpansion, b: SignExpansion) -> SignExpansion:
    out = []
    for (sa, ca), (sb, cb) in zip(a.runs, b.runs):
        if sa != sb:
            break
        if ca == cb:
            out.append((sa, ca))
            continue
        out.append((sa, ca if ord_cmp(ca, cb) < 0 else cb))
        break
    return SignExpansion(out)


def _leading_run(r: SignExpansion, sign: int) -> Ordinal:
    if r.runs and r.runs[0][0] == sign:
        return r.runs[0][1]
    return ZERO


def simplest_below(r: SignExpansion) -> SignExpansion:
    """The simplest x with x < r."""
    k = _leading_run(r, MINUS)
    if len(r.runs) <= (1 if k else 0):
        return SignExpansion([(MINUS, ord_add(k, ONE))])
    return SignExpansion([(MINUS, k)])


def simplest_above(r: SignExpansion) -> SignExpansion:
    return simplest_below(r.negate()).negate()


def simplest_between(A: Iterable[SignExpansion], B: Iterable[SignExpansion]) -> SignExpansion:
    """The simplest x with A < x < B, for finite sets A and B."""
    A, B = list(A), list(B)
    for a in A:
        for b in B:
            if seq_cmp(a, b) >= 0:
                raise NotSeparated(f"{a} is not below {b}")
    lo = max(A, default=None)
    hi = min(B, default=None)
    if lo is None and hi is None:
        return SignExpansion()
    if lo is None:
        return simplest_below(hi)
    if hi is None:
        return simplest_above(lo)
    c = common_prefix(lo, hi)
    n = c.length()
    s_lo, s_hi = lo.sign_at(n), hi.sign_at(n)
    if s_lo == MINUS and s_hi == PLUS:
        return c
    after = ord_add(n, ONE)
    if s_lo == 0:
        return c.append(PLUS).concat(simplest_below(hi.suffix(after)))
    return c.append(MINUS).concat(simplest_above(lo.suffix(after)))


# encodings ---------------------------------------------------------------

def from_ordinal(alpha: Ordinal) -> SignExpansion:
    return SignExpansion([(PLUS, Ordinal.coerce(alpha))])


def negate(a: SignExpansion) -> SignExpansion:
    return a.negate()


def length(a: SignExpansion) -> Ordinal:
    return a.length()


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def from_dyadic(q) -> SignExpansion:
    q = Fraction(q)
    if not _is_dyadic(q):
        raise NonDyadic(f"{q} is not dyadic")
    if q < 0:
        return from_dyadic(-q).negate()
    if q.denominator == 1:
        return SignExpansion([(PLUS, int(q))])
    n = q.numerator // q.denominator
    signs = [PLUS] * (n + 1)
    value, step = Fraction(n + 1), Fraction(1, 2)
    while value != q:
        if value > q:
            signs.append(MINUS)
            value -= step
        else:
            signs.append(PLUS)
            value += step
        step /= 2
    return SignExpansion((s, 1) for s in signs)


def to_dyadic(a: SignExpansion) -> Fraction:
    """Decode a finite sign expansion."""
    if not a.is_finite():
        raise NonDyadic(f"{a} has infinite length")
    if not a.runs:
        return Fraction(0)
    s0, c0 = a.runs[0]
    value = Fraction(s0 * c0.finite_value())
    step = Fraction(1, 2)
    for s, c in a.runs[1:]:
        for _ in range(c.finite_value()):
            value += s * step
            step /= 2
    return value


def ordinal_lt_test(alpha: Ordinal, x: SignExpansion) -> bool:
    """``alpha < x``, computed lexicographically and via ``alpha+1 <=_s x``."""
    alpha = Ordinal.coerce(alpha)
    lex = seq_cmp(from_ordinal(alpha), x) < 0
    simp = is_simpler(from_ordinal(ord_add(alpha, ONE)), x)
    assert lex == simp, f"ordinal test disagreement at {alpha}, {x}"
    return lex


def enumerate_finite(max_len: int):
    """All sign expansions of finite length <= max_len."""
    level = [()]
    yield SignExpansion()
    for _ in range(max_len):
        nxt = []
        for signs in level:
            for s in (MINUS, PLUS):
                t = signs + (s,)
                nxt.append(t)
                yield SignExpansion((x, 1) for x in t)
        level = nxt
