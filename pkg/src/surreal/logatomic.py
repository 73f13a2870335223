"""Log-atomic numbers of the form exp_m(log_a w) and paths through the terms of ell.

``lambda_at(m, a)`` is the log-atomic number with index ``m - a``, namely the
m-th exponential of ``log_a w = w^(w^-a)``.  A path starts at a term of x and
moves to a term of ``ell`` of the previous entry; it stops at the first entry
whose monomial is recognized as log-atomic, or dies at a real entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BranchCapExceeded, SurrealError, Undetermined, Unrepresentable
from .explog import GhTable, exp_J, log_monomial
from .number import Number, cmp, expand, from_ordinal, omega_pow, to_ordinal
from .ordinal import OMEGA as ORD_OMEGA
from .ordinal import Ordinal, ord_add, ord_mul

__all__ = [
    "LogAtomicShape",
    "lambda_at",
    "kappa_at",
    "is_log_atomic",
    "kleq",
    "Path",
    "paths_of",
    "HIT",
    "DEAD",
    "UNDETERMINED",
]

HIT, DEAD, UNDETERMINED = "HitLogAtomic", "DeadEnd", "Undetermined"


@dataclass(frozen=True)
class LogAtomicShape:
    """exp_m(log_a w); stored with m = 0 or a without a finite tail."""

    tower: int
    base: Ordinal

    def __post_init__(self):
        if self.tower < 0:
            raise ValueError("tower height must be a natural number")
        base = Ordinal.coerce(self.base)
        k = min(self.tower, base.finite_part())
        if k:
            head = base.limit_part()
            base = ord_add(head, Ordinal.nat(base.finite_part() - k))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "tower", self.tower - k)

    def index(self) -> Number:
        """The lambda index m - a."""
        return Number.coerce(self.tower) - from_ordinal(self.base)

    def log(self) -> "LogAtomicShape":
        if self.tower:
            return LogAtomicShape(self.tower - 1, self.base)
        return LogAtomicShape(0, ord_add(self.base, Ordinal.nat(1)))

    def value(self, table: GhTable | None = None) -> Number:
        return lambda_at(self.tower, self.base, table)

    def __str__(self):
        return f"exp_{self.tower}(log_{self.base} w)"


_LAMBDA_CACHE: dict = {}


def lambda_at(m: int, alpha, table: GhTable | None = None) -> Number:
    """lambda at index m - alpha, i.e. m exponentials of w^(w^-alpha)."""
    alpha = Ordinal.coerce(alpha)
    key = (m, alpha)
    if table is None and key in _LAMBDA_CACHE:
        return _LAMBDA_CACHE[key]
    v = omega_pow(omega_pow(-from_ordinal(alpha)))
    for _ in range(m):
        v = exp_J(v, table)
    if table is None:
        _LAMBDA_CACHE[key] = v
    return v


def kappa_at(alpha, table: GhTable | None = None) -> Number:
    return lambda_at(0, ord_mul(ORD_OMEGA, Ordinal.coerce(alpha)), table)


def _base_shape(v: Number):
    """The ordinal a when v = w^(w^-a), else None."""
    if not v.is_monomial():
        return None
    e = v.monomial_exponent()
    if not e.is_monomial():
        return None
    return to_ordinal(-e.monomial_exponent())


def is_log_atomic(x, cap: int = 64, table: GhTable | None = None):
    """The shape of x when x = exp_m(log_a w), None when some log leaves M."""
    x = Number.coerce(x)
    if not x.is_monomial() or x.monomial_exponent().sign() <= 0:
        return None
    v = x
    for k in range(cap):
        alpha = _base_shape(v)
        if alpha is not None:
            return LogAtomicShape(k, alpha)
        try:
            v = log_monomial(v, table)
        except SurrealError as exc:
            raise Undetermined(f"log-atomicity of {x}: {exc}", cap=cap) from None
        if not v.is_monomial():
            return None
    raise Undetermined(f"log-atomicity of {x} unresolved after {cap} logarithms", cap=cap)


def kleq(x: LogAtomicShape, y: LogAtomicShape) -> bool:
    """x <=^K y: x <= exp_n(y) for some natural n."""
    d = x.index() - y.index()
    if d.sign() <= 0:
        return True
    return cmp(d.leading()[1], Number.coerce(0)) <= 0


# paths --------------------------------------------------------------------------

@dataclass
class Path:
    entries: list = field(default_factory=list)  # (coefficient, monomial) pairs
    status: str = UNDETERMINED
    at: int = 0
    shape: LogAtomicShape | None = None
    reason: str = ""

    def to_json(self):
        return {
            "entries": [{"coefficient": str(c), "monomial": str(m)} for c, m in self.entries],
            "status": self.status,
            "at": self.at,
            "shape": None if self.shape is None else {"tower": self.shape.tower, "base": str(self.shape.base)},
            "reason": self.reason,
        }


def _terms(x: Number, cap: int):
    terms, done = expand(x, cap)
    if not done:
        raise Unrepresentable(f"{x} has more than {cap} terms")
    return terms


def paths_of(a, branch_cap: int = 4096, depth_cap: int = 64, table: GhTable | None = None, term_cap: int = 1024):
    """All paths starting at a term of a, explored depth first."""
    a = Number.coerce(a)
    out = []

    def visit(prefix, c: Fraction, e: Number):
        if len(out) >= branch_cap:
            raise BranchCapExceeded(f"more than {branch_cap} paths", partial=list(out))
        entries = prefix + [(c, omega_pow(e))]
        n = len(prefix)
        if e.is_zero():
            out.append(Path(entries, DEAD, n))
            return
        m = entries[-1][1]
        try:
            shape = is_log_atomic(m, depth_cap, table) if e.sign() > 0 else None
            if shape is not None:
                out.append(Path(entries, HIT, n, shape))
                return
            if n + 1 >= depth_cap:
                out.append(Path(entries, UNDETERMINED, n, reason=f"depth cap {depth_cap}"))
                return
            children = _terms(log_monomial(m, table), term_cap)
        except SurrealError as exc:
            out.append(Path(entries, UNDETERMINED, n, reason=str(exc)))
            return
        for c2, e2 in children:
            visit(entries, c2, e2)

    for c, e in _terms(a, term_cap):
        visit([], c, e)
    return out

