"""The surreal derivation on the representable fragment.

Two independent routes are provided:

* ``derive`` sums path derivatives: for a path ending at a log-atomic entry,
  the product of the earlier entries times the entry's coefficient times
  ``dA`` of its monomial;
* ``derive_recursive`` uses ``d(w^b) = w^b * sum b_y d(w^h(y))`` and stops at
  recognized log-atomic monomials.

Fractions are differentiated with the quotient rule in both routes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DepthExceeded, SurrealError, UndeterminedPath
from .explog import GhTable, exp_J, log_monomial, leading_log
from .logatomic import DEAD, HIT, LogAtomicShape, is_log_atomic, kleq, lambda_at, paths_of
from .number import ONE, ZERO, Number, cmp, decompose, expand, geom_sum_S, monomial, omega_pow, prod_log_omega
from .ordinal import OMEGA as ORD_OMEGA

__all__ = [
    "DerivationConfig",
    "dA_rules",
    "dA_quotient",
    "path_derivative",
    "derive",
    "derive_recursive",
    "log_derivative",
    "check_sd",
    "check_hfield",
]


@dataclass(frozen=True)
class DerivationConfig:
    depth_cap: int = 64
    branch_cap: int = 4096
    term_cap: int = 1024

    def __post_init__(self):
        for name in ("depth_cap", "branch_cap", "term_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


DEFAULT_CONFIG = DerivationConfig()


# the pre-derivation on log-atomic numbers ------------------------------------------

def dA_rules(shape: LogAtomicShape, table: GhTable | None = None) -> Number:
    """d(exp_m(log_a w)) = exp_1 ... exp_m of log_a w, divided by prod_(b<a) log_b w."""
    if table is None:
        return _dA_rules_default(shape)
    return _dA_rules(shape, table)


@lru_cache(maxsize=None)
def _dA_rules_default(shape: LogAtomicShape) -> Number:
    return _dA_rules(shape, None)


def _dA_rules(shape: LogAtomicShape, table) -> Number:
    out = ONE / prod_log_omega(shape.base)
    for k in range(1, shape.tower + 1):
        out = out * lambda_at(k, shape.base, table)
    return out


def dA_quotient(shape: LogAtomicShape, table: GhTable | None = None) -> Number:
    """The quotient of prod_n log_n(lam) by prod of log_b w over the b it reaches.

    The numerator's entries are computed by iterated logarithms of the value
    until one of them is log_b w for b in the K-class of the base; from there
    on the numerator and denominator share the tail prod_j log_(b+j) w.
    """
    anchor = LogAtomicShape(0, shape.base.limit_part())
    if not (kleq(shape, anchor) and kleq(anchor, shape)):
        raise SurrealError(f"{shape} is not K-equivalent to {anchor}")
    head = ONE
    v = shape.value(table)
    current = shape
    for _ in range(shape.tower + shape.base.finite_part() + 1):
        if current.tower == 0:
            break
        head = head * v
        v = log_monomial(v, table)
        current = current.log()
    else:
        raise SurrealError(f"no tail split found for {shape}")
    if v != lambda_at(0, current.base, table):
        raise SurrealError(f"log chain of {shape} left the expected shape")
    # denominator: prod over b < current.base, times the shared tail
    return head / prod_log_omega(current.base)


# paths --------------------------------------------------------------------------------

def path_derivative(path, table: GhTable | None = None) -> Number:
    if path.status == DEAD:
        return ZERO
    if path.status != HIT:
        raise UndeterminedPath(f"path undetermined: {path.reason}", path=path)
    prefix = ONE
    for c, m in path.entries[:-1]:
        prefix = prefix * monomial(c, m.monomial_exponent())
    c, m = path.entries[-1]
    value = prefix * dA_rules(path.shape, table) * c
    # one resolution step further must agree: d(m) = m * d(log m)
    deeper = prefix * monomial(c, m.monomial_exponent()) * dA_rules(path.shape.log(), table)
    if value != deeper:
        raise SurrealError(f"path derivative depends on resolution depth at {m}")
    return value


def _quotient_rule(a: Number, d) -> Number:
    num = Number._make(a.num, None)
    den = Number._make(a.den, None)
    return (d(num) * den - num * d(den)) / (den * den)


def derive(a, cfg: DerivationConfig = DEFAULT_CONFIG, table: GhTable | None = None) -> Number:
    """The derivation by summation over paths."""
    a = Number.coerce(a)
    if not a.is_polynomial():
        return _quotient_rule(a, lambda x: derive(x, cfg, table))
    total = ZERO
    for p in paths_of(a, cfg.branch_cap, cfg.depth_cap, table, cfg.term_cap):
        total = total + path_derivative(p, table)
    return total


def derive_recursive(a, cfg: DerivationConfig = DEFAULT_CONFIG, table: GhTable | None = None) -> Number:
    """The derivation by recursion on exponents."""
    a = Number.coerce(a)
    if not a.is_polynomial():
        return _quotient_rule(a, lambda x: derive_recursive(x, cfg, table))
    memo: dict = {}

    def d_monomial(b: Number, depth: int) -> Number:
        if b.is_zero():
            return ZERO
        if b in memo:
            return memo[b]
        if depth > cfg.depth_cap:
            raise DepthExceeded(f"recursion deeper than {cfg.depth_cap} at w^{b}")
        m = omega_pow(b)
        shape = is_log_atomic(m, cfg.depth_cap, table) if b.sign() > 0 else None
        if shape is not None:
            out = dA_rules(shape, table)
        else:
            inner = ZERO
            for c, y in log_monomial(m, table).terms():
                inner = inner + d_monomial(y, depth + 1) * c
            out = m * inner
        memo[b] = out
        return out

    terms, done = expand(a, cfg.term_cap)
    if not done:
        raise SurrealError(f"{a} has more than {cfg.term_cap} terms")
    total = ZERO
    for c, b in terms:
        total = total + d_monomial(b, 0) * c
    return total


def log_derivative(f, cfg: DerivationConfig = DEFAULT_CONFIG) -> Number:
    """f' / f."""
    f = Number.coerce(f)
    return derive(f, cfg) / f


# property checks ------------------------------------------------------------------------

def _entry(identity: str, lhs, rhs, equal: bool):
    return {"identity": identity, "lhs": str(lhs), "rhs": str(rhs), "equal": bool(equal)}


def _report(entries):
    return {"checks": entries, "violations": sum(not e["equal"] for e in entries)}


def s_omega_termwise(n_terms: int) -> Number:
    """The first n terms of the termwise derivative of sum_n w^-n."""
    total = ZERO
    for n in range(1, n_terms + 1):
        total = total + monomial(-n, -(n + 1))
    return total


def s_omega_derivative_closed() -> Number:
    """Closed form of the sum of -n w^(-n-1): -w^-2 / (1 - w^-1)^2."""
    q = ONE - omega_pow(-1)
    return -omega_pow(-2) / (q * q)


def check_sd(rationals=(), infinite=(), purely_infinite=(), families=(), cfg: DerivationConfig = DEFAULT_CONFIG, preview: int = 10):
    """Report on the derivation axioms over the given samples."""
    out = []
    for q in rationals:
        d = derive(q, cfg)
        out.append(_entry(f"SD1 d({q}) = 0", d, 0, d.is_zero()))
    for a in infinite:
        a = Number.coerce(a)
        d = derive(a, cfg)
        out.append(_entry(f"SD2 d({a}) > 0", d, 0, d.sign() > 0))
    for j in purely_infinite:
        e = exp_J(j)
        lhs, rhs = derive(e, cfg), derive(j, cfg) * e
        out.append(_entry(f"SD3 d(exp({j})) = d({j}) exp({j})", lhs, rhs, lhs == rhs))
    for fam in families:
        fam = [Number.coerce(x) for x in fam]
        total = ZERO
        for x in fam:
            total = total + x
        lhs = derive(total, cfg)
        rhs = ZERO
        for x in fam:
            rhs = rhs + derive(x, cfg)
        out.append(_entry(f"SD4 d(sum of {len(fam)} terms)", lhs, rhs, lhs == rhs))
    s = geom_sum_S(ORD_OMEGA)
    lhs = derive(s, cfg)
    rhs = s_omega_derivative_closed()
    out.append(_entry("SD4 d(S(w)) = -w^-2/(1-w^-1)^2", lhs, rhs, lhs == rhs))
    got, _ = expand(lhs, preview)
    want, _ = expand(s_omega_termwise(preview), preview)
    out.append(_entry(f"SD4 termwise sum agrees on {preview} terms", Number._make(got, None), Number._make(want, None), got == want))
    return _report(out)


def check_hfield(above=(), bounded=(), grarch_pairs=(), logdiff_pairs=(), cfg: DerivationConfig = DEFAULT_CONFIG):
    """Report on H1, H2, the grounded correspondence and the log-difference bound."""
    out = []
    for f in above:
        f = Number.coerce(f)
        d = derive(f, cfg)
        out.append(_entry(f"H1 d({f}) > 0", d, 0, d.sign() > 0))
    for b in bounded:
        b = Number.coerce(b)
        inf, real, eps = decompose(b)
        ok = not inf and (eps.is_zero() or cmp(eps.leading()[1], ZERO) < 0) and b == Number.coerce(real) + eps
        out.append(_entry(f"H2 {b} = real + infinitesimal", b, f"{real} + ({eps})", ok))
    for f, g in grarch_pairs:
        f, g = Number.coerce(f), Number.coerce(g)
        # archimedean classes of the valuations, compared through their leading exponents
        cf = f.leading()[1].leading()[1]
        cg = g.leading()[1].leading()[1]
        lf = log_derivative(f, cfg).leading()[1]
        lg = log_derivative(g, cfg).leading()[1]
        s = cmp(cf, cg)
        ok = cmp(lf, lg) == s
        out.append(_entry(f"grounded class order at ({f}, {g})", lf, lg, ok))
    for x, y in logdiff_pairs:
        x, y = Number.coerce(x), Number.coerce(y)
        diff = leading_log(derive(x, cfg)) - leading_log(derive(y, cfg))
        gap = x - y
        ok = diff.is_zero() or cmp(diff.leading()[1], gap.leading()[1]) < 0
        out.append(_entry(f"log-difference log d({x}) - log d({y}) dominated by {gap}", diff, gap, ok))
    return _report(out)
