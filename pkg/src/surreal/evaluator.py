"""Evaluation of parsed expressions by dispatch to the kernel modules."""
from __future__ import annotations

from fractions import Fraction

from . import transseries as T
from .conv import from_signexp, to_signexp
from .derivation import DEFAULT_CONFIG, DerivationConfig, check_hfield, check_sd, derive, derive_recursive
from .errors import (
    BadLeadingCoefficient,
    BadLogArgument,
    EvalError,
    NonzeroRealPart,
    SurrealError,
    Unconvertible,
    Unrepresentable,
)
from .explog import DEFAULT_TABLE, GhTable, exp_J, exp_trunc, log_monomial, log_trunc, power, leading_log
from .logatomic import kappa_at, lambda_at, paths_of
from .number import OMEGA, Number, cmp, decompose, geom_sum_S, omega_pow, prod_log_omega, to_ordinal
from .parser import BinOp, Call, Name, Node, Num, Omega, Pow, UMinus, Var, parse
from .signseq import simplest_between

__all__ = ["Evaluator", "evaluate", "CHECK_KINDS", "default_sd_report", "default_hfield_report"]

CHECK_KINDS = ("sd", "hfield", "cross", "commute", "order")
ORDERING = {-1: "LT", 0: "EQ", 1: "GT"}


def _w(e):
    return omega_pow(e)


def default_sd_report(cfg: DerivationConfig = DEFAULT_CONFIG):
    w = OMEGA
    return check_sd(
        rationals=[Fraction(3, 2), Fraction(-7), Fraction(0), Fraction(5, 8)],
        infinite=[w, w * w, _w(w), _w(_w(-1)), w + _w(-1), _w(Fraction(1, 2)), 3 * w - 2],
        purely_infinite=[w, w * w, 2 * w, w + _w(_w(-1)), _w(w), w * w - w],
        families=[[w, _w(-1), Number.coerce(3)], [_w(_w(-1)), _w(_w(-2)), _w(_w(-3))], [w * w, -w, _w(-2)]],
        cfg=cfg,
    )


def default_hfield_report(cfg: DerivationConfig = DEFAULT_CONFIG):
    w = OMEGA
    lw = _w(_w(-1))
    return check_hfield(
        above=[w, w * w, _w(w), lw, w * lw, w + 5, _w(Fraction(1, 3))],
        bounded=[1 + _w(-1), Number.coerce(Fraction(2, 3)), _w(-2) - 4, 1 / (1 - _w(-1))],
        grarch_pairs=[(w * w, w), (_w(w), w), (_w(w * w), _w(w)), (w, lw), (w * lw, w)],
        logdiff_pairs=[(w * w, w), (_w(w), w), (_w(w), w * w), (w * w * w, w + lw)],
        cfg=cfg,
    )


class Evaluator:
    """Evaluates syntax trees; errors carry the position of the failing node."""

    def __init__(self, cfg: DerivationConfig = DEFAULT_CONFIG, cross_check: bool = False, table: GhTable | None = None):
        self.cfg = cfg
        self.cross_check = cross_check
        self.table = table or DEFAULT_TABLE

    def run(self, text: str):
        return self.eval(parse(text))

    def eval(self, node: Node):
        try:
            return self._eval(node)
        except SurrealError as exc:
            exc.info.setdefault("position", node.pos)
            raise

    # numbers ---------------------------------------------------------------------
    def number(self, node: Node) -> Number:
        v = self.eval(node)
        if not isinstance(v, Number):
            raise EvalError(f"expected a number, got {type(v).__name__}", position=node.pos)
        return v

    def ordinal(self, node: Node):
        alpha = to_ordinal(self.number(node))
        if alpha is None:
            raise EvalError("expected an ordinal", position=node.pos)
        return alpha

    def natural(self, node: Node) -> int:
        alpha = self.ordinal(node)
        if not alpha.is_finite():
            raise EvalError("expected a natural number", position=node.pos)
        return alpha.finite_value()

    def rational(self, node: Node) -> Fraction:
        v = self.number(node)
        if not v.is_rational():
            raise EvalError("expected a rational number", position=node.pos)
        return v.rational()

    def _eval(self, node: Node):
        if isinstance(node, Num):
            return Number.coerce(node.value)
        if isinstance(node, Omega):
            return OMEGA
        if isinstance(node, Var):
            raise EvalError("x is only meaningful inside check(commute, ...) and check(order, ...)", position=node.pos)
        if isinstance(node, Name):
            raise EvalError(f"unknown name {node.name!r}", position=node.pos)
        if isinstance(node, UMinus):
            return -self.number(node.arg)
        if isinstance(node, BinOp):
            a, b = self.number(node.left), self.number(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
        if isinstance(node, Pow):
            e = self.number(node.exponent)
            if isinstance(node.base, Omega):
                return omega_pow(e)
            if not e.is_rational():
                raise EvalError("only w may be raised to a non-rational power", position=node.pos)
            return power(self.number(node.base), e.rational())
        if isinstance(node, Call):
            return getattr(self, "_call_" + node.name)(node, *node.args)
        raise EvalError(f"cannot evaluate {node!r}", position=node.pos)

    # calls --------------------------------------------------------------------------
    def _call_exp(self, node, arg, n=None):
        x = self.number(arg)
        if n is not None:
            return exp_trunc(x, self.natural(n), self.table)
        inf, real, eps = decompose(x, self.cfg.term_cap)
        if real:
            raise NonzeroRealPart(f"exp({x}): real part {real} is not 0")
        if not eps.is_zero():
            raise Unrepresentable(f"exp({x}) is an infinite series; pass a term count: exp(x, n)")
        return exp_J(x, self.table)

    def _call_log(self, node, arg, n=None):
        x = self.number(arg)
        if n is not None:
            return log_trunc(x, self.natural(n), self.table)
        if x.is_monomial():
            return log_monomial(x, self.table)
        if x.sign() <= 0:
            raise BadLogArgument(f"log({x}): argument must be positive")
        if x.leading()[0] != 1:
            raise BadLeadingCoefficient(f"log({x}): leading coefficient {x.leading()[0]} is not 1")
        raise Unrepresentable(f"log({x}) is an infinite series; pass a term count: log(x, n)")

    def _call_pow(self, node, a, r):
        return power(self.number(a), self.rational(r))

    def _call_lambda(self, node, m, alpha):
        return lambda_at(self.natural(m), self.ordinal(alpha), self.table)

    def _call_kappa(self, node, alpha):
        return kappa_at(self.ordinal(alpha), self.table)

    def _call_logw(self, node, alpha):
        return lambda_at(0, self.ordinal(alpha), self.table)

    def _call_S(self, node, alpha):
        return geom_sum_S(self.ordinal(alpha))

    def _call_prodlogw(self, node, alpha):
        return prod_log_omega(self.ordinal(alpha))

    def _call_D(self, node, arg):
        x = self.number(arg)
        d = derive(x, self.cfg, self.table)
        if self.cross_check:
            r = derive_recursive(x, self.cfg, self.table)
            if d != r:
                raise EvalError(f"cross-check mismatch: paths give {d}, recursion gives {r}", position=node.pos)
        return d

    def _call_cmp(self, node, a, b):
        return ORDERING[cmp(self.number(a), self.number(b))]

    def _call_signexp(self, node, arg):
        return to_signexp(self.number(arg))

    def _call_simplest(self, node, a, b):
        s = simplest_between([to_signexp(self.number(a))], [to_signexp(self.number(b))])
        try:
            return from_signexp(s)
        except Unconvertible:
            return s

    def _call_paths(self, node, arg):
        return paths_of(self.number(arg), self.cfg.branch_cap, self.cfg.depth_cap, self.table, self.cfg.term_cap)

    def _call_g(self, node, arg):
        return self.table.g(self.number(arg))

    def _call_h(self, node, arg):
        return self.table.h(self.number(arg))

    def _call_ell(self, node, arg):
        return leading_log(self.number(arg), self.table)

    def _call_check(self, node, kind, *rest):
        if not isinstance(kind, Name) or kind.name not in CHECK_KINDS:
            raise EvalError(f"check kind must be one of {', '.join(CHECK_KINDS)}", position=kind.pos)
        want = {"sd": 0, "hfield": 0, "cross": 1, "commute": 1, "order": 2}[kind.name]
        if len(rest) != want:
            raise EvalError(f"check({kind.name}) takes {want} further arguments", position=node.pos)
        if kind.name == "sd":
            return default_sd_report(self.cfg)
        if kind.name == "hfield":
            return default_hfield_report(self.cfg)
        if kind.name == "cross":
            x = self.number(rest[0])
            lhs, rhs = derive(x, self.cfg, self.table), derive_recursive(x, self.cfg, self.table)
            return {"identity": f"D({x}) by paths = by recursion", "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}
        if kind.name == "commute":
            return T.check_commute(self.texpr(rest[0]), self.cfg)
        rep = T.check_order_embedding([(self.texpr(rest[0]), self.texpr(rest[1]))], self.cfg)
        return rep["checks"][0]

    # transseries expressions ------------------------------------------------------------
    def texpr(self, node: Node) -> T.TExpr:
        if isinstance(node, Var):
            return T.X
        if isinstance(node, Num):
            return T.Const(node.value)
        if isinstance(node, UMinus):
            return -self.texpr(node.arg)
        if isinstance(node, BinOp):
            a, b = self.texpr(node.left), self.texpr(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
        if isinstance(node, Pow):
            n = self.rational(node.exponent)
            if n.denominator != 1:
                raise EvalError("transseries powers must be integers", position=node.pos)
            return T.intpow(self.texpr(node.base), int(n))
        if isinstance(node, Call) and node.name in ("exp", "log") and len(node.args) == 1:
            inner = self.texpr(node.args[0])
            return T.Exp(inner) if node.name == "exp" else T.Log(inner)
        raise EvalError("not a transseries expression in x", position=node.pos)


def evaluate(text: str, **kwargs):
    return Evaluator(**kwargs).run(text)
