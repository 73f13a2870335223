"""Exact surreal arithmetic on the omega-series fragment, with exp, log and the derivation."""
from .derivation import DerivationConfig, derive, derive_recursive
from .errors import SurrealError
from .evaluator import evaluate
from .explog import exp_J, log_monomial
from .logatomic import kappa_at, lambda_at
from .number import OMEGA, ONE, ZERO, Number, omega_pow
from .ordinal import Ordinal
from .parser import parse, parse_number
from .signseq import SignExpansion

__all__ = [
    "DerivationConfig",
    "derive",
    "derive_recursive",
    "SurrealError",
    "evaluate",
    "exp_J",
    "log_monomial",
    "kappa_at",
    "lambda_at",
    "Number",
    "ZERO",
    "ONE",
    "OMEGA",
    "omega_pow",
    "Ordinal",
    "parse",
    "parse_number",
    "SignExpansion",
]
