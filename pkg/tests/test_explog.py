import random
from fractions import Fraction

import pytest

from surreal.errors import (
    BadLeadingCoefficient,
    BadLogArgument,
    DomainError,
    InexactPower,
    NonzeroRealPart,
    NotPurelyInfinite,
    Undetermined,
)
from surreal.explog import GhTable, exp_J, exp_trunc, g_map, h_map, log_monomial, log_trunc, power, leading_log
from surreal.logatomic import lambda_at
from surreal.number import OMEGA, ONE, ZERO, Number, from_ordinal, omega_pow
from surreal.ordinal import OMEGA as W
from surreal.ordinal import Ordinal
from surreal.parser import parse_number as P

w = OMEGA
q = Fraction


def test_g_closed_forms():
    assert g_map(1) == 1
    assert g_map(7) == 7
    assert g_map(P("w^-1")) == 0
    assert g_map(w) == w
    assert g_map(P("w^-w")) == P("-w+1")
    assert g_map(P("w^-2")) == -1


def test_g_rejects_nonpositive():
    with pytest.raises(DomainError):
        g_map(0)
    with pytest.raises(DomainError):
        g_map(-w)


def test_h_closed_forms():
    assert h_map(0) == P("w^-1")
    assert h_map(-1) == P("w^-2")
    assert h_map(1) == 1
    assert h_map(w) == w
    assert h_map(-w) == P("w^(-w-1)")


def test_h_on_dyadics():
    assert h_map(q(1, 2)) == q(1, 2)
    assert h_map(q(-1, 2)) == P("w^-1/2")
    assert h_map(q(-1, 4)) == P("3/4*w^-1")
    assert h_map(q(-3, 2)) == P("w^-2/2")


def test_h_on_sign_patterns():
    # the chain used by the lambda numbers
    assert h_map(P("-w+1")) == P("w^-w")
    assert h_map(P("-w+2")) == P("2*w^-w")


def test_g_inverts_h():
    for y in [P(t) for t in ["0", "-1", "-2", "1", "2", "w", "-w", "-w+1", "-w*2", "1/2", "-1/2", "-3/2"]]:
        x = h_map(y)
        assert g_map(x, table=GhTable()) == y


def test_g_search_limit():
    with pytest.raises(Undetermined):
        g_map(P("w^(-w^-1)"), table=GhTable(cap=16))


def test_exp_examples():
    assert exp_J(w) == P("w^w")
    assert exp_J(w * w) == P("w^(w^2)")
    assert exp_J(P("w^(w^-1)")) == w
    assert exp_J(2 * w - w * w) == P("w^(2*w - w^2)")
    with pytest.raises(NotPurelyInfinite):
        exp_J(w + 1)


def test_log_examples():
    assert log_monomial(w) == P("w^(w^-1)")
    assert log_monomial(P("w^w")) == w
    for k in range(6):
        a = from_ordinal(Ordinal.nat(k))
        assert log_monomial(omega_pow(omega_pow(-a))) == omega_pow(omega_pow(-(a + 1)))
    a = from_ordinal(W)
    assert log_monomial(omega_pow(omega_pow(-a))) == omega_pow(omega_pow(-a - 1))
    with pytest.raises(BadLogArgument):
        log_monomial(w + 1)


def test_exp_log_coherence_random():
    rng = random.Random(5)
    pool = [w, P("w^2"), P("w^(1/2)"), P("w^w"), P("w^(w^-1)"), P("w^(w+1)"), P("w^(w^-2)")]
    for _ in range(40):
        j = ZERO
        for m in rng.sample(pool, rng.randint(1, 3)):
            j = j + Number.coerce(q(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3))) * m
        m = exp_J(j)
        assert m.is_monomial()
        assert log_monomial(m) == j
        assert exp_J(log_monomial(m)) == m


def test_exp_of_sum_and_log_of_product():
    a, b = P("w^2"), P("-3*w^(w^-1)")
    assert exp_J(a + b) == exp_J(a) * exp_J(b)
    m1, m2 = P("w^(w+1)"), P("w^(w^-1)")
    assert log_monomial(m1 * m2) == log_monomial(m1) + log_monomial(m2)


def test_lambda_power_rule():
    for k in range(3):
        lam = lambda_at(0, Ordinal.nat(k))
        assert power(lam, q(3, 2)) == omega_pow(q(3, 2) * omega_pow(-k))


def test_leading_log():
    assert leading_log(5 * w * w) == P("2*w^(w^-1)")
    assert leading_log(Number.coerce(q(7, 3))) == 0
    assert leading_log(P("w^w")) == w
    assert leading_log(P("1/(1 - w^-1)")) == 0


def test_truncated_series():
    assert exp_trunc(P("w^-1"), 2) == P("1 + w^-1 + w^-2/2")
    assert log_trunc(P("1 + w^-1"), 2) == P("w^-1 - w^-2/2")
    assert exp_trunc(P("w + w^-1"), 1) == P("w^w * (1 + w^-1)")
    with pytest.raises(NonzeroRealPart):
        exp_trunc(w + 1, 3)
    with pytest.raises(BadLeadingCoefficient):
        log_trunc(2 * w + 1, 3)


def test_power():
    assert power(w, q(1, 2)) == P("w^(1/2)")
    assert power(P("1 + w^-1"), 2) == P("1 + 2*w^-1 + w^-2")
    assert power(P("1 + w^-1"), -1) == P("1/(1 + w^-1)")
    assert power(ONE, q(1, 3)) == ONE
    with pytest.raises(InexactPower):
        power(P("1 + w^-1"), q(1, 2))
