import itertools

import pytest

from surreal.ordinal import OMEGA, ONE, ZERO, Ordinal, ord_add, ord_cmp, ord_left_sub, ord_mul, ord_omega_pow

W = OMEGA
n = Ordinal.nat


def grid():
    out = [n(0), n(1), n(2), n(5), W, W + 1, W * 2, W * 2 + 3, W * W, W * W + W, ord_omega_pow(W), ord_omega_pow(W) + W * 3]
    return out


def test_absorption():
    assert n(1) + W == W
    assert W + 1 != W
    assert n(3) + W * W == W * W
    assert W + W * W == W * W


def test_multiplication_is_not_commutative():
    assert n(2) * W == W
    assert W * 2 == W + W
    assert (W + 1) * 2 == W * 2 + 1
    assert (W + 1) * W == W * W


def test_omega_power_rendering():
    assert str(ord_omega_pow(W) + W * 3 + 2) == "w^(w)+w*3+2"
    assert str(W * W * 2) == "w^2*2"
    assert str(ZERO) == "0"


def test_order_is_total_and_strict():
    g = grid()
    for a, b in itertools.product(g, g):
        assert ord_cmp(a, b) == -ord_cmp(b, a)
        assert (ord_cmp(a, b) == 0) == (a == b)
    ordered = sorted(set(g))
    for a, b in zip(ordered, ordered[1:]):
        assert a < b


def test_addition_is_associative_and_monotone_on_the_right():
    g = grid()
    for a, b, c in itertools.product(g, repeat=3):
        assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
        if b < c:
            assert ord_add(a, b) < ord_add(a, c)


def test_multiplication_is_associative_and_distributes_on_the_left():
    g = grid()[:9]
    for a, b, c in itertools.product(g, repeat=3):
        assert ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c))
        assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))


def test_left_subtraction():
    g = grid()
    for a, b in itertools.product(g, g):
        if a <= b:
            assert ord_add(a, ord_left_sub(a, b)) == b


def test_finite_and_limit_parts():
    a = W * W + W * 3 + 4
    assert a.finite_part() == 4
    assert a.limit_part() == W * W + W * 3
    assert not a.is_limit()
    assert (W * 2).is_limit()
    assert n(7).finite_value() == 7
    assert ONE.is_finite()


def test_below_omega_pow_omega():
    assert (W * W * 5 + W).below_omega_pow_omega()
    assert not ord_omega_pow(W).below_omega_pow_omega()


def test_coefficients_must_be_positive():
    with pytest.raises(ValueError):
        Ordinal([(ZERO, 0)])
    with pytest.raises(ValueError):
        Ordinal([(ZERO, 1), (ONE, 1)])


def test_omega_towers_never_reach_a_fixed_point():
    x = W
    for _ in range(30):
        y = ord_omega_pow(x)
        assert x < y
        x = y
