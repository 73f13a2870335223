import random
from fractions import Fraction

import pytest

from surreal.errors import EvalError, ParseError, SurrealError
from surreal.evaluator import Evaluator, evaluate
from surreal.number import OMEGA, ONE, ZERO, monomial, omega_pow
from surreal.parser import BinOp, Call, Name, Num, Omega, Pow, UMinus, parse, parse_number, parse_ordinal
from surreal.ordinal import OMEGA as W
from surreal.signseq import SignExpansion


def test_parse_examples():
    assert parse("w^2 + 3*w") == BinOp(0, "+", Pow(0, Omega(), Num(0, Fraction(2))), BinOp(0, "*", Num(0, Fraction(3)), Omega()))
    assert parse("D(logw(w))") == Call(0, "D", (Call(0, "logw", (Omega(),)),))
    assert parse("1/(1 - w^-1)") == BinOp(0, "/", Num(0, Fraction(1)), BinOp(0, "-", Num(0, Fraction(1)), Pow(0, Omega(), UMinus(0, Num(0, Fraction(1))))))


def test_precedence():
    assert parse("-w^2") == UMinus(0, Pow(0, Omega(), Num(0, Fraction(2))))
    assert parse("w^w^2") == Pow(0, Omega(), Pow(0, Omega(), Num(0, Fraction(2))))
    assert parse_number("2^3^2") == 512
    assert parse_number("-w^-w^2") == -omega_pow(-omega_pow(2))
    assert parse_number("1 - 2 - 3") == -4
    assert parse_number("12/3/2") == 2
    assert parse_number("2.5") == Fraction(5, 2)


def test_errors_carry_positions():
    cases = {"w +": 3, "foo(1)": 0, "exp()": 0, "D(1, 2)": 0, "(w": 2, "w $ 1": 2, "3 4": 2}
    for text, pos in cases.items():
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.position == pos, text


def test_evaluation_errors_carry_positions():
    with pytest.raises(SurrealError) as info:
        evaluate("w + S(w^w)")
    assert info.value.info["position"] == 4
    with pytest.raises(EvalError) as info:
        evaluate("1 + x")
    assert info.value.info["position"] == 4
    with pytest.raises(EvalError):
        evaluate("lambda(1/2, 1)")


def test_unknown_names_do_not_crash():
    assert parse("foo") == Name(0, "foo")
    with pytest.raises(EvalError):
        evaluate("foo + 1")


def test_eval_examples():
    assert evaluate("D(w)") == 1
    assert evaluate("cmp(logw(1), w)") == "LT"
    assert evaluate("S(w)") == ONE / (ONE - omega_pow(-1))
    assert str(evaluate("S(w)")) == "1/(1 - w^-1)"
    assert evaluate("D(w^2)") == 2 * OMEGA
    assert evaluate("signexp(3/4)") == SignExpansion.parse("+ - +")
    assert evaluate("simplest(1, 2)") == Fraction(3, 2)
    assert evaluate("simplest(w, w^2)") == OMEGA + 1
    assert evaluate("kappa(1)") == evaluate("lambda(0, w)")
    assert evaluate("prodlogw(2)") == evaluate("w * log(w)")
    assert evaluate("pow(w, 1/2)") == evaluate("w^(1/2)")
    assert evaluate("exp(w^-1, 2)") == evaluate("1 + w^-1 + w^-2/2")
    assert evaluate("ell(5*w^2)") == evaluate("2*log(w)")


def test_cross_check_flag():
    ev = Evaluator(cross_check=True)
    assert ev.run("D(w^(w^-w))") == evaluate("1/prodlogw(w)")


def test_ordinal_arguments():
    assert parse_ordinal("w^2*3 + w + 1") == W * W * 3 + W + 1
    assert parse_ordinal("1 + w") == W + 1
    with pytest.raises(EvalError):
        parse_ordinal("w - 1")


def test_render_parse_round_trip():
    rng = random.Random(9)
    exps = [ZERO, ONE, -ONE, OMEGA, -OMEGA, omega_pow(-1), Fraction(1, 2), Fraction(-3, 2), omega_pow(OMEGA), OMEGA - 1, -omega_pow(-OMEGA)]
    for _ in range(300):
        x = ZERO
        for e in rng.sample(exps, rng.randint(1, 4)):
            x = x + monomial(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), e)
        if rng.random() < 0.3:
            d = ONE + monomial(Fraction(rng.randint(-3, 3) or 1), rng.choice([-ONE, -OMEGA, omega_pow(-1) * -1]))
            x = x / d
        assert parse_number(str(x)) == x, str(x)
