import itertools
from fractions import Fraction

import pytest

from surreal.errors import NonDyadic, NotSeparated
from surreal.ordinal import OMEGA, Ordinal
from surreal.signseq import (
    MINUS,
    PLUS,
    SignExpansion,
    enumerate_finite,
    from_dyadic,
    from_ordinal,
    is_simpler,
    ordinal_lt_test,
    seq_cmp,
    simplest_between,
    to_dyadic,
)

W = OMEGA
n = Ordinal.nat
SMALL = list(enumerate_finite(5))


def se(text):
    return SignExpansion.parse(text)


def brute_simplest(lo, hi, pool):
    between = [x for x in pool if (lo is None or seq_cmp(lo, x) < 0) and (hi is None or seq_cmp(x, hi) < 0)]
    best = [x for x in between if all(is_simpler(x, y) for y in between)]
    assert len(best) == 1
    return best[0]


def test_small_corpus_size():
    assert len(SMALL) == 63


def test_simplest_between_matches_exhaustive_search():
    pool = list(enumerate_finite(6))
    for a, b in itertools.product(SMALL, SMALL):
        if seq_cmp(a, b) < 0:
            assert simplest_between([a], [b]) == brute_simplest(a, b, pool)
    for a in SMALL:
        assert simplest_between([a], []) == brute_simplest(a, None, pool)
        assert simplest_between([], [a]) == brute_simplest(None, a, pool)


def test_simplest_between_reconstructs_from_options():
    for b in SMALL:
        signs = [s for s, c in b.runs for _ in range(c.finite_value())]
        left = [SignExpansion((s, 1) for s in signs[:i]) for i, s in enumerate(signs) if s == PLUS]
        right = [SignExpansion((s, 1) for s in signs[:i]) for i, s in enumerate(signs) if s == MINUS]
        assert simplest_between(left, right) == b


def test_no_initial_segment_of_the_answer_fits():
    for a, b in itertools.product(SMALL, SMALL):
        if seq_cmp(a, b) < 0:
            x = simplest_between([a], [b])
            for k in range(x.length().finite_value()):
                y = x.prefix(n(k))
                assert not (seq_cmp(a, y) < 0 < seq_cmp(b, y))


def test_simplest_between_transfinite():
    assert simplest_between([from_ordinal(n(3))], []) == from_ordinal(n(4))
    assert simplest_between([se("+^w")], []) == se("+^(w+1)")
    assert simplest_between([se("+")], [se("+^w")]) == se("+^2")
    assert simplest_between([se("+^w -")], [se("+^w")]) == se("+^w - +")
    assert simplest_between([], [se("-^w")]) == se("-^(w+1)")


def test_simplest_between_rejects_overlap():
    with pytest.raises(NotSeparated):
        simplest_between([se("+")], [se("-")])


def test_lexicographic_order_with_transfinite_runs():
    assert seq_cmp(se("+^w -"), from_ordinal(W)) < 0
    assert seq_cmp(se("+^w +"), from_ordinal(W)) > 0
    assert seq_cmp(se("+ -^w"), se("+")) < 0
    assert seq_cmp(se("+ -^w"), se("")) > 0


def test_dyadic_encoding():
    assert from_dyadic(Fraction(3, 4)) == SignExpansion([(PLUS, 1), (MINUS, 1), (PLUS, 1)])
    assert from_dyadic(-2) == se("-^2")
    for x in SMALL:
        assert from_dyadic(to_dyadic(x)) == x
    with pytest.raises(NonDyadic):
        from_dyadic(Fraction(1, 3))


def test_dyadic_order_agrees_with_lexicographic_order():
    for a, b in itertools.product(SMALL, SMALL):
        assert seq_cmp(a, b) == (to_dyadic(a) > to_dyadic(b)) - (to_dyadic(a) < to_dyadic(b))


def test_length_and_runs():
    assert se("+ -^w").length() == W
    assert se("-^w +").length() == W + 1
    assert se("+^2 +^3") == se("+^5")


def test_ordinal_lt_test_examples():
    assert ordinal_lt_test(n(0), se("+"))
    assert not ordinal_lt_test(W, se("+^w -"))
    assert ordinal_lt_test(n(2), se("+^3"))


def test_ordinal_lt_test_grid():
    alphas = [n(k) for k in range(4)] + [W, W + 1, W + 2, W * 2]
    runs = [n(1), n(2), W, W + 1, W * 2]
    xs = [SignExpansion()]
    for r1, r2 in itertools.product(runs, repeat=2):
        for s1, s2 in itertools.product((PLUS, MINUS), repeat=2):
            x = SignExpansion([(s1, r1), (s2, r2)])
            if x.length() <= W * 2:
                xs.append(x)
    for a, x in itertools.product(alphas, xs):
        ordinal_lt_test(a, x)
