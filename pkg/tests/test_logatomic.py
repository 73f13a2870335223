import itertools

import pytest

from surreal.conv import to_signexp
from surreal.errors import BranchCapExceeded
from surreal.explog import exp_J, log_monomial
from surreal.logatomic import DEAD, HIT, LogAtomicShape, is_log_atomic, kappa_at, kleq, lambda_at, paths_of
from surreal.number import OMEGA, PREC, cmp, val_cmp
from surreal.ordinal import OMEGA as W
from surreal.ordinal import Ordinal, ord_left_sub
from surreal.parser import parse_number as P
from surreal.signseq import from_ordinal as sign_ordinal, is_simpler, seq_cmp

n = Ordinal.nat
GRID = [n(0), n(1), n(2), W, W + 1, W * 2, W * W]


def test_lambda_examples():
    assert lambda_at(0, 0) == OMEGA
    assert lambda_at(0, 1) == P("w^(w^-1)")
    assert lambda_at(1, 0) == P("w^w")
    assert lambda_at(2, 0) == P("w^(w^w)")


def test_kappa_examples():
    assert kappa_at(0) == OMEGA
    assert kappa_at(1) == P("w^(w^-w)")
    assert kappa_at(2) == P("w^(w^(-w*2))")
    for a in range(6):
        assert kappa_at(a) == lambda_at(0, W * a)


def test_shape_canonical_form():
    assert LogAtomicShape(2, W + 3) == LogAtomicShape(0, W + 1)
    assert LogAtomicShape(1, 1).value() == OMEGA
    assert LogAtomicShape(0, W).log() == LogAtomicShape(0, W + 1)
    assert LogAtomicShape(3, 0).index() == 3


def test_is_log_atomic():
    assert is_log_atomic(OMEGA) == LogAtomicShape(0, 0)
    assert is_log_atomic(2 * OMEGA) is None
    assert is_log_atomic(P("w^(w^-w)")) == LogAtomicShape(0, W)
    assert is_log_atomic(P("w^(w^w)")) == LogAtomicShape(2, 0)
    assert is_log_atomic(P("w^2")) is None
    assert is_log_atomic(P("w^(w^-1)*w")) is None


def test_lambda_order_matches_index_order():
    shapes = [LogAtomicShape(m, a) for m in range(4) for a in GRID]
    for s, t in itertools.product(shapes, shapes):
        vs, vt = s.value(), t.value()
        assert cmp(vs, vt) == cmp(s.index(), t.index())
        if cmp(vs, vt) < 0:
            assert PREC in val_cmp(vs, vt)


def test_lambda_successor_is_exp():
    for m, a in itertools.product(range(4), GRID):
        assert exp_J(lambda_at(m, a)) == lambda_at(m + 1, a)
        if m:
            assert log_monomial(lambda_at(m, a)) == lambda_at(m - 1, a)


def test_kleq_examples():
    lw = LogAtomicShape(0, W)
    w = LogAtomicShape(0, 0)
    assert kleq(lw, w)
    assert not kleq(w, lw)
    assert kleq(LogAtomicShape(5, 0), w)
    assert kleq(LogAtomicShape(0, W + 3), lw) and kleq(lw, LogAtomicShape(0, W + 3))


def test_lambda_below_iff_successor_is_simpler():
    alphas = [n(0), n(1), n(2), n(3), W, W + 1, W + 2, W * 2]
    values = [lambda_at(m, b) for m in range(3) for b in alphas]
    for a in alphas:
        target = lambda_at(0, a)
        succ = to_signexp(lambda_at(0, a + 1))
        for v in values:
            assert (cmp(v, target) < 0) == is_simpler(succ, to_signexp(v))


def _prefix_refuted(prefix, naturals, uppers):
    """A proper prefix fails to lie above every natural or below every upper bound."""
    return any(seq_cmp(prefix, a) <= 0 for a in naturals) or any(seq_cmp(prefix, b) >= 0 for b in uppers)


@pytest.mark.parametrize("alpha, below", [(W, [n(k) for k in range(12)]), (W * 2, [n(k) for k in range(12)] + [W + k for k in range(12)])])
def test_log_alpha_omega_is_simplest_above_naturals_below_earlier_logs(alpha, below):
    x = to_signexp(lambda_at(0, alpha))
    naturals = [sign_ordinal(n(k)) for k in range(40)]
    uppers = [to_signexp(lambda_at(0, b)) for b in below]
    assert all(seq_cmp(a, x) < 0 for a in naturals)
    assert all(seq_cmp(x, b) < 0 for b in uppers)
    # structured proper prefixes of x: finite ones, then +^w -^g for g below the minus run
    minus_run = x.runs[1][1]
    positions = [n(k) for k in range(30)]
    gammas = [n(k) for k in range(5)] + [W, W * W, W * W * W] + [Ordinal([(n(3), 1)]) * k + W for k in range(1, 10)]
    gammas += [Ordinal([(n(4), 1), (n(3), k)]) for k in range(1, 10)]
    for g in gammas:
        if g < minus_run:
            positions.append(W + g)
    for p in positions:
        y = x.prefix(p)
        assert y != x
        assert _prefix_refuted(y, naturals, uppers), y
    assert ord_left_sub(W, x.length()) == minus_run


def test_paths_examples():
    ps = paths_of(OMEGA)
    assert len(ps) == 1 and ps[0].status == HIT and ps[0].shape == LogAtomicShape(0, 0) and ps[0].at == 0
    ps = paths_of(P("5"))
    assert len(ps) == 1 and ps[0].status == DEAD and ps[0].at == 0
    ps = paths_of(P("w + w^(w^-1)"))
    assert [p.status for p in ps] == [HIT, HIT]
    assert {p.shape for p in ps} == {LogAtomicShape(0, 0), LogAtomicShape(0, 1)}


def test_paths_follow_logarithms():
    ps = paths_of(P("w^2"))
    assert len(ps) == 1
    (c0, m0), (c1, m1) = ps[0].entries
    assert (c0, m0) == (1, P("w^2"))
    assert (c1, m1) == (2, P("w^(w^-1)"))


def test_log_atomic_values_have_a_unique_path():
    for m, a in itertools.product(range(3), [n(0), n(1), n(2), W]):
        v = lambda_at(m, a)
        ps = paths_of(v)
        assert len(ps) == 1 and ps[0].status == HIT
        assert [mon for _, mon in ps[0].entries] == [v]


def test_branch_cap():
    x = P("w^3 + w^2 + w + w^(w^-1) + w^(w^-2)")
    with pytest.raises(BranchCapExceeded):
        paths_of(x, branch_cap=2)


def test_path_json():
    p = paths_of(P("w^2 + 3"))
    data = [q.to_json() for q in p]
    assert {d["status"] for d in data} == {HIT, DEAD}
