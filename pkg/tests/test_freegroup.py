import pytest
from hypothesis import given, strategies as st

from bforder.errors import DeviationCeilingError, ParseError, UsageError
from bforder.freegroup import (
    CEILING_ENV,
    FreeWord,
    Sign,
    commutator,
    deviation,
    fg_inv,
    fg_mul,
    free_reduce,
    magnus_expand,
    parse_word,
    reduce_letters,
    sign_free,
    simple_commutator,
    theta_apply,
)
from bforder.ncseries import NcSeries, format_series, series_mul, xi_apply
from strategies import free_words


def W(rank, *letters):
    return FreeWord(rank, letters)


def test_reduce_examples():
    assert reduce_letters((1, -1)) == ()
    assert reduce_letters((1, 2, -2, 1)) == (1, 1)
    assert reduce_letters((1, 2, 1)) == (1, 2, 1)


def test_group_ops_examples():
    assert fg_mul(W(1, 1), W(1, -1)).is_identity()
    assert fg_inv(W(2, 1, 2)) == W(2, -2, -1)
    with pytest.raises(UsageError):
        fg_mul(W(1, 1), W(2, 1))


def test_commutator_examples():
    assert simple_commutator([1, 2]) == W(2, -1, -2, 1, 2)
    assert simple_commutator([1, 1]).is_identity()
    c = simple_commutator([1, 2, 1])
    # 10 letters before the seam x1 x1^-1 cancels
    assert c == W(2, -2, -1, 2, -1, -2, 1, 2, 1)
    assert c == commutator(commutator(W(2, 1), W(2, 2)), W(2, 1))


def test_magnus_examples():
    assert format_series(magnus_expand(W(1, 1), 3)) == "1 +X1"
    assert format_series(magnus_expand(W(1, -1), 3)) == "1 -X1 +X1X1 -X1X1X1"
    c = magnus_expand(simple_commutator([1, 2]), 2)
    assert c == NcSeries(2, 2, {(): 1, (1, 2): 1, (2, 1): -1})


def test_deviation_examples():
    assert deviation(W(2)) is None
    assert deviation(simple_commutator([1, 2])) == (2, NcSeries(2, 2, {(1, 2): 1, (2, 1): -1}))
    assert deviation(W(2, 2, 2, 2)) == (1, NcSeries(2, 1, {(2,): 3}))


def test_sign_examples():
    assert sign_free(W(1, 1)) is Sign.POSITIVE
    assert sign_free(simple_commutator([2, 1])) is Sign.NEGATIVE
    assert sign_free(W(2, -1, 2)) is Sign.NEGATIVE
    assert sign_free(W(2, 1, -1)) is Sign.ZERO


def test_theta_examples():
    assert theta_apply(1, W(2, 1)) == W(3, 1, 2)
    assert theta_apply(1, W(2, 2)) == W(3, 3)
    assert theta_apply(2, W(2, 1)) == W(3, 1)
    with pytest.raises(UsageError):
        theta_apply(3, W(2, 1))


def test_deviation_ceiling(monkeypatch):
    w = simple_commutator([1, 2, 1, 2])
    assert deviation(w)[0] == 4
    with pytest.raises(DeviationCeilingError):
        deviation(w, ceiling=3)
    monkeypatch.setenv(CEILING_ENV, "2")
    with pytest.raises(DeviationCeilingError):
        sign_free(w)


def test_parse_word():
    assert parse_word("1 -2 1") == W(2, 1, -2, 1)
    assert parse_word("-r 4 1") == W(4, 1)
    assert parse_word("−1") == W(1, -1)
    assert parse_word("") == W(1)
    for bad in ("1 x", "0", "-r", "-r 1 2"):
        with pytest.raises(ParseError):
            parse_word(bad)


@given(free_words())
def test_reduce_idempotent(w):
    r = free_reduce(w)
    assert r.is_reduced()
    assert free_reduce(r) == r
    assert fg_mul(fg_inv(w), w).is_identity()


@given(free_words(rank=2), free_words(rank=2), st.integers(1, 4))
def test_magnus_multiplicative(u, v, cap):
    assert magnus_expand(fg_mul(u, v), cap) == series_mul(magnus_expand(u, cap), magnus_expand(v, cap))


@given(free_words(rank=2), free_words(rank=2))
def test_sign_is_bi_invariant_order(u, v):
    su, sv = sign_free(u), sign_free(v)
    assert sign_free(fg_inv(u)) == -su
    if su > 0 and sv > 0:
        assert sign_free(fg_mul(u, v)) is Sign.POSITIVE
    assert sign_free(fg_mul(fg_mul(fg_inv(v), u), v)) == su


@given(free_words(rank=3), st.integers(1, 3))
def test_theta_intertwines_deviation(w, i):
    dev = deviation(w)
    image = deviation(theta_apply(i, w))
    if dev is None:
        assert image is None
    else:
        assert image == (dev[0], xi_apply(i, dev[1]))


@given(st.lists(st.integers(1, 3), min_size=2, max_size=4))
def test_simple_commutator_deviation(idx):
    c = simple_commutator(idx, 3)
    dev = deviation(c)
    if len(set(idx[:2])) == 1:
        assert dev is None
        return
    # never a pure power, leading coefficient a unit
    if dev is not None:
        degree, form = dev
        assert all(len(set(m)) > 1 for m in form.monomials())
        assert form.coefficient(form.monomials()[0]) in (1, -1)


@given(free_words(max_len=12))
def test_deviation_bounded_by_syllables(w):
    r = free_reduce(w).letters
    syllables = sum(1 for k, a in enumerate(r) if k == 0 or a != r[k - 1])
    dev = deviation(w, ceiling=max(1, len(r)))
    assert (dev is None) == (not r)
    if dev is not None:
        assert dev[0] <= syllables
