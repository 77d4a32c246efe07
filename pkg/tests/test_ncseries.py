import pytest
from hypothesis import given, strategies as st

from bforder.errors import UsageError
from bforder.ncseries import (
    NcSeries,
    format_series,
    leading_term,
    minimal_successor,
    mono_compare,
    series_add,
    series_mul,
    successors,
    xi_apply,
)
from strategies import series


def test_mono_compare_examples():
    assert mono_compare((3,), (1, 1)) == -1
    assert mono_compare((1, 2), (2, 1)) == -1
    assert mono_compare((2, 3), (2, 3)) == 0
    assert mono_compare((1, 1), (3,)) == 1


def test_add_examples():
    a = NcSeries(2, 3, {(): 1, (1,): 1})
    b = NcSeries(2, 3, {(): -1, (2,): 1})
    assert series_add(a, b) == NcSeries(2, 3, {(1,): 1, (2,): 1})
    assert a + NcSeries.zero(2, 3) == a
    c = NcSeries(2, 3, {(1, 2): 1, (2, 1): -1})
    d = NcSeries(2, 3, {(2, 1): 1, (1, 2): -1})
    assert not (c + d)
    assert format_series(c + d) == "0"


def test_mul_examples():
    a = NcSeries(2, 2, {(): 1, (1,): 1})
    b = NcSeries(2, 2, {(): 1, (2,): 1})
    assert series_mul(a, b) == NcSeries(2, 2, {(): 1, (1,): 1, (2,): 1, (1, 2): 1})
    c = NcSeries(1, 2, {(): 1, (1,): -1, (1, 1): 1})
    assert series_mul(NcSeries(1, 2, {(): 1, (1,): 1}), c) == NcSeries.one(1, 2)
    # with room for degree 3 the cube survives
    c3 = NcSeries(1, 3, {(): 1, (1,): -1, (1, 1): 1})
    assert series_mul(NcSeries(1, 3, {(): 1, (1,): 1}), c3) == NcSeries(1, 3, {(): 1, (1, 1, 1): 1})
    x1, x2 = NcSeries.variable(1, 2, 2), NcSeries.variable(2, 2, 2)
    assert x1 * x2 != x2 * x1


def test_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        series_add(NcSeries.one(2, 3), NcSeries.one(3, 3))
    with pytest.raises(UsageError):
        series_mul(NcSeries.one(2, 3), NcSeries.one(2, 2))


def test_xi_examples():
    x = lambda i, n: NcSeries.variable(i, n, 3)
    assert xi_apply(1, x(1, 2)) == x(1, 3) + x(2, 3)
    assert xi_apply(1, x(2, 2)) == x(3, 3)
    assert xi_apply(2, NcSeries(2, 3, {(1, 2): 1})) == NcSeries(3, 3, {(1, 2): 1, (1, 3): 1})
    with pytest.raises(UsageError):
        xi_apply(3, x(1, 2))


def test_leading_term_examples():
    assert leading_term(NcSeries(2, 3, {(2, 1): 1, (1, 2): -1})) == ((1, 2), -1)
    assert leading_term(NcSeries.zero(2, 3)) is None
    assert leading_term(NcSeries(2, 3, {(2,): 3, (1, 1): 1})) == ((2,), 3)


def test_successors():
    assert successors((1, 2), 1) == [(1, 3), (2, 3)]
    assert minimal_successor((1, 2, 1), 1) == (1, 3, 1)
    assert successors((), 1) == [()]


def test_format_series():
    s = NcSeries(2, 3, {(): 1, (1,): -1, (1, 2): 3, (2, 1): -2})
    assert format_series(s) == "1 -X1 +3X1X2 -2X2X1"


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * NcSeries.one(2, 3) == a == NcSeries.one(2, 3) * a
    assert not (a - a)


@given(series(), series(), st.integers(1, 2))
def test_xi_is_ring_map(a, b, i):
    assert xi_apply(i, a * b) == xi_apply(i, a) * xi_apply(i, b)
    assert xi_apply(i, a + b) == xi_apply(i, a) + xi_apply(i, b)


@given(series(), st.integers(1, 2))
def test_xi_leading_term_is_minimal_successor(s, i):
    # key step of the doubling argument: the leading monomial moves to its minimal i-successor
    s = s.homogeneous_part(s.min_degree()) if s else s
    lead = leading_term(s)
    image = leading_term(xi_apply(i, s))
    if lead is None:
        assert image is None
    else:
        assert image == (minimal_successor(lead[0], i), lead[1])
