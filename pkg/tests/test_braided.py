import pytest
from hypothesis import given, strategies as st

from bforder.braid import BraidWord, braid_permutation, is_pure, strand_double
from bforder.braided import (
    BVElement,
    Kind,
    VImage,
    bv_equal,
    bv_expand,
    bv_inv,
    bv_is_identity,
    bv_mul,
    classify,
    format_element,
    parse_element,
    pbv_representative,
    rho_image,
    v_mul,
)
from bforder.errors import DomainError, ParseError, UsageError
from bforder.trees import CARET, LEAF, tree_expand, tree_parse
from strategies import braids, pure_braids, _trees_with


def B(n, *letters):
    return BraidWord(n, letters)


@st.composite
def bv_elements(draw, max_leaves=5, pure=False):
    n = draw(st.integers(1, max_leaves))
    b = BraidWord(1) if n == 1 else draw(pure_braids(n=n) if pure else braids(n=n, max_len=8))
    return BVElement(draw(_trees_with(n)), b, draw(_trees_with(n)))


@st.composite
def pbv_elements(draw, max_leaves=5):
    n = draw(st.integers(1, max_leaves))
    t = draw(_trees_with(n))
    return BVElement(t, BraidWord(n) if n == 1 else draw(pure_braids(n=n)), t)


def test_expand_examples():
    x = bv_expand(BVElement.identity(), 1)
    assert x == BVElement(CARET, B(2), CARET)
    y = bv_expand(BVElement(CARET, B(2, 1, 1), CARET), 2)
    assert y.braid == strand_double(B(2, 1, 1), 2) == B(3, 1, 2, 2, 1)
    with pytest.raises(UsageError):
        bv_expand(BVElement.identity(), 2)


def test_mul_examples():
    t = tree_parse("(.(..))")
    x = BVElement(t, B(3, 1, 2), tree_parse("((..).)"))
    assert bv_is_identity(bv_mul(x, bv_inv(x)))
    p = BVElement(t, B(3, 2, 2), t)
    assert bv_mul(BVElement(t, B(3), t), p) == p
    assert classify(bv_mul(p, p)) is Kind.PBV


def test_classify_examples():
    t = tree_parse("(.(..))")
    assert classify(BVElement(t, B(3, 1, 1), t)) is Kind.PBV
    assert classify(BVElement(t, B(3, 1, 1), tree_parse("((..).)"))) is Kind.BF
    assert classify(BVElement(t, B(3, 1), t)) is Kind.BV


def test_identity_examples():
    assert bv_is_identity(BVElement(CARET, B(2), CARET))
    assert not bv_is_identity(BVElement(CARET, B(2, 1, 1), CARET))


def test_pbv_representative():
    x = BVElement(CARET, B(2, 1, 1), CARET)
    assert pbv_representative(x) == (CARET, B(2, 1, 1))
    y = bv_expand(x, 1)
    assert pbv_representative(y) == (tree_expand(CARET, 1), strand_double(B(2, 1, 1), 1))
    with pytest.raises(DomainError):
        pbv_representative(BVElement(CARET, B(2, 1), CARET))


def test_leaf_count_mismatch():
    with pytest.raises(UsageError):
        BVElement(CARET, B(3), CARET)


def test_text_form():
    x = BVElement(tree_parse("(.(..))"), B(3, 1, -2), tree_parse("((..).)"))
    text = format_element(x)
    assert text == "n: 3\nminus: (.(..))\nbraid: 1 -2\nplus: ((..).)"
    assert parse_element(text) == x
    assert parse_element("plus: ((..).); braid: 1 -2; n: 3; minus: (.(..))") == x
    assert parse_element("n: 1\nminus: .\nbraid:\nplus: .") == BVElement.identity()
    for bad in ("n: 2; minus: (..); plus: (..)", "n: 2; minus: (..); braid: ; plus: (..); n: 2",
                "n: x; minus: .; braid: ; plus: .", "n: 3; minus: (..); braid: ; plus: (..)",
                "foo: 1"):
        with pytest.raises(ParseError):
            parse_element(bad)


@given(bv_elements(), bv_elements(), bv_elements())
def test_group_axioms(x, y, z):
    assert bv_equal(bv_mul(bv_mul(x, y), z), bv_mul(x, bv_mul(y, z)))
    assert bv_is_identity(bv_mul(x, bv_inv(x)))
    assert bv_is_identity(bv_mul(bv_inv(x), x))
    assert bv_equal(bv_mul(BVElement.identity(), x), x)


@given(bv_elements(), st.data())
def test_expansion_is_same_element(x, data):
    i = data.draw(st.integers(1, x.n))
    y = bv_expand(x, i)
    assert bv_equal(x, y)
    rx, ry = rho_image(x), rho_image(y)
    j = rx.perm.inverse()(i)
    assert ry.minus == tree_expand(rx.minus, j) and ry.plus == tree_expand(rx.plus, i)


@given(bv_elements(), bv_elements())
def test_rho_is_homomorphism(x, y):
    assert rho_image(bv_mul(x, y)) == v_mul(rho_image(x), rho_image(y))


@given(pbv_elements(), pbv_elements(), st.data())
def test_pbv_closed(x, y, data):
    z = bv_mul(x, y)
    assert classify(z) is Kind.PBV
    assert is_pure(z.braid)
    i = data.draw(st.integers(1, x.n))
    assert classify(bv_expand(x, i)) is Kind.PBV
