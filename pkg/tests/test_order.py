import pytest
from hypothesis import given, strategies as st

from bforder.braid import BraidWord, braid_inv, parse_braid
from bforder.braided import BVElement, bv_expand, bv_inv, bv_mul
from bforder.errors import DomainError
from bforder.freegroup import Sign
from bforder.order import Relation, bf_compare, bf_sign_detail, sign_bf, sign_pbv
from bforder.trees import TreePair, all_trees, parse_pair, sign_F, tree_parse
from strategies import _trees_with, pure_braids

WORKED_P = parse_braid("-n 5 4 3 3 -4 -2 -1 -1 -2 -1 -1 2 1 1 -2")


@st.composite
def bf_elements(draw, max_leaves=5):
    n = draw(st.integers(1, max_leaves))
    minus = draw(_trees_with(n))
    plus = minus if draw(st.booleans()) else draw(_trees_with(n))
    b = BraidWord(n) if n == 1 else draw(pure_braids(n=n, max_factors=3))
    return BVElement(minus, b, plus)


def test_worked_example_positive_for_every_tree():
    for t in all_trees(5):
        x = BVElement(t, WORKED_P, t)
        assert sign_pbv(x) is Sign.POSITIVE
        assert sign_bf(x) is Sign.POSITIVE
    s, w = bf_sign_detail(BVElement(all_trees(5)[0], WORKED_P, all_trees(5)[0]))
    assert w.describe() == "decided by combing factor f₂ = A(3,5)"


def test_identity_is_zero():
    assert sign_pbv(BVElement.identity()) is Sign.ZERO
    assert sign_bf(BVElement.identity()) is Sign.ZERO


def test_f_part_decides_first():
    p = parse_pair("(.(..)) ((..).)")
    for b in (BraidWord(3), BraidWord(3, (1, 1)), BraidWord(3, (-2, -2))):
        x = BVElement(p.minus, b, p.plus)
        s, w = bf_sign_detail(x)
        assert s is Sign.NEGATIVE and w.layer == "F" and w.index == 1


def test_domain_errors():
    t = tree_parse("(..)")
    with pytest.raises(DomainError):
        sign_bf(BVElement(t, BraidWord(2, (1,)), t))
    # BF but not PBV: the trees differ
    with pytest.raises(DomainError):
        sign_pbv(BVElement(tree_parse("(.(..))"), BraidWord(3), tree_parse("((..).)")))


def test_compare_examples():
    t = all_trees(5)[3]
    x = BVElement(t, WORKED_P, t)
    assert bf_compare(x, x).relation is Relation.EQUAL
    assert str(bf_compare(x, x)) == "= identity element"
    assert bf_compare(BVElement.identity(), x).relation is Relation.LESS
    assert bf_compare(x, BVElement.identity()).relation is Relation.GREATER
    y = BVElement(t, braid_inv(WORKED_P), t)
    assert bf_compare(y, x).relation is Relation.LESS


@given(bf_elements(), st.data())
def test_sign_independent_of_representative(x, data):
    s = sign_bf(x)
    for _ in range(data.draw(st.integers(1, 3))):
        x = bv_expand(x, data.draw(st.integers(1, x.n)))
        assert sign_bf(x) == s


@given(bf_elements(), bf_elements(), bf_elements())
def test_bi_order_axioms(x, y, z):
    rel = bf_compare(x, y).relation
    flip = {Relation.LESS: Relation.GREATER, Relation.GREATER: Relation.LESS, Relation.EQUAL: Relation.EQUAL}
    assert bf_compare(y, x).relation is flip[rel]
    assert bf_compare(bv_mul(z, x), bv_mul(z, y)).relation is rel
    assert bf_compare(bv_mul(x, z), bv_mul(y, z)).relation is rel
    sx, sy = sign_bf(x), sign_bf(y)
    assert sign_bf(bv_inv(x)) == -sx
    if sx > 0 and sy > 0:
        assert sign_bf(bv_mul(x, y)) is Sign.POSITIVE
    assert sign_bf(bv_mul(bv_mul(z, x), bv_inv(z))) == sx


@given(bf_elements(), bf_elements(), bf_elements())
def test_transitivity(x, y, z):
    if bf_compare(x, y).relation is Relation.LESS and bf_compare(y, z).relation is Relation.LESS:
        assert bf_compare(x, z).relation is Relation.LESS


@given(st.data())
def test_section_of_f_is_order_preserving(data):
    n = data.draw(st.integers(1, 5))
    p = TreePair(data.draw(_trees_with(n)), data.draw(_trees_with(n)))
    assert sign_bf(BVElement.from_pair(p)) == sign_F(p)
