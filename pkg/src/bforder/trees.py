"""Binary trees, dyadic subdivisions and Thompson's group F.

A tree pair ``(minus, plus)`` maps the subdivision of ``[0, 1]`` encoded by
``minus`` (the domain) linearly and in order onto the one encoded by ``plus``
(the range). Tree text form: a leaf is ``.``, a caret is ``(LR)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import ParseError, UsageError
from .freegroup import Sign


@dataclass(frozen=True)
class Tree:
    left: Optional[Tree] = None
    right: Optional[Tree] = None
    leaves: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise UsageError("a caret needs both children")
        n = 1 if self.left is None else self.left.leaves + self.right.leaves
        object.__setattr__(self, "leaves", n)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __str__(self) -> str:
        return tree_format(self)


LEAF = Tree()
CARET = Tree(LEAF, LEAF)


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def tree_format(t: Tree) -> str:
    parts: list[str] = []

    def walk(node: Tree) -> None:
        if node.is_leaf:
            parts.append(".")
        else:
            parts.append("(")
            walk(node.left)
            walk(node.right)
            parts.append(")")

    walk(t)
    return "".join(parts)


def _parse_at(s: str, pos: int, text: str) -> tuple[Tree, int]:
    if pos >= len(s):
        raise ParseError(f"unexpected end of tree text {text!r}")
    ch = s[pos]
    if ch == ".":
        return LEAF, pos + 1
    if ch != "(":
        raise ParseError(f"unexpected {ch!r} at offset {pos} in {text!r}")
    left, pos = _parse_at(s, pos + 1, text)
    right, pos = _parse_at(s, pos, text)
    if pos >= len(s) or s[pos] != ")":
        raise ParseError(f"expected ')' at offset {pos} in {text!r}")
    return Tree(left, right), pos + 1


def tree_parse(text: str) -> Tree:
    s = "".join(text.split())
    t, pos = _parse_at(s, 0, text)
    if pos != len(s):
        raise ParseError(f"trailing text after tree in {text!r}")
    return t


def tree_expand(t: Tree, i: int) -> Tree:
    """Attach a caret to leaf ``i`` (1-based, left to right)."""
    if not 1 <= i <= t.leaves:
        raise UsageError(f"leaf {i} outside 1..{t.leaves}")
    if t.is_leaf:
        return CARET
    if i <= t.left.leaves:
        return Tree(tree_expand(t.left, i), t.right)
    return Tree(t.left, tree_expand(t.right, i - t.left.leaves))


def leaf_depths(t: Tree) -> list[int]:
    out: list[int] = []

    def walk(node: Tree, d: int) -> None:
        if node.is_leaf:
            out.append(d)
        else:
            walk(node.left, d + 1)
            walk(node.right, d + 1)

    walk(t, 0)
    return out


@dataclass(frozen=True)
class DyadicInterval:
    start: Fraction
    end: Fraction

    @property
    def length(self) -> Fraction:
        return self.end - self.start


def leaf_intervals(t: Tree) -> list[DyadicInterval]:
    out = []
    start = Fraction(0)
    for d in leaf_depths(t):
        end = start + Fraction(1, 2**d)
        out.append(DyadicInterval(start, end))
        start = end
    return out


def _union(a: Tree, b: Tree) -> Tree:
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return Tree(_union(a.left, b.left), _union(a.right, b.right))


def expansion_path(t: Tree, target: Tree) -> list[int]:
    """Leaf indices whose successive expansion carries ``t`` to ``target``
    (which must contain ``t`` as a rooted subtree)."""
    steps: list[int] = []

    def walk(node: Tree, goal: Tree, offset: int) -> int:
        # returns the number of leaves ``node`` ends up with
        if goal.is_leaf:
            if not node.is_leaf:
                raise UsageError("target tree does not refine the source tree")
            return 1
        if node.is_leaf:
            steps.append(offset + 1)
            node = CARET
        nl = walk(node.left, goal.left, offset)
        nr = walk(node.right, goal.right, offset + nl)
        return nl + nr

    walk(t, target, 0)
    return steps


def common_refinement(t1: Tree, t2: Tree) -> tuple[Tree, list[int], list[int]]:
    s = _union(t1, t2)
    return s, expansion_path(t1, s), expansion_path(t2, s)


# -- Thompson's group F -------------------------------------------------------


@dataclass(frozen=True)
class TreePair:
    minus: Tree
    plus: Tree

    def __post_init__(self):
        if self.minus.leaves != self.plus.leaves:
            raise UsageError(f"leaf counts differ: {self.minus.leaves} vs {self.plus.leaves}")

    @classmethod
    def identity(cls) -> TreePair:
        return cls(LEAF, LEAF)

    def is_identity(self) -> bool:
        return self.minus == self.plus

    def __mul__(self, other: TreePair) -> TreePair:
        return f_mul(self, other)

    def __invert__(self) -> TreePair:
        return f_inv(self)

    def __str__(self) -> str:
        return f"{tree_format(self.minus)} {tree_format(self.plus)}"


def _caret_positions(t: Tree) -> set[int]:
    # leaf indices i such that leaves i, i+1 form a caret
    found: set[int] = set()

    def walk(node: Tree, offset: int) -> None:
        if node.is_leaf:
            return
        if node.left.is_leaf and node.right.is_leaf:
            found.add(offset + 1)
            return
        walk(node.left, offset)
        walk(node.right, offset + node.left.leaves)

    walk(t, 0)
    return found


def tree_collapse(t: Tree, i: int) -> Tree:
    """Inverse of ``tree_expand``: remove the caret over leaves ``i, i+1``."""
    if not t.is_leaf and t.left.is_leaf and t.right.is_leaf and i == 1:
        return LEAF
    if t.is_leaf:
        raise UsageError(f"no caret at leaf {i}")
    if i <= t.left.leaves - 1:
        return Tree(tree_collapse(t.left, i), t.right)
    if i > t.left.leaves:
        return Tree(t.left, tree_collapse(t.right, i - t.left.leaves))
    raise UsageError(f"no caret at leaf {i}")


def f_reduce(p: TreePair) -> TreePair:
    minus, plus = p.minus, p.plus
    while True:
        common = _caret_positions(minus) & _caret_positions(plus)
        if not common:
            return TreePair(minus, plus)
        i = min(common)
        minus, plus = tree_collapse(minus, i), tree_collapse(plus, i)


def f_mul(p: TreePair, q: TreePair) -> TreePair:
    """``p`` first, then ``q``."""
    _, up, uq = common_refinement(p.plus, q.minus)
    pm, pp = p.minus, p.plus
    for i in up:
        pm, pp = tree_expand(pm, i), tree_expand(pp, i)
    qm, qp = q.minus, q.plus
    for i in uq:
        qm, qp = tree_expand(qm, i), tree_expand(qp, i)
    assert pp == qm
    return f_reduce(TreePair(pm, qp))


def f_inv(p: TreePair) -> TreePair:
    return TreePair(p.plus, p.minus)


def slopes(p: TreePair) -> list[Fraction]:
    return [
        Fraction(2) ** (dm - dp) for dm, dp in zip(leaf_depths(p.minus), leaf_depths(p.plus))
    ]


def f_sign_detail(p: TreePair) -> tuple[Sign, Optional[int]]:
    """Sign and the leaf whose slope decided it (first slope different from 1)."""
    for k, (dm, dp) in enumerate(zip(leaf_depths(p.minus), leaf_depths(p.plus)), 1):
        if dm != dp:
            return (Sign.POSITIVE if dm > dp else Sign.NEGATIVE), k
    return Sign.ZERO, None


def sign_F(p: TreePair) -> Sign:
    return f_sign_detail(p)[0]


@functools.lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Tree, ...]:
    if n < 1:
        raise UsageError(f"trees have at least one leaf, got {n}")
    if n == 1:
        return (LEAF,)
    return tuple(Tree(l, r) for k in range(1, n) for l in all_trees(k) for r in all_trees(n - k))


def catalan_count(n: int) -> int:
    """Number of binary trees with ``n`` leaves, by exhaustive enumeration."""
    return len(set(all_trees(n)))


def catalan_formula(n: int) -> int:
    return comb(2 * n - 2, n - 1) // n


def parse_pair(text: str) -> TreePair:
    """Two consecutive trees, e.g. ``"(.(..)) ((..).)"``; whitespace is ignored."""
    s = "".join(text.split())
    minus, pos = _parse_at(s, 0, text)
    plus, pos = _parse_at(s, pos, text)
    if pos != len(s):
        raise ParseError(f"trailing text after tree pair in {text!r}")
    try:
        return TreePair(minus, plus)
    except UsageError as exc:
        raise ParseError(str(exc)) from None
