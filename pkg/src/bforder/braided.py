"""Elements of the braided Thompson group BV as triples ``(minus, braid, plus)``.

The braid runs from the leaves of ``minus`` (top) to the leaves of ``plus``
(bottom). Expanding a representative adds a caret at a bottom leaf and at
the top leaf of the same strand, and doubles that strand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import (
    BraidWord,
    Permutation,
    braid_inv,
    braid_mul,
    braid_permutation,
    is_pure,
    is_trivial,
    parse_braid,
    strand_double,
)
from .errors import DomainError, ParseError, UsageError
from .trees import LEAF, Tree, TreePair, common_refinement, tree_expand, tree_format, tree_parse


class Kind(enum.Enum):
    BV = "BV"
    BF = "BF"
    PBV = "PBV"


@dataclass(frozen=True)
class BVElement:
    minus: Tree
    braid: BraidWord
    plus: Tree

    def __post_init__(self):
        if not self.minus.leaves == self.plus.leaves == self.braid.n:
            raise UsageError(
                f"leaf counts {self.minus.leaves}/{self.plus.leaves} do not match "
                f"{self.braid.n} strands"
            )

    @classmethod
    def identity(cls) -> BVElement:
        return cls(LEAF, BraidWord(1), LEAF)

    @classmethod
    def from_pair(cls, p: TreePair) -> BVElement:
        """The section F -> BF, ``(T-, T+) -> (T-, 1, T+)``."""
        return cls(p.minus, BraidWord(p.minus.leaves), p.plus)

    @property
    def n(self) -> int:
        return self.braid.n

    @property
    def f_part(self) -> TreePair:
        return TreePair(self.minus, self.plus)

    def __mul__(self, other: BVElement) -> BVElement:
        return bv_mul(self, other)

    def __invert__(self) -> BVElement:
        return bv_inv(self)


@dataclass(frozen=True)
class VImage:
    minus: Tree
    perm: Permutation
    plus: Tree

    def __post_init__(self):
        if not self.minus.leaves == self.plus.leaves == self.perm.n:
            raise UsageError("leaf counts do not match the permutation size")


def bv_expand(x: BVElement, i: int) -> BVElement:
    """Caret at bottom leaf ``i``; the strand ending there is doubled."""
    if not 1 <= i <= x.plus.leaves:
        raise UsageError(f"bottom leaf {i} outside 1..{x.plus.leaves}")
    j = braid_permutation(x.braid).inverse()(i)
    return BVElement(tree_expand(x.minus, j), strand_double(x.braid, j), tree_expand(x.plus, i))


def bv_expand_top(x: BVElement, j: int) -> BVElement:
    """Caret at top leaf ``j``; the strand starting there is doubled."""
    if not 1 <= j <= x.minus.leaves:
        raise UsageError(f"top leaf {j} outside 1..{x.minus.leaves}")
    i = braid_permutation(x.braid)(j)
    return BVElement(tree_expand(x.minus, j), strand_double(x.braid, j), tree_expand(x.plus, i))


def bv_mul(x: BVElement, y: BVElement) -> BVElement:
    """``x`` on top of ``y``: refine to matching middle trees, stack the braids."""
    _, down, up = common_refinement(x.plus, y.minus)
    for i in down:
        x = bv_expand(x, i)
    for j in up:
        y = bv_expand_top(y, j)
    return BVElement(x.minus, braid_mul(x.braid, y.braid), y.plus)


def bv_inv(x: BVElement) -> BVElement:
    return BVElement(x.plus, braid_inv(x.braid), x.minus)


def rho_image(x: BVElement) -> VImage:
    return VImage(x.minus, braid_permutation(x.braid), x.plus)


def _double_perm(perm: Permutation, j: int) -> Permutation:
    i = perm(j)
    images = []
    for s in range(1, perm.n + 2):
        if s < j:
            p = perm(s)
        elif s == j:
            images.append(i)
            continue
        elif s == j + 1:
            images.append(i + 1)
            continue
        else:
            p = perm(s - 1)
        images.append(p + 1 if p > i else p)
    return Permutation(tuple(images))


def v_mul(a: VImage, b: VImage) -> VImage:
    """Product in V computed on permutations only (an independent route for checking rho)."""
    _, down, up = common_refinement(a.plus, b.minus)
    for i in down:
        j = a.perm.inverse()(i)
        a = VImage(tree_expand(a.minus, j), _double_perm(a.perm, j), tree_expand(a.plus, i))
    for j in up:
        i = b.perm(j)
        b = VImage(tree_expand(b.minus, j), _double_perm(b.perm, j), tree_expand(b.plus, i))
    return VImage(a.minus, a.perm.then(b.perm), b.plus)


def classify(x: BVElement) -> Kind:
    if not is_pure(x.braid):
        return Kind.BV
    return Kind.PBV if x.minus == x.plus else Kind.BF


def bv_is_identity(x: BVElement) -> bool:
    return x.minus == x.plus and is_trivial(x.braid)


def bv_equal(x: BVElement, y: BVElement) -> bool:
    return bv_is_identity(bv_mul(x, bv_inv(y)))


def pbv_representative(x: BVElement) -> tuple[Tree, BraidWord]:
    if classify(x) is not Kind.PBV:
        raise DomainError("element is not in PBV (needs equal trees and a pure braid)")
    return x.minus, x.braid


# -- text form ------------------------------------------------------------------

_FIELDS = ("n", "minus", "braid", "plus")


def format_element(x: BVElement) -> str:
    letters = " ".join(map(str, x.braid.letters))
    return (
        f"n: {x.n}\nminus: {tree_format(x.minus)}\nbraid: {letters}\nplus: {tree_format(x.plus)}"
    )


def parse_element(text: str) -> BVElement:
    """Parse the four-field document ``n: / minus: / braid: / plus:``.

    Fields are separated by newlines or semicolons, in any order, each given
    exactly once; ``braid`` may be empty.
    """
    fields: dict[str, str] = {}
    for chunk in text.replace(";", "\n").splitlines():
        chunk = chunk.strip()
        if not chunk or chunk.startswith("#"):
            continue
        key, sep, value = chunk.partition(":")
        key = key.strip()
        if not sep or key not in _FIELDS:
            raise ParseError(f"expected one of {', '.join(_FIELDS)} followed by ':', got {chunk!r}")
        if key in fields:
            raise ParseError(f"field {key!r} given twice")
        fields[key] = value.strip()
    missing = [k for k in _FIELDS if k not in fields]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    try:
        n = int(fields["n"])
    except ValueError:
        raise ParseError(f"n must be an integer, got {fields['n']!r}") from None
    braid = parse_braid(f"-n {n} {fields['braid']}")
    try:
        return BVElement(tree_parse(fields["minus"]), braid, tree_parse(fields["plus"]))
    except UsageError as exc:
        raise ParseError(str(exc)) from None
