"""The bi-order on BF: lexicographic in F ⋉ PBV.

An element ``(T-, p, T+)`` is positive when its F part ``(T-, T+)`` is
positive, or when the F part is trivial and ``p`` is a positive pure braid.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .braid import Letter, factor_name, format_factor, pure_sign_detail
from .braided import BVElement, Kind, bv_inv, bv_mul, classify
from .errors import DomainError
from .freegroup import Sign
from .trees import f_sign_detail


class Relation(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


@dataclass(frozen=True)
class Witness:
    """Which layer settled a sign: ``"F"`` (slope at ``index``), ``"PBV"``
    (combing factor ``f_index``) or ``"identity"``."""

    layer: str
    index: Optional[int] = None
    factor: tuple[Letter, ...] = ()

    def describe(self) -> str:
        if self.layer == "F":
            return f"decided by F slope at leaf {self.index}"
        if self.layer == "PBV":
            return f"decided by combing factor {factor_name(self.index)} = {format_factor(self.factor)}"
        return "identity element"


@dataclass(frozen=True)
class OrderVerdict:
    relation: Relation
    witness: Witness

    def __str__(self) -> str:
        return f"{self.relation.value} {self.witness.describe()}"


def _pbv_detail(x: BVElement) -> tuple[Sign, Witness]:
    d = pure_sign_detail(x.braid)
    if d.sign is Sign.ZERO:
        return Sign.ZERO, Witness("identity")
    return d.sign, Witness("PBV", d.factor_index, d.factor)


def sign_pbv(x: BVElement) -> Sign:
    if classify(x) is not Kind.PBV:
        raise DomainError("sign_pbv needs an element of PBV (equal trees, pure braid)")
    return _pbv_detail(x)[0]


def bf_sign_detail(x: BVElement) -> tuple[Sign, Witness]:
    kind = classify(x)
    if kind is Kind.BV:
        raise DomainError("the order is defined on BF only; the braid is not pure")
    s, leaf = f_sign_detail(x.f_part)
    if s is not Sign.ZERO:
        return s, Witness("F", leaf)
    return _pbv_detail(x)


def sign_bf(x: BVElement) -> Sign:
    return bf_sign_detail(x)[0]


_RELATION = {Sign.POSITIVE: Relation.LESS, Sign.ZERO: Relation.EQUAL, Sign.NEGATIVE: Relation.GREATER}


def bf_compare(x: BVElement, y: BVElement) -> OrderVerdict:
    """``x < y`` iff ``x^-1 y`` is positive."""
    s, w = bf_sign_detail(bv_mul(bv_inv(x), y))
    return OrderVerdict(_RELATION[s], w)
