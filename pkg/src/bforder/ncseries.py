"""Truncated power series in non-commuting variables with integer coefficients.

A monomial ``X_{i1} X_{i2} ... X_{id}`` is stored as the tuple ``(i1, ..., id)``
of 1-based variable indices; the empty tuple is the unit monomial. A series
carries its rank (number of variables) and its truncation cap: every monomial
of degree larger than the cap is discarded by the ring operations.

Monomials are totally ordered by degree first and then lexicographically,
with ``X1 < X2 < ... < Xn``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from typing import Optional

from .errors import UsageError

Monomial = tuple[int, ...]


def mono_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key realising the monomial order."""
    return (len(m), m)


def mono_compare(a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    ka, kb = mono_key(a), mono_key(b)
    return (ka > kb) - (ka < kb)


def successors(m: Monomial, i: int) -> list[Monomial]:
    """All i-successors of ``m``: indices above ``i`` shift up by one and every
    occurrence of ``i`` becomes ``i`` or ``i + 1``."""
    choices = [(k,) if k < i else (k + 1,) if k > i else (i, i + 1) for k in m]
    return [tuple(c) for c in itertools.product(*choices)]


def minimal_successor(m: Monomial, i: int) -> Monomial:
    return tuple(k if k <= i else k + 1 for k in m)


class NcSeries:
    """Immutable truncated series. Zero coefficients are never stored."""

    __slots__ = ("rank", "cap", "_terms", "_hash")

    def __init__(self, rank: int, cap: int, terms: Mapping[Monomial, int] | Iterable = ()):
        if rank < 1:
            raise UsageError(f"rank must be positive, got {rank}")
        if cap < 0:
            raise UsageError(f"cap must be non-negative, got {cap}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if any(not 1 <= k <= rank for k in mono):
                raise UsageError(f"monomial {mono} uses a variable outside 1..{rank}")
            if len(mono) > cap:
                continue
            c = clean.get(mono, 0) + int(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.rank = rank
        self.cap = cap
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, rank: int, cap: int, terms: dict[Monomial, int]) -> NcSeries:
        # trusted constructor: terms already clean
        s = object.__new__(cls)
        s.rank, s.cap, s._terms, s._hash = rank, cap, terms, None
        return s

    @classmethod
    def zero(cls, rank: int, cap: int) -> NcSeries:
        return cls._raw(rank, cap, {})

    @classmethod
    def one(cls, rank: int, cap: int) -> NcSeries:
        return cls._raw(rank, cap, {(): 1})

    @classmethod
    def variable(cls, i: int, rank: int, cap: int) -> NcSeries:
        return cls(rank, cap, {(i,): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, mono: Iterable[int]) -> int:
        return self._terms.get(tuple(mono), 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=mono_key)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NcSeries):
            return NotImplemented
        return (self.rank, self.cap, self._terms) == (other.rank, other.cap, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self.cap, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NcSeries(rank={self.rank}, cap={self.cap}, {format_series(self)!r})"

    def _check(self, other: NcSeries) -> None:
        if (self.rank, self.cap) != (other.rank, other.cap):
            raise UsageError(
                f"series mismatch: rank/cap {self.rank}/{self.cap} vs {other.rank}/{other.cap}"
            )

    def __add__(self, other: NcSeries) -> NcSeries:
        return series_add(self, other)

    def __neg__(self) -> NcSeries:
        return NcSeries._raw(self.rank, self.cap, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: NcSeries) -> NcSeries:
        return series_add(self, -other)

    def __mul__(self, other: NcSeries) -> NcSeries:
        return series_mul(self, other)

    def scale(self, k: int) -> NcSeries:
        if not k:
            return NcSeries.zero(self.rank, self.cap)
        return NcSeries._raw(self.rank, self.cap, {m: k * c for m, c in self._terms.items()})

    def homogeneous_part(self, degree: int) -> NcSeries:
        return NcSeries._raw(
            self.rank, self.cap, {m: c for m, c in self._terms.items() if len(m) == degree}
        )

    def min_degree(self) -> Optional[int]:
        return min(map(len, self._terms), default=None)

    def with_cap(self, cap: int) -> NcSeries:
        """Re-truncate to a smaller cap, or declare a larger one.

        Raising the cap is only honest for polynomials whose true degree is
        known to be bounded (homogeneous forms, for instance)."""
        return NcSeries(self.rank, cap, self._terms)


def series_add(a: NcSeries, b: NcSeries) -> NcSeries:
    a._check(b)
    out = dict(a._terms)
    for m, c in b._terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            del out[m]
    return NcSeries._raw(a.rank, a.cap, out)


def series_mul(a: NcSeries, b: NcSeries) -> NcSeries:
    a._check(b)
    cap = a.cap
    out: dict[Monomial, int] = {}
    b_items = sorted(b._terms.items(), key=lambda t: len(t[0]))
    for ma, ca in a._terms.items():
        room = cap - len(ma)
        for mb, cb in b_items:
            if len(mb) > room:
                break
            m = ma + mb
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                del out[m]
    return NcSeries._raw(a.rank, cap, out)


def xi_apply(i: int, s: NcSeries) -> NcSeries:
    """Ring map ``X_k -> X_k (k<i), X_i + X_{i+1}, X_{k+1} (k>i)`` into rank + 1."""
    if not 1 <= i <= s.rank:
        raise UsageError(f"xi index {i} outside 1..{s.rank}")
    out: dict[Monomial, int] = {}
    for m, c in s._terms.items():
        for succ in successors(m, i):
            v = out.get(succ, 0) + c
            if v:
                out[succ] = v
            else:
                del out[succ]
    return NcSeries._raw(s.rank + 1, s.cap, out)


def leading_term(s: NcSeries) -> Optional[tuple[Monomial, int]]:
    """Smallest stored monomial and its coefficient, or None for zero."""
    if not s:
        return None
    m = min(s._terms, key=mono_key)
    return m, s._terms[m]


def format_monomial(m: Monomial) -> str:
    return "".join(f"X{k}" for k in m) if m else "1"


def format_series(s: NcSeries) -> str:
    """Render as ``1 -X1 +X1X1 +3X1X2`` in monomial order; ``0`` for zero."""
    if not s:
        return "0"
    parts = []
    for m in s.monomials():
        c = s.coefficient(m)
        mag = abs(c)
        body = format_monomial(m)
        if mag != 1 and m:
            body = f"{mag}{body}"
        elif not m:
            body = str(mag)
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return " ".join(parts)
