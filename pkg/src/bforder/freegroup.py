"""Free groups: words, the Magnus expansion, deviations and the Magnus order.

Words are tuples of signed generator indices: ``(1, -2, 1)`` is
``x1 x2^-1 x1``. The Magnus expansion sends ``x_i`` to ``1 + X_i``; an element
is positive when the smallest monomial of ``phi(w) - 1`` has a positive
coefficient.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from .errors import DeviationCeilingError, ParseError, UsageError
from .ncseries import Monomial, NcSeries, leading_term

CEILING_ENV = "BFORDER_DEVIATION_CEILING"
INITIAL_CAP = 4


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __neg__(self) -> Sign:
        return Sign(-int(self))

    @classmethod
    def of(cls, value: int) -> Sign:
        return cls((value > 0) - (value < 0))

    def __str__(self) -> str:
        return self.name.lower()


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Free reduction of a signed-letter sequence (also used for braid words)."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def join_reduced(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Concatenate two reduced sequences, cancelling only at the seam."""
    k = 0
    m = min(len(u), len(v))
    while k < m and u[len(u) - 1 - k] == -v[k]:
        k += 1
    return tuple(u[: len(u) - k]) + tuple(v[k:])


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise UsageError(f"rank must be positive, got {self.rank}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise UsageError(f"letter {a} outside generators 1..{self.rank}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def generator(cls, i: int, rank: int) -> FreeWord:
        return cls(rank, (i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return fg_mul(self, other)

    def __invert__(self) -> FreeWord:
        return fg_inv(self)

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else fg_inv(self)
        out = FreeWord(self.rank)
        for _ in range(abs(k)):
            out = fg_mul(out, base)
        return out

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def is_identity(self) -> bool:
        return not free_reduce(self).letters

    def with_rank(self, rank: int) -> FreeWord:
        return FreeWord(rank, self.letters)

    def __str__(self) -> str:
        return format_word(self)


def free_reduce(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, reduce_letters(w.letters))


def _check_rank(u: FreeWord, v: FreeWord) -> None:
    if u.rank != v.rank:
        raise UsageError(f"rank mismatch: {u.rank} vs {v.rank}")


def fg_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    _check_rank(u, v)
    return FreeWord(u.rank, reduce_letters(u.letters + v.letters))


def fg_inv(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-a for a in reversed(u.letters)))


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """``[a, b] = a^-1 b^-1 a b``."""
    _check_rank(a, b)
    return FreeWord(a.rank, reduce_letters(fg_inv(a).letters + fg_inv(b).letters + a.letters + b.letters))


def simple_commutator(indices: Sequence[int], rank: Optional[int] = None) -> FreeWord:
    """Left-nested ``[[...[x_i1, x_i2], ...], x_id]``."""
    if len(indices) < 2:
        raise UsageError("a simple commutator needs at least two indices")
    rank = rank or max(indices)
    out = FreeWord.generator(indices[0], rank)
    for k in indices[1:]:
        out = commutator(out, FreeWord.generator(k, rank))
    return out


def substitute(w: FreeWord, images: Sequence[FreeWord], rank: int) -> FreeWord:
    """Apply the homomorphism ``x_k -> images[k-1]`` and reduce."""
    inv = [fg_inv(im).letters for im in images]
    out: list[int] = []
    for a in w.letters:
        for b in images[a - 1].letters if a > 0 else inv[-a - 1]:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return FreeWord(rank, tuple(out))


def theta_apply(i: int, w: FreeWord) -> FreeWord:
    """``x_k -> x_k (k<i), x_i x_{i+1} (k=i), x_{k+1} (k>i)``, rank n -> n+1."""
    if not 1 <= i <= w.rank:
        raise UsageError(f"theta index {i} outside 1..{w.rank}")
    n1 = w.rank + 1
    images = [
        FreeWord(n1, (k,) if k < i else (k, k + 1) if k == i else (k + 1,))
        for k in range(1, w.rank + 1)
    ]
    return substitute(w, images, n1)


def _binomial_powers(e: int, cap: int) -> list[int]:
    # coefficients of (1+X)^e, e possibly negative, up to X^cap
    coeffs = [1]
    for k in range(1, cap + 1):
        coeffs.append(coeffs[-1] * (e - k + 1) // k)
    return coeffs


def magnus_expand(w: FreeWord, cap: int) -> NcSeries:
    """phi(w) truncated at degree ``cap``.

    Runs of equal letters are expanded in one step through the binomial
    series of ``(1 + X_i)^e``.
    """
    if cap < 1:
        raise UsageError(f"cap must be at least 1, got {cap}")
    acc: dict[Monomial, int] = {(): 1}
    letters = w.letters
    pos = 0
    while pos < len(letters):
        a = letters[pos]
        end = pos
        while end < len(letters) and letters[end] == a:
            end += 1
        e = (end - pos) * (1 if a > 0 else -1)
        pos = end
        i = abs(a)
        powers = _binomial_powers(e, cap)
        out: dict[Monomial, int] = {}
        for m, c in acc.items():
            room = cap - len(m)
            tail: Monomial = ()
            for k in range(room + 1):
                v = out.get(m + tail, 0) + c * powers[k]
                if v:
                    out[m + tail] = v
                else:
                    out.pop(m + tail, None)
                tail += (i,)
        acc = out
    return NcSeries._raw(w.rank, cap, acc)


def _default_ceiling(w: FreeWord) -> int:
    env = os.environ.get(CEILING_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CEILING_ENV} must be an integer, got {env!r}") from None
    return max(INITIAL_CAP, len(w))


def deviation(w: FreeWord, ceiling: Optional[int] = None) -> Optional[tuple[int, NcSeries]]:
    """Lowest-degree homogeneous part of ``phi(w) - 1`` as ``(degree, form)``.

    Returns None for the identity. The truncation starts at degree 4 and
    doubles until something survives; ``ceiling`` (default: the reduced word
    length, or $BFORDER_DEVIATION_CEILING) bounds the search.
    """
    w = free_reduce(w)
    if not w.letters:
        return None
    if ceiling is None:
        ceiling = _default_ceiling(w)
    cap = min(INITIAL_CAP, ceiling)
    while True:
        phi = magnus_expand(w, cap)
        terms = {m: c for m, c in phi._terms.items() if m}
        if terms:
            d = min(map(len, terms))
            form = {m: c for m, c in terms.items() if len(m) == d}
            return d, NcSeries._raw(w.rank, d, form)
        if cap >= ceiling:
            raise DeviationCeilingError(
                f"phi(w) - 1 vanishes up to degree {cap} for a nontrivial word of length "
                f"{len(w)}; raise {CEILING_ENV} to search further"
            )
        cap = min(2 * cap, ceiling)


def magnus_leading(w: FreeWord, ceiling: Optional[int] = None) -> Optional[tuple[Monomial, int]]:
    """Smallest monomial of ``phi(w) - 1`` with its coefficient."""
    dev = deviation(w, ceiling)
    return None if dev is None else leading_term(dev[1])


def sign_free(w: FreeWord, ceiling: Optional[int] = None) -> Sign:
    lead = magnus_leading(w, ceiling)
    return Sign.ZERO if lead is None else Sign.of(lead[1])


def format_word(w: FreeWord) -> str:
    return " ".join(str(a) for a in w.letters)


def parse_word(text: str, rank: Optional[int] = None) -> FreeWord:
    """Parse ``"1 -2 1"``; an optional leading ``-r <rank>`` fixes the rank."""
    tokens = text.split()
    if tokens[:1] == ["-r"]:
        if len(tokens) < 2:
            raise ParseError("'-r' must be followed by the rank")
        rank = _int(tokens[1])
        tokens = tokens[2:]
    letters = tuple(_int(t) for t in tokens)
    if any(a == 0 for a in letters):
        raise ParseError("0 is not a generator")
    rank = rank or max((abs(a) for a in letters), default=1)
    try:
        return FreeWord(rank, letters)
    except UsageError as exc:
        raise ParseError(str(exc)) from None


def _int(token: str) -> int:
    try:
        return int(token.replace("−", "-"))
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}") from None
