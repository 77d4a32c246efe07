"""Braid words, the Artin action, pure-braid generators and the Artin combing.

Conventions
-----------
* A braid word is a tuple of signed generator indices read in time order:
  ``(1, 1, -2)`` is ``s1 s1 s2^-1``. ``s_i`` crosses the strand at position
  ``i`` over the strand at position ``i + 1``.
* The Artin action is composed so that the first letter acts first, i.e.
  ``phi_{bc} = phi_c o phi_b``. With this choice the map sending a braid in
  the kernel of "delete strand 1" to the conjugator of ``x1`` is a group
  homomorphism taking ``A(1, j)`` to ``y_j``.
* ``A(i, j) = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, ParseError, UsageError
from .freegroup import FreeWord, Sign, _int, join_reduced, reduce_letters, sign_free


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise UsageError(f"a braid needs at least one strand, got {self.n}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) >= self.n:
                raise UsageError(f"letter {a} outside generators 1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return braid_mul(self, other)

    def __invert__(self) -> BraidWord:
        return braid_inv(self)

    def reduced(self) -> BraidWord:
        return BraidWord(self.n, reduce_letters(self.letters))

    def __str__(self) -> str:
        return format_braid(self)


def braid_mul(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.n != b.n:
        raise UsageError(f"strand mismatch: {a.n} vs {b.n}")
    return BraidWord(a.n, join_reduced(a.letters, b.letters))


def braid_inv(a: BraidWord) -> BraidWord:
    return BraidWord(a.n, tuple(-x for x in reversed(a.letters)))


def braid_concat(n: int, words: Sequence[BraidWord]) -> BraidWord:
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return BraidWord(n, tuple(out))


# -- permutations ---------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """``images[p - 1]`` is the bottom position of the strand starting at top position ``p``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise UsageError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (braid multiplication order)."""
        return Permutation(tuple(other(v) for v in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))


def braid_permutation(b: BraidWord) -> Permutation:
    at = list(range(1, b.n + 1))  # at[pos-1] = strand currently at pos
    for a in b.letters:
        k = abs(a)
        at[k - 1], at[k] = at[k], at[k - 1]
    images = [0] * b.n
    for pos, strand in enumerate(at, 1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def is_pure(b: BraidWord) -> bool:
    return braid_permutation(b).is_identity()


def _require_pure(b: BraidWord, what: str) -> None:
    if not is_pure(b):
        raise DomainError(f"{what} needs a pure braid; {format_braid(b)} induces {braid_permutation(b).images}")


# -- Artin action -----------------------------------------------------------


def artin_image(b: BraidWord) -> tuple[FreeWord, ...]:
    """Images of ``x1..xn`` under the Artin automorphism of ``b``.

    ``s_i``: ``x_i -> x_i x_{i+1} x_i^-1``, ``x_{i+1} -> x_i``. The first letter
    acts first, so the composite is ``phi_last o ... o phi_first``; it is
    accumulated right to left as ``I <- I o phi_letter``, which only touches
    two images per letter.
    """
    imgs: list[tuple[int, ...]] = [(k,) for k in range(1, b.n + 1)]
    for a in reversed(b.letters):
        i = abs(a) - 1
        u, v = imgs[i], imgs[i + 1]
        if a > 0:
            imgs[i] = join_reduced(join_reduced(u, v), _inv(u))
            imgs[i + 1] = u
        else:
            imgs[i] = v
            imgs[i + 1] = join_reduced(join_reduced(_inv(v), u), v)
    return tuple(FreeWord(b.n, w) for w in imgs)


def _inv(w: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(w))


def artin_image_of_first(b: BraidWord) -> tuple[int, ...]:
    """Image of ``x1`` alone, applying the letters' substitutions in order."""
    w: tuple[int, ...] = (1,)
    for a in b.letters:
        i = abs(a)
        if a > 0:
            sub = {i: (i, i + 1, -i), -i: (i, -(i + 1), -i), i + 1: (i,), -(i + 1): (-i,)}
        else:
            sub = {i: (i + 1,), -i: (-(i + 1),), i + 1: (-(i + 1), i, i + 1), -(i + 1): (-(i + 1), -i, i + 1)}
        out: list[int] = []
        for x in w:
            for y in sub.get(x, (x,)):
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        w = tuple(out)
    return w


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.n != b.n:
        raise UsageError(f"strand mismatch: {a.n} vs {b.n}")
    if reduce_letters(a.letters) == reduce_letters(b.letters):
        return True
    return artin_image(a) == artin_image(b)


def is_trivial(b: BraidWord) -> bool:
    return braid_equal(b, BraidWord(b.n))


# -- pure braid generators and strand calculus ------------------------------


def band_generator(i: int, j: int, n: int) -> BraidWord:
    """The pure braid ``A(i, j)`` on ``n`` strands."""
    if not 1 <= i < j <= n:
        raise UsageError(f"A({i},{j}) needs 1 <= i < j <= n = {n}")
    up = tuple(range(j - 1, i, -1))
    return BraidWord(n, up + (i, i) + tuple(-k for k in reversed(up)))


def linking_number(b: BraidWord, r: int, s: int) -> int:
    _require_pure(b, "linking_number")
    if not 1 <= r < s <= b.n:
        raise UsageError(f"need 1 <= r < s <= {b.n}, got {r}, {s}")
    at = list(range(1, b.n + 1))
    total = 0
    for a in b.letters:
        k = abs(a)
        if {at[k - 1], at[k]} == {r, s}:
            total += 1 if a > 0 else -1
        at[k - 1], at[k] = at[k], at[k - 1]
    return total // 2


def strand_delete(b: BraidWord, k: int) -> BraidWord:
    """Remove the strand starting at position ``k``; n -> n - 1."""
    if not 1 <= k <= b.n:
        raise UsageError(f"strand {k} outside 1..{b.n}")
    if b.n == 1:
        raise UsageError("cannot delete the only strand")
    pos = k
    out = []
    for a in b.letters:
        m = abs(a)
        if m == pos:
            pos += 1
        elif m == pos - 1:
            pos -= 1
        else:
            m2 = m if m < pos else m - 1
            out.append(m2 if a > 0 else -m2)
    return BraidWord(b.n - 1, reduce_letters(out))


def strand_insert_left(b: BraidWord) -> BraidWord:
    return BraidWord(b.n + 1, tuple(a + 1 if a > 0 else a - 1 for a in b.letters))


def strand_double(b: BraidWord, t: int) -> BraidWord:
    """Cable the strand starting at position ``t`` into two parallel strands."""
    if not 1 <= t <= b.n:
        raise UsageError(f"strand {t} outside 1..{b.n}")
    out = []
    for a in b.letters:
        k, e = abs(a), (1 if a > 0 else -1)
        if k < t - 1:
            out.append(a)
        elif k > t:
            out.append(e * (k + 1))
        elif k == t - 1:
            out += [e * (t - 1), e * t]
            t -= 1
        else:
            out += [e * (t + 1), e * t]
            t += 1
    return BraidWord(b.n + 1, tuple(out))


# -- combing ------------------------------------------------------------------


def _kernel_word(b: BraidWord) -> tuple[int, ...]:
    w = artin_image_of_first(b)
    half = (len(w) - 1) // 2
    if len(w) % 2 == 0 or w[half] != 1:
        raise DomainError(f"image of x1 is not a conjugate of x1: {w}")
    return reduce_letters(x for x in w[:half] if abs(x) != 1)


def kernel_extract(b: BraidWord) -> FreeWord:
    """Write a braid whose first strand alone is knotted as a word in ``y_j = A(1, j)``.

    The result is a rank-``n`` word whose letter ``±j`` stands for ``y_j^±1``
    (generator 1 never occurs).
    """
    _require_pure(b, "kernel_extract")
    if b.n > 1 and not is_trivial(strand_delete(b, 1)):
        raise DomainError("braid does not become trivial after deleting strand 1")
    return FreeWord(b.n, _kernel_word(b))


Letter = tuple[int, int, int]  # (i, j, exponent) for A(i, j)^exponent


@dataclass(frozen=True)
class Combing:
    """``p = f_1 f_2 ... f_{n-1}``; ``factors[k-1]`` is ``f_k``, a word in ``A(n-k, l)``."""

    n: int
    factors: tuple[tuple[Letter, ...], ...]

    def factor(self, k: int) -> tuple[Letter, ...]:
        return self.factors[k - 1]

    def first_nontrivial(self) -> Optional[int]:
        return next((k for k, f in enumerate(self.factors, 1) if f), None)

    def factor_word(self, k: int) -> FreeWord:
        """``f_k`` as a rank-``k`` free word with ``A(n-k, l) -> x_{l-(n-k)}``."""
        base = self.n - k
        return FreeWord(k, tuple(e * (j - base) for _, j, e in self.factors[k - 1]))

    def expand(self) -> BraidWord:
        out: list[int] = []
        for f in self.factors:
            for i, j, e in f:
                g = band_generator(i, j, self.n).letters
                out.extend(g if e > 0 else tuple(-x for x in reversed(g)))
        return BraidWord(self.n, tuple(out))

    def check_alphabet(self) -> bool:
        return all(
            i == self.n - k and self.n - k < j <= self.n and e in (1, -1)
            for k, f in enumerate(self.factors, 1)
            for i, j, e in f
        )


def _delete_chain(p: BraidWord) -> list[BraidWord]:
    # chain[m] is p with its first m strands deleted
    chain = [p]
    while chain[-1].n > 1:
        chain.append(strand_delete(chain[-1], 1))
    return chain


def _factor_from(q: BraidWord, q_tail: BraidWord, n: int) -> tuple[Letter, ...]:
    # kernel factor of q (m strands) relabelled into the n-strand alphabet
    k = braid_mul(braid_inv(strand_insert_left(q_tail)), q)
    shift = n - q.n
    return tuple((1 + shift, abs(y) + shift, 1 if y > 0 else -1) for y in _kernel_word(k))


def iter_factors(p: BraidWord) -> Iterator[tuple[int, tuple[Letter, ...]]]:
    """Yield ``(k, f_k)`` for k = 1, 2, ... lazily, cheapest factors first."""
    _require_pure(p, "the Artin combing")
    chain = _delete_chain(p)
    n = p.n
    for k in range(1, n):
        q = chain[n - 1 - k]
        yield k, _factor_from(q, chain[n - k], n)


def artin_comb(p: BraidWord) -> Combing:
    return Combing(p.n, tuple(f for _, f in iter_factors(p)))


@dataclass(frozen=True)
class PureSign:
    sign: Sign
    factor_index: Optional[int] = None
    factor: tuple[Letter, ...] = ()


def pure_sign_detail(p: BraidWord) -> PureSign:
    """Sign of a pure braid, with the first nontrivial combing factor that decided it."""
    n = p.n
    for k, f in iter_factors(p):
        if f:
            base = n - k
            word = FreeWord(k, tuple(e * (j - base) for _, j, e in f))
            return PureSign(sign_free(word), k, f)
    return PureSign(Sign.ZERO)


def sign_pure(p: BraidWord) -> Sign:
    return pure_sign_detail(p).sign


# -- text forms -----------------------------------------------------------------


def format_braid(b: BraidWord) -> str:
    return " ".join(["-n", str(b.n), *map(str, b.letters)])


_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def factor_name(k: int) -> str:
    """``f`` with a subscript index, as used in sign witnesses."""
    return "f" + str(k).translate(_SUBSCRIPT)


def format_letter(letter: Letter) -> str:
    i, j, e = letter
    return f"A({i},{j})" if e > 0 else f"A({i},{j})^-1"


def format_factor(f: Sequence[Letter]) -> str:
    return " ".join(map(format_letter, f)) if f else "1"


def format_combing(c: Combing) -> str:
    return "\n".join(f"f{k}: {format_factor(f)}" for k, f in enumerate(c.factors, 1))


def parse_braid(text: str) -> BraidWord:
    """Parse ``"-n 5 1 1 2 -3"``; without ``-n`` the strand count is one more
    than the largest generator used."""
    tokens = text.split()
    n: Optional[int] = None
    if tokens[:1] == ["-n"]:
        if len(tokens) < 2:
            raise ParseError("'-n' must be followed by the strand count")
        n = _int(tokens[1])
        tokens = tokens[2:]
    letters = tuple(_int(t) for t in tokens)
    if any(a == 0 for a in letters):
        raise ParseError("0 is not a braid generator")
    if n is None:
        n = max((abs(a) for a in letters), default=0) + 1
    try:
        return BraidWord(n, letters)
    except UsageError as exc:
        raise ParseError(str(exc)) from None
