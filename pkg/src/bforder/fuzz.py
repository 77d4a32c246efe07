"""Seeded property fuzzing for every invariant the library promises.

Each property has a generator, drawing a case from a ``random.Random``
seeded by ``"{seed}:{property}:{index}"``, and a checker returning ``None``
on success or a message on failure. Failing cases are shrunk greedily by
deleting letters (and expansion steps) while the failure persists.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Optional

from . import braid as br
from . import braided as bd
from . import freegroup as fg
from . import ncseries as nc
from . import order
from . import trees as tr
from .errors import BFOrderError
from .freegroup import reduce_letters


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    cases: int = 100
    max_strands: int = 6
    max_letters: int = 24
    max_leaves: int = 8
    max_rank: int = 4
    max_weight: int = 4
    max_word: int = 8
    max_cap: int = 4

    def __post_init__(self):
        for name in ("cases", "max_strands", "max_letters", "max_leaves", "max_rank",
                     "max_weight", "max_word", "max_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_strands < 2:
            raise ValueError("max_strands must be at least 2")
        if self.max_weight < 2:
            raise ValueError("max_weight must be at least 2")


class Skip(Exception):
    """A (shrunk) case no longer satisfies the property's preconditions."""


# -- generators ---------------------------------------------------------------------


def rand_letters(rng: random.Random, gens: int, length: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, gens) for _ in range(length)]


def rand_free_word(rng: random.Random, rank: int, max_len: int) -> fg.FreeWord:
    return fg.FreeWord(rank, tuple(rand_letters(rng, rank, rng.randint(0, max_len))))


def rand_braid(rng: random.Random, n: int, max_letters: int) -> br.BraidWord:
    return br.BraidWord(n, tuple(rand_letters(rng, n - 1, rng.randint(0, max_letters))))


def _sorting_tail(rng: random.Random, n: int, letters: Sequence[int]) -> list[int]:
    at = list(range(1, n + 1))
    for a in letters:
        k = abs(a)
        at[k - 1], at[k] = at[k], at[k - 1]
    tail = []
    for end in range(n - 1, 0, -1):
        for k in range(1, end + 1):
            if at[k - 1] > at[k]:
                at[k - 1], at[k] = at[k], at[k - 1]
                tail.append(rng.choice((1, -1)) * k)
    return tail


def _inv(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(w))


def _rand_band(rng: random.Random, n: int) -> tuple[int, ...]:
    i = rng.randint(1, n - 1)
    j = rng.randint(i + 1, n)
    g = br.band_generator(i, j, n).letters
    return g if rng.random() < 0.5 else _inv(g)


def rand_pure_braid(rng: random.Random, n: int, max_letters: int) -> br.BraidWord:
    """Random pure braid with at most ``max_letters`` letters, mixing three recipes."""
    recipe = rng.randrange(4)
    if recipe == 3:
        # commutator of two generators: trivial abelianised factors
        for _ in range(50):
            g, h = (_rand_band(rng, n) for _ in range(2))
            comm = _inv(g) + _inv(h) + g + h
            if len(comm) <= max_letters:
                return br.BraidWord(n, reduce_letters(comm))
        return br.BraidWord(n)
    if recipe == 0:
        # random walk closed up by a sorting word
        for _ in range(50):
            walk = rand_letters(rng, n - 1, rng.randint(0, max_letters))
            letters = walk + _sorting_tail(rng, n, walk)
            if len(letters) <= max_letters:
                return br.BraidWord(n, tuple(letters))
        return br.BraidWord(n)
    letters: list[int] = []
    budget = rng.randint(0, max_letters)
    while True:
        g = _rand_band(rng, n)
        if recipe == 2 and rng.random() < 0.5:
            w = rand_letters(rng, n - 1, rng.randint(1, 3))
            conj = tuple(w) + g + _inv(w)
            if br.is_pure(br.BraidWord(n, conj)):
                g = conj
        if len(letters) + len(g) > budget:
            return br.BraidWord(n, tuple(letters))
        letters.extend(g)


def rand_tree(rng: random.Random, leaves: int) -> tr.Tree:
    t = tr.LEAF
    while t.leaves < leaves:
        t = tr.tree_expand(t, rng.randint(1, t.leaves))
    return t


def rand_bf(rng: random.Random, max_leaves: int, max_letters: int,
            f_part: Optional[tr.TreePair] = None) -> bd.BVElement:
    if f_part is None:
        n = rng.randint(1, max_leaves)
        f_part = tr.TreePair(rand_tree(rng, n), rand_tree(rng, n))
    n = f_part.minus.leaves
    p = rand_pure_braid(rng, n, max_letters) if n > 1 else br.BraidWord(1)
    return bd.BVElement(f_part.minus, p, f_part.plus)


def rand_pbv(rng: random.Random, max_leaves: int, max_letters: int) -> bd.BVElement:
    n = rng.randint(2, max(2, max_leaves))
    t = rand_tree(rng, n)
    return bd.BVElement(t, rand_pure_braid(rng, n, max_letters), t)


def rand_simple_commutator_indices(rng: random.Random, rank: int, weight: int) -> list[int]:
    idx = [rng.randint(1, rank) for _ in range(weight)]
    while idx[1] == idx[0]:
        idx[1] = rng.randint(1, rank)
    return idx


def _bf_triple(rng: random.Random, cfg: FuzzConfig) -> list[bd.BVElement]:
    # share F parts often so that the PBV layer gets exercised
    x = rand_bf(rng, cfg.max_leaves, min(cfg.max_letters, 16))
    out = [x]
    for _ in range(2):
        r = rng.random()
        if r < 0.4:
            nxt = rand_bf(rng, cfg.max_leaves, min(cfg.max_letters, 16), out[-1].f_part)
        elif r < 0.55:
            nxt = rand_pbv(rng, cfg.max_leaves, min(cfg.max_letters, 16))
        else:
            nxt = rand_bf(rng, cfg.max_leaves, min(cfg.max_letters, 16))
        out.append(nxt)
    return out


# -- properties -------------------------------------------------------------------


@dataclass
class Property:
    name: str
    generate: Callable[[random.Random, FuzzConfig], dict]
    check: Callable[[dict], Optional[str]]
    description: str = ""


def _need_pure(p: br.BraidWord) -> None:
    if not br.is_pure(p):
        raise Skip


def _gen_pure(rng, cfg):
    n = rng.randint(2, cfg.max_strands)
    return {"p": rand_pure_braid(rng, n, cfg.max_letters)}


def check_doubling(case):
    p = case["p"]
    _need_pure(p)
    s = br.sign_pure(p)
    for t in range(1, p.n + 1):
        s2 = br.sign_pure(br.strand_double(p, t))
        if s2 != s:
            return f"sign_pure(p) = {s} but doubling strand {t} gives {s2}"
    return None


def check_first_factor_shift(case):
    p = case["p"]
    _need_pure(p)
    c = br.artin_comb(p)
    j = c.first_nontrivial()
    if j is None:
        return None
    n = p.n
    for t in range(1, n + 1):
        c2 = br.artin_comb(br.strand_double(p, t))
        if t <= n - j:
            want_index = j
            want = tuple((i + 1, k + 1, e) for i, k, e in c.factor(j))
            got = c2.factor(j)
        else:
            want_index = j + 1
            base = n - j
            theta = fg.theta_apply(t - base, c.factor_word(j))
            want = tuple((base, x + base if x > 0 else -x + base, 1 if x > 0 else -1)
                         for x in theta.letters)
            got = c2.factor(j + 1)
        if c2.first_nontrivial() != want_index:
            return f"doubling strand {t}: first factor index {c2.first_nontrivial()}, expected {want_index}"
        if got != want:
            return (f"doubling strand {t}: f{want_index} = {br.format_factor(got)}, "
                    f"expected {br.format_factor(want)}")
    return None


def check_comb_roundtrip(case):
    p = case["p"]
    _need_pure(p)
    c = br.artin_comb(p)
    if not c.check_alphabet():
        return f"combing alphabet violated: {br.format_combing(c)}"
    if not br.braid_equal(c.expand(), p):
        return f"re-expanded combing differs from input: {br.format_combing(c)}"
    return None


def check_pure_conjugation(case):
    p, q = case["p"], case["q"]
    _need_pure(p)
    _need_pure(q)
    if q.n != p.n:
        raise Skip
    s = br.sign_pure(p)
    s2 = br.sign_pure(br.braid_inv(q) * p * q)
    if s != s2:
        return f"sign_pure(p) = {s} but sign_pure(q^-1 p q) = {s2}"
    if s > 0 and br.sign_pure(q) > 0 and br.sign_pure(p * q) <= 0:
        return "product of positive pure braids is not positive"
    return None


def _gen_pure_pair(rng, cfg):
    n = rng.randint(2, cfg.max_strands)
    half = max(1, cfg.max_letters // 2)
    return {"p": rand_pure_braid(rng, n, half), "q": rand_pure_braid(rng, n, half)}


def _gen_kernel_action(rng, cfg):
    n = rng.randint(2, cfg.max_strands)
    # f is a word in A(1, j): positive after possibly inverting
    f = br.BraidWord(n)
    for _ in range(rng.randint(1, 4)):
        j = rng.randint(2, n)
        g = br.band_generator(1, j, n)
        f = f * (g if rng.random() < 0.5 else br.braid_inv(g))
    r = rand_pure_braid(rng, n - 1, cfg.max_letters // 2) if n > 2 else br.BraidWord(1)
    return {"f": f, "r": r}


def check_kernel_action(case):
    f, r = case["f"], case["r"]
    if not br.is_pure(f) or not br.is_pure(r) or r.n != f.n - 1:
        raise Skip
    if not br.is_trivial(br.strand_delete(f, 1)):
        raise Skip
    s = br.sign_pure(f)
    if s == 0:
        return None
    if s < 0:
        f = br.braid_inv(f)
    q = br.strand_insert_left(r)
    if br.sign_pure(q * f * br.braid_inv(q)) != fg.Sign.POSITIVE:
        return "conjugating a positive kernel element by a section braid lost positivity"
    return None


def _gen_strand(rng, cfg):
    n = rng.randint(1, cfg.max_strands)
    b = rand_braid(rng, n, cfg.max_letters) if n > 1 else br.BraidWord(1)
    return {"b": b, "t": rng.randint(1, n)}


def check_strand_calculus(case):
    b, t = case["b"], case["t"]
    if not 1 <= t <= b.n:
        raise Skip
    d = br.strand_double(b, t)
    for k in (t, t + 1):
        if not br.braid_equal(br.strand_delete(d, k), b):
            return f"deleting strand {k} of the doubled braid does not give back the input"
    if br.strand_delete(br.strand_insert_left(b), 1) != b.reduced():
        return "strand_delete(strand_insert_left(b), 1) != b"
    return None


def _gen_commutators(rng, cfg):
    rank = rng.randint(2, cfg.max_rank)
    weight = rng.randint(2, cfg.max_weight)
    comms = [
        (rand_simple_commutator_indices(rng, rank, weight), rng.choice((1, -1)))
        for _ in range(rng.randint(1, 3))
    ]
    return {"rank": rank, "comms": comms, "i": rng.randint(1, rank)}


def _commutator_product(rank, comms) -> fg.FreeWord:
    f = fg.FreeWord(rank)
    for idx, e in comms:
        c = fg.simple_commutator(idx, rank)
        f = f * (c if e > 0 else fg.fg_inv(c))
    return f


def check_theta_xi(case):
    rank, comms, i = case["rank"], case["comms"], case["i"]
    if not comms or not 1 <= i <= rank:
        raise Skip
    for idx, _ in comms:
        if len(idx) < 2 or idx[0] == idx[1]:
            raise Skip
        msg = check_simple_commutator(idx, rank)
        if msg:
            return msg
    f = _commutator_product(rank, comms)
    df = fg.deviation(f)
    dt = fg.deviation(fg.theta_apply(i, f))
    if df is None or dt is None:
        if (df is None) != (dt is None):
            return "theta_i changed triviality"
        return None
    if dt[0] != df[0] or dt[1] != nc.xi_apply(i, df[1]):
        return f"delta(theta_{i}(f)) = {nc.format_series(dt[1])} != xi_{i}(delta f) = {nc.format_series(nc.xi_apply(i, df[1]))}"
    lead, lead2 = nc.leading_term(df[1]), nc.leading_term(dt[1])
    if lead2 != (nc.minimal_successor(lead[0], i), lead[1]):
        return "leading monomial of delta(theta f) is not the minimal successor"
    if fg.sign_free(f) != fg.sign_free(fg.theta_apply(i, f)):
        return "theta_i changed the Magnus sign"
    return None


def check_simple_commutator(idx: Sequence[int], rank: int) -> Optional[str]:
    """Recursion, ±1 leading coefficient and no pure powers for one simple commutator."""
    c = fg.simple_commutator(idx, rank)
    dev = fg.deviation(c)
    d = len(idx)
    if dev is None or dev[0] != d:
        return f"deviation of {idx} has degree {None if dev is None else dev[0]}, expected {d}"
    form = dev[1]
    if len(idx) > 2:
        prev = fg.deviation(fg.simple_commutator(idx[:-1], rank))[1]
        x = nc.NcSeries.variable(idx[-1], rank, d)
        p = prev.with_cap(d)
        expected = p * x - x * p
    else:
        a, b = idx
        expected = nc.NcSeries(rank, 2, {(a, b): 1, (b, a): -1})
    if form != expected:
        return f"delta{list(idx)} = {nc.format_series(form)}, recursion gives {nc.format_series(expected)}"
    if any(len(set(m)) == 1 for m in form.monomials()):
        return f"delta{list(idx)} contains a pure power"
    if abs(nc.leading_term(form)[1]) != 1:
        return f"delta{list(idx)} has leading coefficient {nc.leading_term(form)[1]}"
    return None


def _gen_magnus(rng, cfg):
    rank = rng.randint(1, cfg.max_rank)
    return {
        "u": rand_free_word(rng, rank, cfg.max_word),
        "v": rand_free_word(rng, rank, cfg.max_word),
        "cap": rng.randint(1, cfg.max_cap),
    }


def check_magnus(case):
    u, v, cap = case["u"], case["v"], case["cap"]
    if u.rank != v.rank:
        raise Skip
    lhs = fg.magnus_expand(u * v, cap)
    rhs = nc.series_mul(fg.magnus_expand(u, cap), fg.magnus_expand(v, cap))
    if lhs != rhs:
        return f"phi(uv) = {nc.format_series(lhs)} but phi(u)phi(v) = {nc.format_series(rhs)}"
    return None


def _gen_free_pair(rng, cfg):
    rank = rng.randint(1, cfg.max_rank)
    return {
        "u": rand_free_word(rng, rank, cfg.max_word),
        "v": rand_free_word(rng, rank, cfg.max_word),
        "q": rand_free_word(rng, rank, cfg.max_word),
    }


def brute_sign(w: fg.FreeWord) -> fg.Sign:
    """Sign read off one full expansion. A reduced word with syllables
    x_a1^e1 ... x_ak^ek has coefficient e1...ek on X_a1...X_ak, so it deviates
    in degree at most k <= its length."""
    w = fg.free_reduce(w)
    if not w.letters:
        return fg.Sign.ZERO
    terms = {m: c for m, c in fg.magnus_expand(w, len(w)).terms.items() if m}
    return fg.Sign.of(terms[min(terms, key=nc.mono_key)])


def check_free_order(case):
    u, v, q = case["u"], case["v"], case["q"]
    if not u.rank == v.rank == q.rank:
        raise Skip
    for i in range(1, u.rank + 1):
        if fg.sign_free(fg.FreeWord.generator(i, u.rank)) is not fg.Sign.POSITIVE:
            return f"generator x{i} is not positive"
    su = fg.sign_free(u)
    if su != brute_sign(u):
        return f"sign_free(u) = {su} but the full expansion gives {brute_sign(u)}"
    if fg.sign_free(fg.fg_inv(u)) != -su:
        return f"sign(u^-1) != -sign(u) for u = {u}"
    if su > 0 and fg.sign_free(v) > 0 and fg.sign_free(u * v) <= 0:
        return "product of positive words is not positive"
    if fg.sign_free(fg.fg_inv(u) * v) > 0:
        if fg.sign_free(fg.fg_inv(q * u) * (q * v)) <= 0:
            return "Magnus order is not left invariant"
        if fg.sign_free(fg.fg_inv(u * q) * (v * q)) <= 0:
            return "Magnus order is not right invariant"
    return None


def _gen_bf(rng, cfg):
    x, y, z = _bf_triple(rng, cfg)
    return {"x": x, "y": y, "z": z}


def check_bf_axioms(case):
    x, y, z = case["x"], case["y"], case["z"]
    for e in (x, y, z):
        if bd.classify(e) is bd.Kind.BV:
            raise Skip
    R = order.Relation
    xy = order.bf_compare(x, y).relation
    if (xy is R.EQUAL) != bd.bv_is_identity(bd.bv_mul(bd.bv_inv(x), y)):
        return "equality verdict disagrees with bv_is_identity(x^-1 y)"
    flip = {R.LESS: R.GREATER, R.GREATER: R.LESS, R.EQUAL: R.EQUAL}
    if order.bf_compare(y, x).relation is not flip[xy]:
        return "antisymmetry: compare(y, x) is not the flip of compare(x, y)"
    if order.bf_compare(bd.bv_mul(z, x), bd.bv_mul(z, y)).relation is not xy:
        return "not left invariant"
    if order.bf_compare(bd.bv_mul(x, z), bd.bv_mul(y, z)).relation is not xy:
        return "not right invariant"
    yz = order.bf_compare(y, z).relation
    if xy is yz and xy is not R.EQUAL and order.bf_compare(x, z).relation is not xy:
        return "not transitive"
    sx, sy = order.sign_bf(x), order.sign_bf(y)
    if sx > 0 and sy > 0 and order.sign_bf(bd.bv_mul(x, y)) <= 0:
        return "positive cone not closed under products"
    conj = bd.bv_mul(bd.bv_mul(z, x), bd.bv_inv(z))
    if order.sign_bf(conj) != sx:
        return "positive cone not closed under conjugation"
    return None


def _gen_rep_chain(rng, cfg):
    x = rand_pbv(rng, cfg.max_leaves, cfg.max_letters)
    chain, n = [], x.n
    for _ in range(rng.randint(0, 4)):
        chain.append(rng.randint(1, n))
        n += 1
    return {"x": x, "chain": chain}


def check_rep_independence(case):
    x, chain = case["x"], case["chain"]
    if bd.classify(x) is not bd.Kind.PBV:
        raise Skip
    s = order.sign_pbv(x)
    y = x
    for i in chain:
        if not 1 <= i <= y.n:
            raise Skip
        y = bd.bv_expand(y, i)
        if bd.classify(y) is not bd.Kind.PBV:
            return f"expansion at {i} left PBV"
        if order.sign_pbv(y) != s:
            return f"sign changed from {s} to {order.sign_pbv(y)} after expanding leaf {i}"
    if not bd.bv_equal(x, y):
        return "expanded representative is a different group element"
    return None


def _gen_f_action(rng, cfg):
    n = rng.randint(1, cfg.max_leaves)
    f = tr.TreePair(rand_tree(rng, n), rand_tree(rng, n))
    return {"x": rand_pbv(rng, cfg.max_leaves, cfg.max_letters), "f": f}


def check_f_action(case):
    x, f = case["x"], case["f"]
    if bd.classify(x) is not bd.Kind.PBV:
        raise Skip
    fe = bd.BVElement.from_pair(f)
    conj = bd.bv_mul(bd.bv_mul(fe, x), bd.bv_inv(fe))
    if bd.classify(conj) is not bd.Kind.PBV:
        return "conjugate by an F element left PBV"
    if order.sign_pbv(conj) != order.sign_pbv(x):
        return "the F action changed the PBV sign"
    return None


def _gen_bv_pair(rng, cfg):
    def one():
        n = rng.randint(1, cfg.max_leaves)
        b = rand_braid(rng, n, cfg.max_letters // 2) if n > 1 else br.BraidWord(1)
        return bd.BVElement(rand_tree(rng, n), b, rand_tree(rng, n))
    return {"x": one(), "y": one()}


def check_bv_group(case):
    x, y = case["x"], case["y"]
    xy = bd.bv_mul(x, y)
    if bd.rho_image(xy) != bd.v_mul(bd.rho_image(x), bd.rho_image(y)):
        return "rho is not multiplicative"
    if not bd.bv_is_identity(bd.bv_mul(x, bd.bv_inv(x))):
        return "x x^-1 is not the identity"
    for i in range(1, x.plus.leaves + 1):
        e = bd.bv_expand(x, i)
        if bd.classify(e) is not bd.classify(x):
            return f"classification changed after expanding leaf {i}"
    return None


def _gen_f(rng, cfg):
    def one():
        n = rng.randint(1, cfg.max_leaves)
        return tr.TreePair(rand_tree(rng, n), rand_tree(rng, n))
    return {"a": one(), "b": one(), "c": one()}


def check_f_order(case):
    a, b, c = case["a"], case["b"], case["c"]
    if tr.f_mul(tr.f_mul(a, b), c) != tr.f_mul(a, tr.f_mul(b, c)):
        return "f_mul is not associative"
    if tr.f_mul(a, tr.TreePair.identity()) != tr.f_reduce(a):
        return "identity is not neutral"
    if tr.sign_F(tr.f_inv(a)) != -tr.sign_F(a):
        return "sign_F(a^-1) != -sign_F(a)"
    if tr.sign_F(a) > 0 and tr.sign_F(b) > 0 and tr.sign_F(tr.f_mul(a, b)) <= 0:
        return "F cone not closed under products"
    s = tr.sign_F(tr.f_mul(tr.f_inv(a), b))
    if tr.sign_F(tr.f_mul(tr.f_inv(tr.f_mul(c, a)), tr.f_mul(c, b))) != s:
        return "F order not left invariant"
    if tr.sign_F(tr.f_mul(tr.f_inv(tr.f_mul(a, c)), tr.f_mul(b, c))) != s:
        return "F order not right invariant"
    return None


def _gen_catalan(rng, cfg):
    return {"n": rng.randint(1, 10)}


def check_catalan(case):
    n = case["n"]
    if n < 1:
        raise Skip
    if tr.catalan_count(n) != tr.catalan_formula(n):
        return f"enumeration gives {tr.catalan_count(n)} trees with {n} leaves, formula {tr.catalan_formula(n)}"
    return None


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in [
        Property("magnus_multiplicative", _gen_magnus, check_magnus,
                 "phi(uv) = phi(u) phi(v) at a fixed cap"),
        Property("magnus_order", _gen_free_pair, check_free_order,
                 "Magnus sign: antisymmetry, cone closure, bi-invariance"),
        Property("theta_xi", _gen_commutators, check_theta_xi,
                 "delta(theta_i f) = xi_i(delta f) on products of simple commutators"),
        Property("strand_calculus", _gen_strand, check_strand_calculus,
                 "deleting either copy of a doubled strand; section of eta"),
        Property("comb_roundtrip", _gen_pure, check_comb_roundtrip,
                 "re-expanded Artin combing equals the input"),
        Property("doubling_sign", _gen_pure, check_doubling,
                 "doubling any strand preserves the pure-braid sign"),
        Property("first_factor_shift", _gen_pure, check_first_factor_shift,
                 "first nontrivial combing factor after doubling"),
        Property("pure_conjugation", _gen_pure_pair, check_pure_conjugation,
                 "pure-braid cone: conjugation invariance and products"),
        Property("kernel_action", _gen_kernel_action, check_kernel_action,
                 "section braids preserve positivity in the free kernel"),
        Property("f_order", _gen_f, check_f_order,
                 "F: associativity and the slope bi-order"),
        Property("bv_group", _gen_bv_pair, check_bv_group,
                 "rho is a homomorphism; inverses; classification under expansion"),
        Property("rep_independence", _gen_rep_chain, check_rep_independence,
                 "PBV sign is independent of the representative"),
        Property("f_action", _gen_f_action, check_f_action,
                 "conjugation by F preserves the PBV order"),
        Property("bf_axioms", _gen_bf, check_bf_axioms,
                 "BF bi-order: trichotomy, antisymmetry, invariance, transitivity, cone"),
        Property("catalan", _gen_catalan, check_catalan,
                 "tree enumeration matches the Catalan formula"),
    ]
}


# -- running and shrinking -----------------------------------------------------


def case_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{index}")


_SKIPPED = "skipped"


def _evaluate(prop: Property, case: dict, skipped: Optional[str] = None) -> Optional[str]:
    try:
        return prop.check(case)
    except Skip:
        return skipped
    except BFOrderError as exc:
        return f"{type(exc).__name__}: {exc}"


def _still_fails(prop: Property, case: dict) -> bool:
    try:
        return prop.check(case) is not None
    except Skip:
        return False
    except BFOrderError:
        return True


def _shrink_candidates(value: Any) -> Iterable[Any]:
    if isinstance(value, (br.BraidWord, fg.FreeWord)):
        letters = value.letters
        for width in (2, 1):
            for k in range(len(letters) - width + 1):
                yield replace(value, letters=letters[:k] + letters[k + width:])
    elif isinstance(value, bd.BVElement):
        for b in _shrink_candidates(value.braid):
            yield replace(value, braid=b)
    elif isinstance(value, list) and value:
        for k in range(len(value)):
            yield value[:k] + value[k + 1:]


def shrink(prop: Property, case: dict, budget: int = 2000) -> dict:
    """Greedy one-step deletions while the property keeps failing."""
    improved = True
    while improved and budget > 0:
        improved = False
        for key, value in case.items():
            for cand in _shrink_candidates(value):
                budget -= 1
                trial = {**case, key: cand}
                if _still_fails(prop, trial):
                    case = trial
                    improved = True
                    break
                if budget <= 0:
                    break
            if improved or budget <= 0:
                break
    return case


def render_value(value: Any) -> str:
    if isinstance(value, br.BraidWord):
        return br.format_braid(value)
    if isinstance(value, fg.FreeWord):
        return f"-r {value.rank} {fg.format_word(value)}".rstrip()
    if isinstance(value, bd.BVElement):
        return bd.format_element(value).replace("\n", "; ")
    if isinstance(value, tr.TreePair):
        return str(value)
    return repr(value)


def render_case(case: dict) -> str:
    return "\n".join(f"  {k} = {render_value(v)}" for k, v in case.items())


@dataclass
class CaseFailure:
    index: int
    message: str
    case: dict


@dataclass
class PropertyReport:
    name: str
    cases: int
    failures: list[CaseFailure] = field(default_factory=list)
    seconds: float = 0.0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_chunk(args: tuple[str, int, FuzzConfig, list[int]]) -> list[tuple[int, str]]:
    name, seed, cfg, indices = args
    prop = PROPERTIES[name]
    out = []
    for i in indices:
        case = prop.generate(case_rng(seed, name, i), cfg)
        msg = _evaluate(prop, case, _SKIPPED)
        if msg is not None:
            out.append((i, msg))
    return out


def run_property(name: str, cfg: FuzzConfig, jobs: int = 1, minimize: bool = True) -> PropertyReport:
    prop = PROPERTIES[name]
    start = time.perf_counter()
    indices = list(range(cfg.cases))
    if jobs > 1:
        chunks = [indices[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            found = [f for part in pool.map(_run_chunk, [(name, cfg.seed, cfg, c) for c in chunks]) for f in part]
    else:
        found = _run_chunk((name, cfg.seed, cfg, indices))
    skipped = sum(msg == _SKIPPED for _, msg in found)
    found = [(i, msg) for i, msg in found if msg != _SKIPPED]
    failures = []
    for i, msg in sorted(found):
        case = prop.generate(case_rng(cfg.seed, name, i), cfg)
        if minimize:
            case = shrink(prop, case)
            msg = _evaluate(prop, case) or msg
        failures.append(CaseFailure(i, msg, case))
    return PropertyReport(name, cfg.cases, failures, time.perf_counter() - start, skipped)


def run_all(cfg: FuzzConfig, names: Optional[Sequence[str]] = None, jobs: int = 1) -> list[PropertyReport]:
    return [run_property(name, cfg, jobs) for name in (names or PROPERTIES)]


def format_report(reports: Sequence[PropertyReport], cfg: FuzzConfig) -> str:
    lines = [f"fuzz seed={cfg.seed} cases={cfg.cases} max_strands={cfg.max_strands} "
             f"max_letters={cfg.max_letters} max_leaves={cfg.max_leaves}"]
    for r in reports:
        status = "ok" if r.ok else f"FAILED ({len(r.failures)})"
        skipped = f" ({r.skipped} skipped)" if r.skipped else ""
        lines.append(f"{r.name}: {r.cases} cases {status}{skipped}")
        for f in r.failures[:3]:
            lines.append(f" case {f.index}: {f.message}")
            lines.append(render_case(f.case))
    bad = sum(not r.ok for r in reports)
    lines.append("all invariants hold" if not bad else f"{bad} propert{'y' if bad == 1 else 'ies'} violated")
    return "\n".join(lines)
