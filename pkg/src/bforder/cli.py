"""Command-line front end.

Element arguments are inline text, ``@path`` to read a file, or ``-`` for
standard input. Grammars (whitespace-insensitive):

* ``braid``: ``-n <strands>`` followed by signed generator indices,
  ``"-n 3 1 1 -2"`` is s1 s1 s2^-1 on three strands. Without ``-n`` the strand
  count is one more than the largest index.
* ``word``: signed generator indices, optionally prefixed by ``-r <rank>``.
* ``pair``: two trees, ``"(.(..)) ((..).)"``; a leaf is ``.``, a caret ``(LR)``.
* ``bv``: four ``key: value`` fields ``n``, ``minus``, ``braid``, ``plus``
  separated by newlines or ``;``.

Exit codes: 0 success, 1 invariant violation, 2 parse or usage error,
3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import braid as br
from . import braided as bd
from . import freegroup as fg
from . import ncseries as nc
from . import order
from . import trees as tr
from .errors import DeviationCeilingError, DomainError, ParseError, UsageError
from .fuzz import PROPERTIES, FuzzConfig, format_report, run_all

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

KINDS = ("braid", "word", "pair", "bv")


def read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


_PARSERS: dict[str, Callable] = {
    "braid": br.parse_braid,
    "word": fg.parse_word,
    "pair": tr.parse_pair,
    "bv": bd.parse_element,
}


def parse_document(kind: str, arg: str):
    return _PARSERS[kind](read_text(arg))


def format_document(kind: str, value) -> str:
    if kind == "braid":
        return br.format_braid(value)
    if kind == "word":
        return f"-r {value.rank} {fg.format_word(value)}".rstrip()
    if kind == "pair":
        return str(value)
    return bd.format_element(value)


def sign_with_witness(kind: str, value) -> tuple[fg.Sign, str]:
    if kind == "braid":
        d = br.pure_sign_detail(value)
        if d.sign is fg.Sign.ZERO:
            return d.sign, ""
        return d.sign, f"decided by {br.factor_name(d.factor_index)} = {br.format_factor(d.factor)}"
    if kind == "word":
        lead = fg.magnus_leading(value)
        if lead is None:
            return fg.Sign.ZERO, ""
        mono, coeff = lead
        return fg.Sign.of(coeff), f"decided by {nc.format_monomial(mono)} with coefficient {coeff:+d}"
    if kind == "pair":
        s, leaf = tr.f_sign_detail(value)
        return s, "" if leaf is None else f"decided by F slope at leaf {leaf}"
    s, w = order.bf_sign_detail(value)
    return s, "" if s is fg.Sign.ZERO else w.describe()


def _mul(kind: str, a, b):
    if kind == "braid":
        return br.braid_mul(a, b)
    if kind == "word":
        return fg.fg_mul(a, b)
    if kind == "pair":
        return tr.f_mul(a, b)
    return bd.bv_mul(a, b)


def _inv(kind: str, a):
    return {"braid": br.braid_inv, "word": fg.fg_inv, "pair": tr.f_inv, "bv": bd.bv_inv}[kind](a)


def _align(kind: str, a, b):
    # free words of different rank are compared inside the larger free group
    if kind == "word" and a.rank != b.rank:
        r = max(a.rank, b.rank)
        return a.with_rank(r), b.with_rank(r)
    return a, b


def cmd_sign(args) -> int:
    value = parse_document(args.kind, args.element)
    s, witness = sign_with_witness(args.kind, value)
    print(f"{s}, {witness}" if witness else str(s))
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = _align(args.kind, parse_document(args.kind, args.a), parse_document(args.kind, args.b))
    s, witness = sign_with_witness(args.kind, _mul(args.kind, _inv(args.kind, a), b))
    symbol = {fg.Sign.POSITIVE: "<", fg.Sign.ZERO: "=", fg.Sign.NEGATIVE: ">"}[s]
    print(f"{symbol} {witness or 'identity element'}")
    return EXIT_OK


def cmd_mul(args) -> int:
    a, b = _align(args.kind, parse_document(args.kind, args.a), parse_document(args.kind, args.b))
    print(format_document(args.kind, _mul(args.kind, a, b)))
    return EXIT_OK


def cmd_inv(args) -> int:
    print(format_document(args.kind, _inv(args.kind, parse_document(args.kind, args.element))))
    return EXIT_OK


def cmd_comb(args) -> int:
    p = br.parse_braid(read_text(args.braid))
    c = br.artin_comb(p)
    print(br.format_combing(c))
    if args.verify:
        if br.braid_equal(c.expand(), p):
            print("round-trip: ok")
        else:
            print("round-trip: FAILED")
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_magnus(args) -> int:
    w = fg.parse_word(read_text(args.word))
    print(nc.format_series(fg.magnus_expand(w, args.cap)))
    return EXIT_OK


def cmd_double(args) -> int:
    print(br.format_braid(br.strand_double(br.parse_braid(read_text(args.braid)), args.t)))
    return EXIT_OK


def cmd_delete(args) -> int:
    print(br.format_braid(br.strand_delete(br.parse_braid(read_text(args.braid)), args.k)))
    return EXIT_OK


def cmd_catalan(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    print(tr.catalan_count(args.n))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    try:
        cfg = FuzzConfig(
            seed=args.seed, cases=args.cases, max_strands=args.max_strands,
            max_letters=args.max_letters, max_leaves=args.max_leaves,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    names = args.property or list(PROPERTIES)
    reports = run_all(cfg, names, jobs=args.jobs)
    print(format_report(reports, cfg))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bforder",
        description="Exact bi-order computations on BF, pure braid groups, free groups and F.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sign", help="sign of an element with the deciding witness")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("element")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("compare", help="compare two elements: <, = or >")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("mul", help="product a*b (a first)")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", help="inverse")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("element")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("comb", help="Artin combing of a pure braid")
    p.add_argument("braid")
    p.add_argument("--verify", action="store_true", help="re-expand and check against the input")
    p.set_defaults(func=cmd_comb)

    p = sub.add_parser("magnus", help="truncated Magnus expansion of a free word")
    p.add_argument("word")
    p.add_argument("--cap", type=int, default=4)
    p.set_defaults(func=cmd_magnus)

    p = sub.add_parser("double", help="double (cable) strand T of a braid")
    p.add_argument("braid")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("delete", help="delete strand K of a braid")
    p.add_argument("braid")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("catalan", help="count binary trees with N leaves by enumeration")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("fuzz", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-strands", type=int, default=6)
    p.add_argument("--max-letters", type=int, default=24)
    p.add_argument("--max-leaves", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--property", action="append", choices=sorted(PROPERTIES),
                   help="run only this property (repeatable)")
    p.set_defaults(func=cmd_fuzz)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, DeviationCeilingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
