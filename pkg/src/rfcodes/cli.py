"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed on stderr) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import os
import random
import statistics
import sys
from fractions import Fraction

from . import thresholds as th
from .errors import RFCodesError
from .gf import parse_field
from .rfcode import (
    CodeParams,
    Codeword,
    brute_force_code,
    codebook,
    decode,
    degrade,
    encode,
    enumerate_code,
    hamming_distance,
    iota,
    recognize,
    sample_forbidden,
)
from .zeta import LPolynomial, count_tables, degradation_expectation, jacobian_size

VERBS = ("encode", "decode", "recognize", "enumerate", "verify", "zeta", "thresholds", "rates", "degrade")


def _code_params(parser: argparse.ArgumentParser, args) -> CodeParams:
    try:
        return CodeParams(parse_field(args.q), args.h)
    except (ValueError, RFCodesError) as exc:
        parser.error(f"--q/--h: {exc}")


def _read_word(parser, args, params: CodeParams) -> Codeword:
    text = args.word
    if text is None:
        text = sys.stdin.read()
    elif os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return Codeword.parse(text, params)
    except (ValueError, RFCodesError) as exc:
        parser.error(f"--word: {exc}")


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def cmd_encode(parser, args, out) -> int:
    params = _code_params(parser, args)
    _emit(out, str(encode(args.m, params)))
    return 0


def cmd_decode(parser, args, out) -> int:
    params = _code_params(parser, args)
    if args.e < 0 or 2 * (params.h + args.e) >= params.N:
        parser.error(f"--e: need 0 <= e and 2(h+e) < N={params.N}")
    w = _read_word(parser, args, params)
    f = decode(w, params, args.e)
    _emit(out, f"f = {f}\nm = {iota(f, params)}")
    return 0


def cmd_recognize(parser, args, out) -> int:
    params = _code_params(parser, args)
    f = recognize(_read_word(parser, args, params), params)
    if f is None:
        _emit(out, "not a codeword")
        return 1
    _emit(out, f"f = {f}\nm = {iota(f, params)}")
    return 0


def cmd_enumerate(parser, args, out) -> int:
    params = _code_params(parser, args)
    for m, w in enumerate_code(params):
        out.write(f"{m}: {w}\n")
    return 0


def cmd_verify(parser, args, out) -> int:
    params = _code_params(parser, args)
    expected = params.q ** (2 * params.h + 1)
    words = codebook(params)
    ok = True
    size = len(set(words))
    ok &= size == len(words) == expected
    _emit(out, f"code {params} N={params.N} designed distance {params.d0}")
    _emit(out, f"size {size} {'=' if size == expected else '!='} expected {expected}")
    try:
        brute = len(brute_force_code(params))
        ok &= brute == expected
        _emit(out, f"brute-force size {brute}")
    except RFCodesError as exc:
        _emit(out, f"brute-force skipped: {type(exc).__name__}")
    dmin = min((hamming_distance(u, v) for u, v in itertools.combinations(words, 2)), default=params.N)
    ok &= dmin >= params.d0
    _emit(out, f"min observed distance {dmin} {'>=' if dmin >= params.d0 else '<'} {params.d0}")
    round_trip = all(
        (f := recognize(w, params)) is not None and iota(f, params) == m for m, w in enumerate(words)
    )
    ok &= round_trip
    _emit(out, f"round-trip {'OK' if round_trip else 'FAILED'}")
    return 0 if ok else 1


def cmd_zeta(parser, args, out) -> int:
    try:
        with open(args.l_poly) as fh:
            L = LPolynomial.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        parser.error(f"--l-poly: {exc}")
    tables = count_tables(L, args.nmax)
    if args.out == "json":
        obj = json.loads(tables.to_json())
        obj["jacobian_size"] = jacobian_size(L)
        _emit(out, json.dumps(obj))
    else:
        out.write(tables.to_csv())
    return 0


def cmd_thresholds(parser, args, out) -> int:
    if args.all_table:
        qs = th.TABLE_Q
    elif args.q is not None:
        qs = (args.q,)
    else:
        parser.error("thresholds needs --q or --all-table")
    rows = th.rho1_table(qs)
    if args.out == "json":
        _emit(out, json.dumps([{"q": q, "rho1": r} for q, r in rows]))
    else:
        out.write("q,rho1\n" + "".join(f"{q},{r:.4f}\n" for q, r in rows))
    return 0


def cmd_rates(parser, args, out) -> int:
    if args.q is None or args.delta_grid is None:
        parser.error("rates needs --q and --delta-grid")
    try:
        grid = th.parse_grid(args.delta_grid)
    except ValueError as exc:
        parser.error(f"--delta-grid: {exc}")
    bounds = th.rate_bounds(args.q, grid)
    if args.out == "json":
        _emit(out, json.dumps(dataclasses.asdict(bounds)))
    else:
        out.write(bounds.to_csv())
    return 0


def cmd_degrade(parser, args, out) -> int:
    params = _code_params(parser, args)
    rng = random.Random(args.seed)
    expected = degradation_expectation(params.q, params.N, params.q ** (2 * params.h + 1))
    if args.trials:
        counts = [len(degrade(params, rng=rng)) for _ in range(args.trials)]
        mean = statistics.fmean(counts)
        se = statistics.stdev(counts) / len(counts) ** 0.5 if len(counts) > 1 else float("nan")
        _emit(out, f"trials {args.trials} mean {mean:.6g} stderr {se:.6g} expected {float(expected):.6g}")
        return 0
    forbidden = sample_forbidden(params, rng)
    survivors = degrade(params, forbidden)
    _emit(out, "forbidden: " + " ".join(s.token() for s in forbidden))
    _emit(out, f"survivors {len(survivors)} (expected {float(expected):.6g} = {Fraction(expected)})")
    for w in survivors:
        _emit(out, str(w))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfcodes",
        description="Rational-function codes over P^1(GF(q)) and their counting thresholds.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def code_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--q", required=True, help="field as p^alpha (optionally p^alpha/<modulus>)")
        p.add_argument("--h", required=True, type=int, help="degree bound, 2h < q+1")
        return p

    p = code_cmd("encode", "print the codeword of message m")
    p.add_argument("--m", required=True, type=int, help="message in [0, q^(2h+1))")
    p.set_defaults(func=cmd_encode)

    p = code_cmd("decode", "correct up to e errors in a word")
    p.add_argument("--e", required=True, type=int, help="number of errors to correct, 2(h+e) < q+1")
    p.add_argument("--word", help="word tokens or a file holding them; stdin if omitted")
    p.set_defaults(func=cmd_decode)

    p = code_cmd("recognize", "test whether a word is a codeword")
    p.add_argument("--word", help="word tokens or a file holding them; stdin if omitted")
    p.set_defaults(func=cmd_recognize)

    p = code_cmd("enumerate", "list every message and codeword")
    p.set_defaults(func=cmd_enumerate)

    p = code_cmd("verify", "check size, distance and round trip against the brute-force oracle")
    p.set_defaults(func=cmd_verify)

    p = code_cmd("degrade", "restrict the code to avoid one random letter per coordinate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=0, help="Monte Carlo trials instead of a single draw")
    p.set_defaults(func=cmd_degrade)

    p = sub.add_parser("zeta", help="divisor counts M_n and A_h from an L-polynomial")
    p.add_argument("--l-poly", required=True, help='JSON file {"q": .., "genus": .., "coeffs": [..]}')
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("thresholds", help="rho1(q) threshold values")
    p.add_argument("--q", type=int, help="square prime power")
    p.add_argument("--all-table", action="store_true", help="all q = q0^2 with q0 <= 16")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("rates", help="rate bounds on a delta grid")
    p.add_argument("--q", type=int, required=True, help="square prime power")
    p.add_argument("--delta-grid", required=True, help="a:b:step")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_rates)

    return parser


def verb_grammar() -> str:
    parser = build_parser()
    subs = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    return "\n".join(subs.choices[v].format_help() for v in VERBS)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args, out)
    except RFCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
