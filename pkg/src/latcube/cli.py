"""Command-line front end.

Every command prints one JSON object per result on stdout (``census`` prints
one per line). Integers are emitted as decimal strings. Exit codes: 0 for an
affirmative answer, 1 for a well-formed negative one, 2 for usage, parse or
precondition errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import classify, construct, oracle, qform, squares
from .errors import LatcubeError, NotMember, NotRepresentable, WitnessParseError

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2

_NAT = re.compile(r"[0-9]+")
_INT = re.compile(r"-?[0-9]+")


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    if not _NAT.fullmatch(text):
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _integer(text: str) -> int:
    if not _INT.fullmatch(text):
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _s(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def _rows(rows):
    return [[_s(x) for x in r] for r in rows]


def _square_term(x: Fraction) -> str:
    text = _s(x)
    return f"({text})^2" if x < 0 or x.denominator != 1 else f"{text}^2"


class Emitter:
    def __init__(self, pretty: bool, out=None):
        self.pretty = pretty
        self.out = out if out is not None else sys.stdout

    def __call__(self, record: dict) -> None:
        if self.pretty:
            text = json.dumps(record, indent=2)
        else:
            text = json.dumps(record, separators=(",", ":"))
        self.out.write(text + "\n")


def _dims(d: int, n: int) -> classify.DimensionPair:
    if d > n:
        raise UsageError(f"need d <= n, got d={d}, n={n}")
    return classify.DimensionPair(d, n)


def _budget(args) -> oracle.SearchBudget:
    if args.max_norm is None:
        return oracle.DEFAULT_BUDGET
    return oracle.SearchBudget(max_norm=args.max_norm)


def cmd_classify(args, emit) -> int:
    p = _dims(args.d, args.n)
    d_mod, gap = classify.table_coordinates(p)
    emit({
        "command": "classify",
        "inputs": {"d": _s(args.d), "n": _s(args.n)},
        "descriptor": str(classify.descriptor_for(p)),
        "d_mod_4": _s(d_mod),
        "n_minus_d": _s(gap),
    })
    return EXIT_OK


def _verdict_fields(v: classify.MembershipVerdict) -> dict:
    return {
        "member": v.member,
        "descriptor": str(v.descriptor),
        "criterion": v.criterion.value if v.criterion else None,
        "reason": v.reason or None,
    }


def _mdn(args) -> dict:
    return {"m": _s(args.m), "d": _s(args.d), "n": _s(args.n)}


def cmd_member(args, emit) -> int:
    p = _dims(args.d, args.n)
    v = classify.is_member(args.m, p)
    emit({"command": "member", "inputs": _mdn(args), **_verdict_fields(v)})
    return EXIT_OK if v.member else EXIT_NO


def cmd_construct(args, emit) -> int:
    p = _dims(args.d, args.n)
    record = {"command": "construct", "inputs": _mdn(args)}
    try:
        w = construct.construct_witness(args.m, p)
    except NotMember as exc:
        emit({**record, **_verdict_fields(exc.verdict)})
        return EXIT_NO
    report = construct.verify_witness(w)
    if not report.valid:
        raise RuntimeError(f"constructed witness failed verification: {report.problems}")
    text = construct.format_witness(w)
    if args.out:
        Path(args.out).write_text(text)
    emit({
        **record,
        **_verdict_fields(classify.is_member(args.m, p)),
        "valid": True,
        "rows": _rows(w.rows),
        "witness": text,
    })
    return EXIT_OK


def _read_witness(path: str) -> construct.CubeWitness:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return construct.parse_witness(text)


def cmd_verify(args, emit) -> int:
    w = _read_witness(args.file)
    report = construct.verify_witness(w)
    emit({
        "command": "verify",
        "inputs": {"file": args.file},
        "valid": report.valid,
        "d": _s(w.d),
        "n": _s(w.n),
        "m": _s(w.m),
        "dots": [{"i": _s(i), "j": _s(j), "dot": _s(v)} for (i, j), v in report.dots.items()],
        "norm_defects": [_s(x) for x in report.norm_defects],
        "problems": report.problems,
    })
    return EXIT_OK if report.valid else EXIT_NO


def cmd_decompose(args, emit) -> int:
    if args.k < 1:
        raise UsageError("k must be positive")
    record = {"command": "decompose", "inputs": {"m": _s(args.m), "k": _s(args.k)}}
    try:
        dec = squares.decompose_n_squares(args.m, args.k)
    except NotRepresentable as exc:
        emit({**record, "representable": False, "terms": None, "reason": str(exc)})
        return EXIT_NO
    emit({**record, "representable": True, "terms": [_s(t) for t in dec.terms], "reason": None})
    return EXIT_OK


def cmd_oracle(args, emit) -> int:
    p = _dims(args.d, args.n)
    found, w = oracle.oracle_is_member(args.m, p, _budget(args), threads=args.threads)
    record = {"command": "oracle", "inputs": _mdn(args), "member": found}
    if not found:
        emit({**record, "rows": None, "witness": None})
        return EXIT_NO
    emit({**record, "rows": _rows(w.rows), "witness": construct.format_witness(w)})
    return EXIT_OK


def cmd_census(args, emit) -> int:
    _dims(args.d, args.n)
    inputs = {"d": _s(args.d), "n": _s(args.n), "m_max": _s(args.m_max)}
    for row in oracle.census(args.d, args.n, args.m_max, _budget(args), threads=args.threads):
        emit({
            "command": "census",
            "inputs": inputs,
            "m": _s(row.m),
            "member": row.member,
            "frames": _s(row.frames),
            "capped": row.capped,
        })
    return EXIT_OK


def cmd_witt(args, emit) -> int:
    v, w = tuple(args.coords[:3]), tuple(args.coords[3:])
    x, y, flipped = qform.witt_extract_detail(v, w)
    m = sum(a * a for a in v)
    emit({
        "command": "witt",
        "inputs": {"v": [_s(a) for a in v], "w": [_s(a) for a in w]},
        "m": _s(m),
        "x": _s(x),
        "y": _s(y),
        "sign_flipped": flipped,
        "check": f"{_square_term(x)}+{_square_term(y)}={m}",
    })
    return EXIT_OK


def cmd_extend(args, emit) -> int:
    w = _read_witness(args.file)
    basis, residuals = qform.gram_schmidt_extend(w.rows)
    emit({
        "command": "extend",
        "inputs": {"file": args.file},
        "basis": _rows(basis),
        "residual_norms": [_s(r) for r in residuals],
    })
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=dflt(True), help="compact JSON output (default)")
    parser.add_argument("--pretty", action="store_true", default=dflt(False), help="indented JSON output")
    parser.add_argument("--threads", type=_positive, default=dflt(1), metavar="N", help="worker processes for oracle searches")
    parser.add_argument("--max-norm", type=_positive, default=dflt(None), metavar="N", help="oracle norm budget (default 60)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latcube", description="Side lengths of cubes with vertices in Z^n.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        _add_common(sp, suppress=True)
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify", cmd_classify, "describe the set J(d, n)")
    sp.add_argument("d", type=_positive)
    sp.add_argument("n", type=_positive)

    for name, fn, help_ in (
        ("member", cmd_member, "decide whether m is in J(d, n)"),
        ("construct", cmd_construct, "build an integer cube frame"),
        ("oracle", cmd_oracle, "decide membership by exhaustive search"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("m", type=_natural)
        sp.add_argument("d", type=_positive)
        sp.add_argument("n", type=_positive)
        if name == "construct":
            sp.add_argument("--out", metavar="FILE", help="also write the witness file")

    sp = add("verify", cmd_verify, "check a witness file")
    sp.add_argument("file")

    sp = add("decompose", cmd_decompose, "write m as a sum of k squares")
    sp.add_argument("m", type=_natural)
    sp.add_argument("k", type=_natural)

    sp = add("census", cmd_census, "oracle verdicts and frame counts for m = 0..m_max")
    sp.add_argument("d", type=_positive)
    sp.add_argument("n", type=_positive)
    sp.add_argument("m_max", type=_natural)

    sp = add("witt", cmd_witt, "two rational squares from an orthogonal pair in Z^3")
    sp.add_argument("coords", type=_integer, nargs=6, metavar="a b c d e f")

    sp = add("extend", cmd_extend, "complete a frame to an orthogonal basis of Q^n")
    sp.add_argument("file")
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    emit = Emitter(args.pretty, out)
    try:
        return args.func(args, emit)
    except (UsageError, LatcubeError) as exc:
        where = ""
        if isinstance(exc, WitnessParseError):
            where = f"{args.file}: "
        print(f"latcube {args.command}: error: {where}{exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
