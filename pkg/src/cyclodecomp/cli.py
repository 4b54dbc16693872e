"""Command-line front end: ``python -m cyclodecomp <subcommand> ...``.

Exit codes: 0 success, 1 usage/input/validation error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .bern import irregular_pairs
from .classify import classify_primarity
from .cyclo import dumps_element, loads_element
from .decomp import CaseParams, decompose
from .errors import DomainError, ValidationError
from .fp import check_prime, primes_between, smallest_primitive_root
from .oracle import verify_sweep
from .report import ReportDocument, shape_document
from .witness import jacobi_sum, witness_primarity

EXT_FLAGS = {"K-Q": "K/Q", "S-K": "S/K", "S-Q": "S/Q", "M": "M/Q", "M-Q": "M/Q", "N-M": "N/M"}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclodecomp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("table", "report"), default="table")

    sp = sub.add_parser("irregular", help="irregular pairs (p, k) with p | B_k")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--max", type=int, dest="max_p")
    sp.add_argument("--v", type=int, help="primitive root (default: smallest)")
    fmt(sp)

    sp = sub.add_parser("decompose", help="closed-form decomposition shape of p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--v", type=int)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--case", choices=("primary", "non-primary"), default="primary")
    sp.add_argument("--extension", choices=sorted(EXT_FLAGS), default="M")
    fmt(sp)

    sp = sub.add_parser("classify", help="primarity report for an element file")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--input", type=Path, required=True)
    fmt(sp)

    sp = sub.add_parser("jacobi", help="Jacobi sum witness J(chi, chi)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--g", type=int, help="generator mod q (default: smallest)")
    sp.add_argument("--output", type=Path, help="write the element file here")
    fmt(sp)

    sp = sub.add_parser("verify", help="closed forms vs. double-coset oracle sweep")
    sp.add_argument("--max-p", type=int, required=True)
    sp.add_argument("--min-p", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    return parser


def _cmd_irregular(args) -> tuple[ReportDocument, str, int]:
    if args.p is not None:
        primes = [check_prime(args.p)]
    else:
        primes = primes_between(5, args.max_p)
    reports = [irregular_pairs(p, args.v if args.p is not None else None) for p in primes]
    command = {"subcommand": "irregular", "p": args.p, "max": args.max_p, "v": args.v}
    payload = [r.to_dict() for r in reports] if args.p is None else reports[0].to_dict()
    rows = [(r.p, r.v, q.k, q.n, q.mu) for r in reports for q in r.pairs]
    if args.p is not None and not rows:
        text = f"p = {args.p} is regular\n"
    else:
        text = _table(("p", "v", "k", "n", "mu"), rows)
    return ReportDocument("irregularity", command, payload), text, 0


def _cmd_decompose(args) -> tuple[ReportDocument, str, int]:
    check_prime(args.p)
    v = args.v if args.v is not None else smallest_primitive_root(args.p)
    params = CaseParams(args.p, v, args.n, args.case == "primary")
    shape = decompose(params, EXT_FLAGS[args.extension])
    command = {"subcommand": "decompose", "p": args.p, "v": v, "n": args.n, "case": args.case,
               "extension": shape.extension}
    text = f"{shape.extension}  degree {shape.degree}\n" + _table(("e", "f", "count"), shape.triples)
    return shape_document(command, shape), text, 0


def _read_element(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads_element(text)
    except ValidationError as exc:
        raise InputError(f"malformed element file {path}: {exc}") from None


def _primarity_text(rep) -> str:
    d = rep.to_dict()
    return _table(("field", "value"), [(k, "-" if d[k] is None else d[k]) for k in d])


def _cmd_classify(args) -> tuple[ReportDocument, str, int]:
    check_prime(args.p)
    A = _read_element(args.input)
    if A.p != args.p:
        raise ValidationError(f"element file has p = {A.p}, expected {args.p}")
    rep = classify_primarity(A)
    command = {"subcommand": "classify", "p": args.p, "input": str(args.input)}
    return ReportDocument("primarity", command, rep.to_dict()), _primarity_text(rep), 0


def _cmd_jacobi(args) -> tuple[ReportDocument, str, int]:
    w = jacobi_sum(args.p, args.q, args.g)
    rep = witness_primarity(w)
    if args.output is not None:
        args.output.write_text(dumps_element(w.J))
    command = {"subcommand": "jacobi", "p": args.p, "q": args.q, "g": w.g,
               "output": None if args.output is None else str(args.output)}
    payload = {"witness": w.to_dict(), "primarity": rep.to_dict()}
    text = f"J = {w.J}\n" + _primarity_text(rep)
    return ReportDocument("jacobi", command, payload), text, 0


def _cmd_verify(args) -> tuple[ReportDocument, str, int]:
    if args.jobs < 1:
        raise ValidationError("--jobs must be >= 1")
    diffs = verify_sweep(args.max_p, args.min_p, jobs=args.jobs)
    command = {"subcommand": "verify", "max_p": args.max_p, "min_p": args.min_p}
    if diffs:
        rows = [(d["p"], d["n"], d.get("case", "-"), d.get("extension", d.get("check"))) for d in diffs]
        text = f"{len(diffs)} mismatches\n" + _table(("p", "n", "case", "extension"), rows)
    else:
        text = f"all shapes agree for 5 <= p <= {args.max_p}\n"
    return ReportDocument("verification", command, diffs), text, 2 if diffs else 0


COMMANDS = {
    "irregular": _cmd_irregular,
    "decompose": _cmd_decompose,
    "classify": _cmd_classify,
    "jacobi": _cmd_jacobi,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=err)
        return 1
    except ValidationError as exc:
        print(f"validation error: {exc}", file=err)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=err)
        return 1
    out.write(doc.dumps() if args.format == "report" else text)
    return code


def main() -> None:
    sys.exit(run())
