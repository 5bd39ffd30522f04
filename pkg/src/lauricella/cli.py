"""Command-line front end: ad-hoc evaluation, verification runs, reduction checks.

Exit codes: 0 success, 1 verification failures, 2 argument errors,
3 evaluation errors.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import math
import os
import sys
from typing import Optional

from .core import BranchSide, DomainError, GammaPoleError
from .hyperfun import DEFAULT_QUAD_TOL, HyperSpec, appell_f1, hyp2f1, lauricella_fd
from .identities import EvalReport, verify_all
from .quadrature import QuadratureError
from .reductions import check_all_reductions, representation_formulas_check

_EVAL_ERRORS = (DomainError, GammaPoleError, QuadratureError, KeyError, ValueError)


def _parse_complex(token: str) -> complex:
    parts = token.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"cannot parse complex value from {token!r}")


def _parse_complex_list(text: str) -> list[complex]:
    """';'-separated complex entries; a bare comma list is read as reals."""
    if ";" in text:
        return [_parse_complex(tok) for tok in text.split(";") if tok.strip()]
    parts = text.split(",")
    if len(parts) == 2:
        # ambiguous "x,y": treat as one complex pair, matching the "re,im" rule
        return [_parse_complex(text)]
    return [complex(float(tok), 0.0) for tok in parts if tok.strip()]


def _parse_b_list(text: str) -> list[complex]:
    """b parameters: ';'-separated complex entries, else comma-separated reals."""
    if ";" in text:
        return [_parse_complex(tok) for tok in text.split(";") if tok.strip()]
    return [complex(float(tok), 0.0) for tok in text.split(",") if tok.strip()]


def _format_value(value: complex) -> str:
    if abs(value.imag) <= 1e-13 * max(1.0, abs(value.real)):
        return f"{value.real:.15g}"
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real:.15g} {sign} {abs(value.imag):.15g}i"


def _threads() -> int:
    raw = os.environ.get("HYPER_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _report_json(reports: list[EvalReport]) -> str:
    rows = []
    for r in reports:
        rows.append({
            "id": r.id,
            "anchor": r.anchor,
            "lhs": {"re": r.lhs_value.real, "im": r.lhs_value.imag},
            "rhs": {"re": r.rhs_value.real, "im": r.rhs_value.imag},
            "abs_err": r.abs_err,
            "rel_err": r.rel_err,
            "status": r.status,
            "elapsed_ms": r.elapsed * 1000.0,
        })
    return json.dumps(rows, indent=2, separators=(",", ": "))


def _report_text(reports: list[EvalReport]) -> str:
    lines = [f"{'id':34s} {'status':18s} {'rel_err':>10s} {'ms':>8s}  value"]
    for r in reports:
        lines.append(
            f"{r.id:34s} {r.status:18s} {r.rel_err:10.2e} {r.elapsed * 1000.0:8.1f}  "
            f"{_format_value(r.lhs_value)}"
            + (f"  [{r.note}]" if r.note else "")
        )
    counts = {"pass": 0, "fail": 0, "pass_with_erratum": 0}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append(
        f"total {len(reports)}: {counts['pass']} pass, "
        f"{counts['pass_with_erratum']} pass_with_erratum, {counts['fail']} fail"
    )
    return "\n".join(lines)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _cmd_eval(args: argparse.Namespace) -> int:
    side = BranchSide.ABOVE if args.side == "above" else BranchSide.BELOW
    quad_tol = args.quad_tol

    try:
        a = _parse_complex(args.a)
        c = _parse_complex(args.c)
        if args.function == "2f1":
            b, x = _parse_complex(args.b), _parse_complex(args.x)
        else:
            bs = _parse_b_list(args.bs)
            xs = _parse_complex_list(args.xs)
            if args.function == "f1" and (len(bs) != 2 or len(xs) != 2):
                raise ValueError("f1 needs exactly two b parameters and two arguments")
    except ValueError as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return 2

    def evaluate(tol: float) -> complex:
        if args.function == "2f1":
            return hyp2f1(a, b, c, x, side, tol)
        if args.function == "f1":
            return appell_f1(a, bs[0], bs[1], c, xs[0], xs[1], side, tol)
        return lauricella_fd(HyperSpec(a, tuple(bs), c, tuple(xs)), side, tol)

    try:
        value = evaluate(quad_tol)
        rough = evaluate(min(quad_tol * 100.0, 1e-6))
    except _EVAL_ERRORS as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3
    print(_format_value(value))
    print(f"error estimate: {abs(value - rough):.3e}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    quad_tol = args.quad_tol
    if args.tol is not None:
        quad_tol = min(quad_tol, args.tol / 10.0)
    reports = verify_all(args.filter, args.tol, quad_tol, max_workers=_threads())
    _emit(_report_json(reports) if args.format == "json" else _report_text(reports), args.out)
    return 1 if any(r.status == "fail" for r in reports) else 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    reports = check_all_reductions(args.filter, args.tol)
    if args.filter is None:
        reports = reports + representation_formulas_check()
    else:
        reports = reports + [
            r for r in representation_formulas_check()
            if fnmatch.fnmatch(r.id, args.filter)
        ]
    reports.sort(key=lambda r: r.id)
    _emit(_report_json(reports) if args.format == "json" else _report_text(reports), args.out)
    return 1 if any(r.status == "fail" for r in reports) else 0


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, default=None, help="relative tolerance override")
    parser.add_argument("--quad-tol", dest="quad_tol", type=float, default=DEFAULT_QUAD_TOL)
    parser.add_argument("--filter", default=None, help="glob over record ids")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lauricella",
        description="evaluate 2F1/F1/FD and verify the identity and reduction catalogs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function value")
    p_eval.add_argument("function", choices=("2f1", "f1", "fd"))
    p_eval.add_argument("--a", required=True)
    p_eval.add_argument("--b")
    p_eval.add_argument("--bs")
    p_eval.add_argument("--c", required=True)
    p_eval.add_argument("--x")
    p_eval.add_argument("--xs")
    p_eval.add_argument("--side", choices=("above", "below"), default="below")
    p_eval.add_argument("--quad-tol", dest="quad_tol", type=float, default=DEFAULT_QUAD_TOL)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run the identity catalog")
    _add_run_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_reduce = sub.add_parser("reduce", help="run the reduction checks")
    _add_run_flags(p_reduce)
    p_reduce.set_defaults(func=_cmd_reduce)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "eval":
        needed = {"2f1": ("b", "x"), "f1": ("bs", "xs"), "fd": ("bs", "xs")}[args.function]
        for name in needed:
            if getattr(args, name) is None:
                print(f"eval {args.function} requires --{name}", file=sys.stderr)
                return 2
    try:
        return args.func(args)
    except _EVAL_ERRORS as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
