"""Command-line front end: ``quaddiag diagonalize | analyze | map``.

Exit codes: 0 success, 2 the form cannot be reduced (with the failing stage
named), 3 enumeration budget exceeded, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exactmath import fmt
from .lattice import (DEFAULT_BUDGET, BudgetExceeded, count_ladder, fermat_cone_bound,
                      upper_bound_check)
from .model import ParseError, QuadraticForm, parse_form, print_form
from .pipeline import PipelineReport, diagonalize
from .spectral import SpectralMismatch
from .transform import map_new_to_old, map_old_to_new

EXIT_OK, EXIT_IMPOSSIBLE, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vector(v):
    return [fmt(x) for x in v]


def _matrix(m):
    return [_vector(row) for row in m]


def form_to_json(f: QuadraticForm) -> dict:
    return {"text": print_form(f), "n": f.n, "a": _matrix(f.A), "l": _vector(f.L), "a0": fmt(f.a0)}


def report_to_json(r: PipelineReport) -> dict:
    out = {"input_form": form_to_json(r.input_form)}
    cr = r.center_result
    if cr is not None:
        out["center_result"] = {
            "kind": cr.kind,
            "center": _vector(cr.center) if cr.center is not None else None,
            "integer_center": cr.integer_center,
            "translated": form_to_json(cr.translated) if cr.translated is not None else None,
        }
    out["eigenvalues"] = [fmt(t) for t in r.eigenvalues] if r.eigenvalues is not None else None
    out["eigenbasis"] = [_vector(v) for v in r.spectrum.vectors] if r.spectrum else None
    if r.transform is not None:
        T = r.transform
        out["transform"] = {"c": _matrix(T.C), "det": fmt(T.det),
                            "k_squared": _vector(T.k_squared), "center": _vector(T.center)}
    else:
        out["transform"] = None
    if r.diagonal_form is not None:
        D = r.diagonal_form
        out["diagonal_form"] = {"d": _vector(D.d), "a0": fmt(D.a0), "text": print_form(D.as_form())}
    else:
        out["diagonal_form"] = None
    out["failure_stage"] = r.failure_stage
    out["failure_reason"] = r.failure_reason
    return out


def report_to_text(r: PipelineReport) -> str:
    lines = [f"equation:     {print_form(r.input_form)}"]
    cr = r.center_result
    if cr is not None:
        lines.append(f"surface:      {cr.kind}")
        if cr.center is not None:
            lines.append(f"center:       ({', '.join(_vector(cr.center))})")
        if cr.translated is not None:
            lines.append(f"centered:     {print_form(cr.translated)}")
    if r.eigenvalues is not None:
        lines.append(f"eigenvalues:  {', '.join(fmt(t) for t in r.eigenvalues)}")
        for t, v in r.spectrum.pairs:
            lines.append(f"  t = {fmt(t)}: ({', '.join(_vector(v))})")
    if r.transform is not None:
        T = r.transform
        lines.append("C:")
        lines += ["  [" + ", ".join(f"{x:>3}" for x in _vector(row)) + "]" for row in T.C]
        lines.append(f"det(C):       {fmt(T.det)}")
        lines.append(f"k^2:          {', '.join(_vector(T.k_squared))}")
    if r.diagonal_form is not None:
        lines.append(f"diagonal:     {print_form(r.diagonal_form.as_form())}")
    if r.failure_stage:
        lines.append(f"FAILED at {r.failure_stage}: {r.failure_reason}")
    return "\n".join(lines)


def _read_form(args) -> QuadraticForm:
    if args.eq and args.file:
        raise UsageError("give either --eq or --file, not both")
    if args.file:
        try:
            with open(args.file) as fh:
                text = fh.read().strip()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    elif args.eq:
        text = args.eq
    else:
        raise UsageError("an equation is required (--eq or --file)")
    try:
        return parse_form(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse equation: {exc}") from exc


def _int_list(text: str, what: str) -> list:
    try:
        return [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad {what}: {text!r}") from exc


def _align(args):
    if not getattr(args, "eigvecs", None):
        return None
    return [_int_list(v, "--eigvecs") for v in args.eigvecs.split(";")]


def _emit(obj, as_json: bool, text: str, out):
    if as_json:
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text + "\n")


def cmd_diagonalize(args, out) -> int:
    report = diagonalize(_read_form(args), align_to=_align(args))
    _emit(report_to_json(report), args.json, report_to_text(report), out)
    return EXIT_OK if report.ok else EXIT_IMPOSSIBLE


def cmd_analyze(args, out) -> int:
    f = _read_form(args)
    if not args.ladder:
        raise UsageError("--ladder is required")
    Ns = [int(x) for x in _int_list(args.ladder, "--ladder")]
    if any(b <= a for a, b in zip(Ns, Ns[1:])) or any(n < 0 for n in Ns):
        raise UsageError("--ladder must be strictly increasing and nonnegative")
    report = count_ladder(f, Ns, budget=args.budget)
    cone = f.n == 3 and f.is_diagonal and f.is_homogeneous
    rows = []
    for N, count in report.ladder:
        row = {"n": N, "count": count,
               "upper_bound": 2 * (2 * N + 1) ** (f.n - 1),
               "upper_bound_ok": upper_bound_check(f.n, N, count)}
        if cone and N >= 2:
            row["fermat_cone_bound"] = {"value": fermat_cone_bound(N), "approx": True}
        rows.append(row)
    obj = {"input_form": form_to_json(f), "ladder": rows, "growth_class": report.growth_class,
           "fit_stats": {name: dict(s, approx=True) for name, s in report.fit_stats.items()}}
    text = [f"equation: {print_form(f)}", f"{'N':>8} {'R(N)':>10} {'bound':>14}"]
    for row in rows:
        extra = f"  cone bound ~{row['fermat_cone_bound']['value']:.1f}" if "fermat_cone_bound" in row else ""
        text.append(f"{row['n']:>8} {row['count']:>10} {row['upper_bound']:>14}{extra}")
    text.append(f"growth class: {report.growth_class}")
    _emit(obj, args.json, "\n".join(text), out)
    return EXIT_OK


def cmd_map(args, out) -> int:
    f = _read_form(args)
    if not args.point:
        raise UsageError("--point is required")
    point = _int_list(args.point, "--point")
    if len(point) != f.n:
        raise UsageError(f"--point needs {f.n} coordinates")
    report = diagonalize(f, align_to=_align(args))
    if not report.ok:
        _emit(report_to_json(report), args.json, report_to_text(report), out)
        return EXIT_IMPOSSIBLE
    if args.direction == "new-to-old":
        mapped = map_new_to_old(report.transform, point)
        integral = all(x.denominator == 1 for x in mapped)
    else:
        mapped, integral = map_old_to_new(report.transform, point)
    obj = {"direction": args.direction, "point": _vector(point), "mapped": _vector(mapped),
           "is_integer": integral}
    text = f"({', '.join(_vector(point))}) -> ({', '.join(_vector(mapped))})" + (
        "" if integral else "  [not an integer point]")
    _emit(obj, args.json, text, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quaddiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--eq", help='equation text, e.g. "x1^2 + 2*x1*x2 + x2^2 - 1 = 0"')
        p.add_argument("--file", help="read the equation from a file")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("diagonalize", help="reduce an equation to integer diagonal form")
    common(p)
    p.add_argument("--eigvecs", help='column order/signs for C, e.g. "1,-1,1;1,2,1;-1,0,1"')
    p.set_defaults(func=cmd_diagonalize)

    p = sub.add_parser("analyze", help="count box solutions on a ladder of N and classify growth")
    common(p)
    p.add_argument("--ladder", help="comma-separated box radii, ascending")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max scanned points per N")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("map", help="map a point between old and diagonal coordinates")
    common(p)
    p.add_argument("--point", help="comma-separated coordinates")
    p.add_argument("--direction", choices=["new-to-old", "old-to-new"], default="new-to-old")
    p.add_argument("--eigvecs", help="column order/signs for C (as for diagonalize)")
    p.set_defaults(func=cmd_map)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, SpectralMismatch) as exc:
        sys.stderr.write(f"quaddiag: error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        sys.stderr.write(f"quaddiag: budget exceeded: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
