"""Command-line surface.

Subcommands:
  radius  solve one (class, spec) radius equation
  table   reproduce one of the four bundled result tables as CSV
  verify  run a seeded verification campaign and emit a JSON report
  scan    sweep a family parameter and bracket the 1/3 sharpness threshold

Exit codes: 0 ok, 2 parameter error, 3 numeric-budget error,
4 verification failure.  Output is byte-deterministic for fixed
arguments and seed; numbers are printed to 9 significant digits and CSV
uses dot decimals regardless of locale.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import reference
from .catalog import FAMILIES, PhiSpec, check_min_max_hypothesis, expblend, janowski, lemniscate, strongly
from .errors import BudgetError, NoRootError, ParameterError, PrecisionError
from .extremal import build_extremal, h_at
from .power_series import DEFAULT_ORDER
from .quadrature import DEFAULT_TOL
from .solver import ClassId, solve_radius, threshold_scan
from .verifier import run_campaign

_TABLE_TOL = 1e-11
_SCHEMA = 1

_PARAM_FLAGS = ("A", "B", "gamma", "s", "alpha", "beta")


def _default_order() -> int:
    raw = os.environ.get("BOHR_ORDER", "")
    if not raw:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError as exc:
        raise ParameterError(f"BOHR_ORDER must be an integer, got {raw!r}") from exc
    if order < 8:
        raise ParameterError(f"BOHR_ORDER must be at least 8, got {order}")
    return order


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _jsonable(x):
    if isinstance(x, float):
        return float(_fmt(x))
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit_json(payload: dict) -> None:
    payload = {"schema": _SCHEMA, **payload}
    sys.stdout.write(json.dumps(_jsonable(payload), sort_keys=True) + "\n")


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    sys.stdout.write(buf.getvalue())


def _spec_from_args(args) -> PhiSpec:
    family = args.phi
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {args.phi!r}; expected one of {sorted(FAMILIES)}")
    wanted = FAMILIES[family]
    values = []
    for name in wanted:
        value = getattr(args, name, None)
        if value is None:
            raise ParameterError(f"family {family} requires --{name}")
        values.append(value)
    extras = [f for f in _PARAM_FLAGS if f not in wanted and getattr(args, f, None) is not None]
    if extras:
        raise ParameterError(f"family {family} does not take {', '.join('--' + e for e in extras)}")
    return PhiSpec(family, tuple(values))


def _spec_payload(spec: PhiSpec) -> dict:
    return {"family": spec.family, "params": spec.param_dict()}


def cmd_radius(args) -> int:
    spec = _spec_from_args(args)
    class_id = ClassId.parse(args.class_id)
    result = solve_radius(class_id, spec, args.order, args.tol)
    if not check_min_max_hypothesis(spec, result.capped):
        sys.stderr.write(
            f"warning: |phi| on the circle r={result.capped:.6g} is not extremized on the "
            "real axis; the growth bounds assume it\n"
        )
    if args.out == "csv":
        _emit_csv(
            ["class", "family", "params", "r_f", "capped", "sharp", "residual", "notes"],
            [[
                class_id.value,
                spec.family,
                ";".join(f"{k}={v:g}" for k, v in spec.param_dict().items()),
                result.r_f,
                result.capped,
                result.sharp,
                result.residual,
                result.notes,
            ]],
        )
    else:
        _emit_json({"class": class_id.value, "spec": _spec_payload(spec), **result.to_dict()})
    return 0


def _table1_rows(order: int):
    rows = []
    for s, ref in reference.TABLE1:
        r_f = solve_radius(ClassId.SC, lemniscate(s), order, _TABLE_TOL).r_f
        diff = reference.truncate_to(r_f, reference.decimals(ref)) - float(ref)
        rows.append([s, r_f, ref, diff])
    return ["s", "r_f", "reference", "diff"], rows


def _table4_rows(order: int):
    rows = []
    for a, b, ref in reference.TABLE4:
        r_f = solve_radius(ClassId.SC, janowski(a, b), order, _TABLE_TOL).r_f
        diff = reference.truncate_to(r_f, reference.decimals(ref)) - float(ref)
        rows.append([a, b, r_f, ref, diff])
    return ["A", "B", "r_f", "reference", "diff"], rows


def _growth_table_rows(table, make_spec, order: int):
    header = [
        "alpha",
        "h_one_third",
        "h_one_third_ref",
        "h_one_third_diff",
        "neg_h_minus_one",
        "neg_h_minus_one_ref",
        "neg_h_minus_one_diff",
        "gap_sign_at_zero",
        "gap_sign_at_one_third",
    ]
    rows = []
    for alpha, h3_ref, hm1_ref, _, _ in table:
        es = build_extremal(make_spec(alpha), order)
        h3 = h_at(es, 1.0 / 3.0)
        hm1 = -es.h_at_minus_one
        sign0 = "-"  # h(0) + h(-1) = h(-1) < 0 always
        sign3 = "+" if h3 - hm1 > 0.0 else "-"
        rows.append([
            alpha,
            h3,
            h3_ref,
            reference.truncate_to(h3, reference.decimals(h3_ref)) - float(h3_ref),
            hm1,
            hm1_ref,
            reference.truncate_to(hm1, reference.decimals(hm1_ref)) - float(hm1_ref),
            sign0,
            sign3,
        ])
    return header, rows


def cmd_table(args) -> int:
    order = args.order
    if args.id == 1:
        header, rows = _table1_rows(order)
    elif args.id == 2:
        header, rows = _growth_table_rows(reference.TABLE2, expblend, order)
    elif args.id == 3:
        header, rows = _growth_table_rows(reference.TABLE3, strongly, order)
    elif args.id == 4:
        header, rows = _table4_rows(order)
    else:
        raise ParameterError(f"table id must be 1..4, got {args.id}")
    if args.out == "json":
        _emit_json({
            "table": args.id,
            "rows": [dict(zip(header, row)) for row in rows],
        })
    else:
        _emit_csv(header, rows)
    return 0


def cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    class_id = ClassId.parse(args.class_id)
    if args.samples < 1:
        raise ParameterError(f"--samples must be >= 1, got {args.samples}")
    report = run_campaign(
        class_id, spec, args.samples, args.seed, r=args.r, order=args.order, tol=args.tol
    )
    _emit_json(report.to_json_dict())
    return 0 if report.ok else 4


def cmd_scan(args) -> int:
    if args.stop <= args.start or args.step <= 0.0:
        raise ParameterError("scan needs start < stop and a positive step")
    grid = []
    p = args.start
    while p <= args.stop + 1e-12:
        grid.append(round(p, 12))
        p += args.step
    scan = threshold_scan(args.equation, grid)
    if args.out == "csv":
        _emit_csv(
            ["param", "r_f", "in_sharp_window"],
            [[row.param, row.r_f, row.in_sharp_window] for row in scan.rows],
        )
    else:
        _emit_json({
            "equation": scan.equation_id,
            "rows": [
                {"param": r.param, "r_f": r.r_f, "in_sharp_window": r.in_sharp_window}
                for r in scan.rows
            ],
            "bracket": list(scan.bracket) if scan.bracket else None,
            "threshold": scan.threshold,
        })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrcc",
        description="Bohr radii for close-to-convex function classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_spec=True):
        p.add_argument("--order", type=int, default=None,
                       help="series truncation order (env BOHR_ORDER overrides the default)")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="quadrature tolerance")
        p.add_argument("--out", choices=("json", "csv"), default=None)
        if with_spec:
            p.add_argument("--class", dest="class_id", required=True,
                           choices=tuple(c.value for c in ClassId))
            p.add_argument("--phi", required=True, choices=tuple(sorted(FAMILIES)))
            for flag in _PARAM_FLAGS:
                p.add_argument(f"--{flag}", type=float, default=None)

    p_radius = sub.add_parser("radius", help="solve one radius equation")
    add_common(p_radius)
    p_radius.set_defaults(func=cmd_radius, out_default="json")

    p_table = sub.add_parser("table", help="reproduce a bundled result table")
    p_table.add_argument("id", type=int, choices=(1, 2, 3, 4))
    add_common(p_table, with_spec=False)
    p_table.set_defaults(func=cmd_table, out_default="csv")

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    add_common(p_verify)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--r", type=float, default=None,
                          help="override the radius to check (default: computed capped radius)")
    p_verify.set_defaults(func=cmd_verify, out_default="json")

    p_scan = sub.add_parser("scan", help="threshold scan over a family parameter")
    p_scan.add_argument("--equation", required=True)
    p_scan.add_argument("--start", type=float, required=True)
    p_scan.add_argument("--stop", type=float, required=True)
    p_scan.add_argument("--step", type=float, required=True)
    add_common(p_scan, with_spec=False)
    p_scan.set_defaults(func=cmd_scan, out_default="json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.out is None:
        args.out = args.out_default
    try:
        if args.order is None:
            args.order = _default_order()
        elif args.order < 8:
            raise ParameterError(f"--order must be at least 8, got {args.order}")
        return args.func(args)
    except ParameterError as exc:
        sys.stderr.write(f"parameter error: {exc}\n")
        return 2
    except (BudgetError, PrecisionError, NoRootError) as exc:
        sys.stderr.write(f"numeric error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
