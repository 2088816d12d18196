"""Command-line front end.

Subcommands::

    table     -chi_r(GU(n,q)) for a grid of r and n, numeric or polynomial
    pprimary  p-primary values at a fixed (possibly negative) q
    verify    run the identity suites
    oracle    brute-force checks against the formulas

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .arith import ArithFn, count_A_plus
from .euler import PIPELINES, chi_gu_pipeline, divisibility_factor, p_primary_series
from .oracle import (
    BudgetExceeded,
    Budget,
    OracleReport,
    check_equivariant,
    check_group_order,
    check_qregular,
    check_selfdual,
    default_budget,
)
from .polyq import RatPoly
from .series import DEFAULT_ORDER
from .verify import SUITES, run_suites

__all__ = ["main", "build_parser", "parse_range", "RunConfig", "UsageError"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_range(text: str, allow_negative: bool = False) -> list[int]:
    """``"3"``, ``"1..6"`` or ``"2,4,7"`` (pieces may be combined with commas)."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise UsageError(f"empty item in range {text!r}")
        try:
            if ".." in piece:
                lo_s, hi_s = piece.split("..", 1)
                lo, hi = int(lo_s), int(hi_s)
                if hi < lo:
                    raise UsageError(f"empty range {piece!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(piece))
        except ValueError as exc:
            if isinstance(exc, UsageError):
                raise
            raise UsageError(f"cannot parse range {text!r}") from exc
    if not allow_negative and any(v < 1 for v in out):
        raise UsageError(f"range {text!r} must be positive")
    return out


@dataclass
class RunConfig:
    command: str
    q: list[int] | None
    p: int | None
    r: list[int]
    n: list[int]
    order: int
    fmt: str
    budget: int
    out: str | None


# -- rendering -------------------------------------------------------------------


def _cell_text(v) -> str:
    return v.pretty() if isinstance(v, RatPoly) else str(v)


def _cell_json(v):
    return v.to_json() if isinstance(v, RatPoly) else v


def render_grid(title: str, row_label: str, rows: list[tuple[str, int, list]], cols: list[int], fmt: str, meta: dict) -> str:
    """Rows are ``(label, key, values)``; columns are indexed by n."""
    if fmt == "json":
        payload = dict(meta)
        payload["n"] = cols
        payload["rows"] = [{row_label: key, "values": [_cell_json(v) for v in vals]} for _, key, vals in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([row_label] + [str(c) for c in cols])
        for label, _, vals in rows:
            w.writerow([label] + [_cell_text(v) for v in vals])
        return buf.getvalue()
    lines = [f"### {title}", "", "| " + " | ".join([f"{row_label} \\ n"] + [str(c) for c in cols]) + " |"]
    lines.append("|" + "---|" * (len(cols) + 1))
    for label, _, vals in rows:
        lines.append("| " + " | ".join([label] + [_cell_text(v) for v in vals]) + " |")
    return "\n".join(lines) + "\n"


def render_checks(title: str, payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    items = payload["checks"] if "checks" in payload else payload["suites"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = sorted({k for it in items for k in it if not isinstance(it[k], (list, dict))})
        w.writerow(keys)
        for it in items:
            w.writerow([it.get(k, "") for k in keys])
        return buf.getvalue()
    lines = [f"### {title}: {payload['verdict']}", ""]
    for it in items:
        name = it.get("check") or it.get("suite")
        detail = ", ".join(f"{k}={v}" for k, v in it.items() if k not in ("check", "suite", "verdict"))
        lines.append(f"- {name}: {it['verdict']} ({detail})")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------------


def _order_for(args, n_values: list[int]) -> int:
    nmax = max(n_values)
    if args.order is None:
        return max(DEFAULT_ORDER, nmax)
    if args.order < nmax:
        raise UsageError(f"--order {args.order} is smaller than the largest requested n ({nmax})")
    return args.order


def cmd_table(args) -> tuple[str, int]:
    r_values = parse_range(args.r)
    n_values = parse_range(args.n)
    order = _order_for(args, n_values)
    q = args.q
    rows = []
    for level in r_values:
        polys = chi_gu_pipeline(args.method, level, order)
        vals = []
        for n in n_values:
            v: RatPoly = polys[n]
            if args.poly:
                v = v.exact_div(divisibility_factor(n, level))
            vals.append(v(q) if q is not None else v)
        rows.append((str(level), level, vals))
    meta = {"quantity": "-chi_r(GU(n,q))" + (" / divisibility factor" if args.poly else ""), "q": q, "method": args.method}
    title = f"-chi_r(GU(n,{q if q is not None else 'q'}))" + (" divided by the divisibility factor" if args.poly else "")
    return render_grid(title, "r", rows, n_values, args.format, meta), EXIT_OK


def cmd_pprimary(args) -> tuple[str, int]:
    q_values = parse_range(args.q, allow_negative=True)
    r_values = parse_range(args.r)
    n_values = parse_range(args.n)
    order = _order_for(args, n_values)
    rows = []
    for q in q_values:
        if abs(q) < 2:
            raise UsageError("need |q| >= 2")
        for level in r_values:
            series = p_primary_series(args.p, q, level, order)
            label = f"q={q}, r={level}" if len(q_values) > 1 and len(r_values) > 1 else (f"q={q}" if len(r_values) == 1 else f"r={level}")
            rows.append((label, {"q": q, "r": level}, [series[n - 1] for n in n_values]))
    meta = {"quantity": "-chi^p_r(GU(n,q))", "p": args.p}
    out = render_grid(f"{args.p}-primary values", "row", rows, n_values, args.format, meta)
    return out, EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.n_max < 1 or args.r_max < 1:
        raise UsageError("--n-max and --r-max must be positive")
    arith = ArithFn()
    if args.perturb_a_plus:
        arith = ArithFn({("plus", 1): count_A_plus(1) + args.perturb_a_plus})
    only = args.suite or None
    if only:
        for s in only:
            if s not in SUITES:
                raise UsageError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    order = args.order if args.order is not None else DEFAULT_ORDER
    results = run_suites(args.n_max, args.r_max, order, arith, only)
    passed = all(r.passed for r in results)
    payload = {
        "verdict": "pass" if passed else "fail",
        "config": {"n_max": args.n_max, "r_max": args.r_max, "order": order, "perturbed": arith.perturbed},
        "failed": [r.name for r in results if not r.passed],
        "suites": [r.to_json(args.timings) for r in results],
    }
    return render_checks("verify", payload, args.format), EXIT_OK if passed else EXIT_FAIL


def cmd_oracle(args) -> tuple[str, int]:
    budget = Budget(args.budget)
    report = OracleReport()
    if args.selfdual:
        if args.q is None or args.m is None:
            raise UsageError("--selfdual needs --q and --m")
        for q in parse_range(args.q):
            for m in parse_range(args.m):
                report.checks.extend(check_selfdual(q, m, budget=budget))
    else:
        if args.q is None or args.n is None:
            raise UsageError("oracle needs --q and --n")
        q_values = parse_range(args.q)
        n_values = parse_range(args.n)
        for q in q_values:
            for n in n_values:
                if args.group_order:
                    report.checks.append(check_group_order(n, q, budget))
                if args.qregular:
                    report.checks.append(check_qregular(n, q, budget))
                if args.r is not None:
                    for r in parse_range(args.r):
                        report.checks.append(check_equivariant(n, q, r, args.p, budget))
        if not report.checks:
            raise UsageError("nothing to check: give --r, --group-order or --qregular")
    payload = report.to_json(args.timings)
    return render_checks("oracle", payload, args.format), EXIT_OK if report.passed else EXIT_FAIL


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitary-euler",
        description="Equivariant reduced Euler characteristics of unitary buildings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_fmt: str) -> None:
        p.add_argument("--format", choices=("markdown", "csv", "json"), default=default_fmt)
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--order", type=int, help="series truncation order (default max(12, largest n))")

    t = sub.add_parser("table", help="table of -chi_r(GU(n,q))")
    t.add_argument("--q", type=int, help="evaluate at this q; omit for polynomials")
    t.add_argument("--r", required=True, help="levels, e.g. 1..10")
    t.add_argument("--n", required=True, help="ranks, e.g. 1..6")
    t.add_argument("--poly", action="store_true", help="divide by the divisibility factor")
    t.add_argument("--method", choices=PIPELINES, default="closed")
    common(t, "markdown")
    t.set_defaults(func=cmd_table)

    pp = sub.add_parser("pprimary", help="p-primary values")
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--q", required=True, help="one or more q values; negative q allowed")
    pp.add_argument("--r", required=True)
    pp.add_argument("--n", required=True)
    common(pp, "markdown")
    pp.set_defaults(func=cmd_pprimary)

    v = sub.add_parser("verify", help="run the identity suites")
    v.add_argument("--n-max", type=int, default=10)
    v.add_argument("--r-max", type=int, default=7)
    v.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    v.add_argument("--perturb-a-plus", type=int, default=0, metavar="DELTA", help="add DELTA to A+(1) (mutation check)")
    v.add_argument("--timings", action="store_true", help="include wall-clock timings")
    common(v, "json")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force checks")
    o.add_argument("--n")
    o.add_argument("--q")
    o.add_argument("--r")
    o.add_argument("--p", type=int, help="p-primary variant")
    o.add_argument("--selfdual", action="store_true", help="polynomial counts over F_{q^2}")
    o.add_argument("--m", help="polynomial degrees for --selfdual")
    o.add_argument("--group-order", action="store_true")
    o.add_argument("--qregular", action="store_true")
    o.add_argument("--budget", type=int, default=None, help="work budget (default from environment or 10^6)")
    o.add_argument("--timings", action="store_true", help="include wall-clock timings")
    common(o, "json")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "budget", None) is None and args.command == "oracle":
            args.budget = default_budget()
        if args.order is not None and args.order < 0:
            raise UsageError("--order must be nonnegative")
        text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
