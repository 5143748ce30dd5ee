"""Command-line front end.

    airyherm verify lacunary --order 12 --points 40
    airyherm verify cube --grid "t=0.25,0.5,1,2;x=-2:2:0.5" --json cube.json
    airyherm duality scan --m 4 --tau 50 --t 1 --x 0.5 --jmax 8
    airyherm eval airy --x 0
    airyherm eval kernel --m 4 --grid "t=1,2;x=-1:1:0.5" --csv kernel.csv
    airyherm report --json report.json

Exit status: 0 when every case passes, 1 when any case fails (the first failing
case goes to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .kernels import DomainError, KernelParams, airy, airy_heat, canonical_a
from .quadrature import QuadratureError, QuadSpec
from .report import VerificationReport, fmt_float, merge
from .suites import SUITES, duality_case

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_values(text: str) -> list[float]:
    """``"0.25,0.5,1"`` or an inclusive range ``"-2:2:0.5"`` (or a mix, comma separated)."""
    out: list[float] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            try:
                lo, hi, step = (float(v) for v in part.split(":"))
            except ValueError:
                raise UsageError(f"bad range {part!r}; expected lo:hi:step")
            if step <= 0 or hi < lo:
                raise UsageError(f"bad range {part!r}")
            count = int(np.floor((hi - lo) / step + 1e-9)) + 1
            out.extend(float(v) for v in np.round(lo + step * np.arange(count), 12))
        else:
            try:
                out.append(float(part))
            except ValueError:
                raise UsageError(f"bad number {part!r}")
    if not out:
        raise UsageError(f"empty value list {text!r}")
    return out


def parse_grid(spec: str) -> dict[str, list[float]]:
    """``"t=0.25,0.5;x=-2:2:0.5"`` -> ``{"t": [...], "x": [...]}``."""
    grid: dict[str, list[float]] = {}
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        name, sep, values = item.partition("=")
        name = name.strip()
        if not sep or name not in ("t", "x"):
            raise UsageError(f"bad grid axis {item!r}; expected t=... or x=...")
        grid[name] = parse_values(values)
    if "x" not in grid:
        raise UsageError("grid needs an x axis")
    return grid


def quad_spec(args) -> QuadSpec:
    if args.quad_tol is not None:
        if not args.quad_tol > 0:
            raise UsageError("--quad-tol must be positive")
        return QuadSpec.from_env(rel_tol=args.quad_tol)
    return QuadSpec.from_env()


def apply_override(report: VerificationReport, tol: Optional[float]) -> VerificationReport:
    if tol is None:
        return report
    return VerificationReport(report.suite, [c.with_tol(tol) for c in report.cases])


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def finish(report: VerificationReport, args) -> int:
    report = apply_override(report, args.tol_override)
    if getattr(args, "json", None):
        write_text(args.json, report.to_json())
    s = report.summary
    print(f"{report.suite}: {s['passed']}/{s['total']} passed", file=sys.stdout)
    bad = report.first_failure()
    if bad is None:
        return EXIT_OK
    print(f"FAIL {bad.name}: metric={fmt_float(bad.metric)} tol={fmt_float(bad.tol)}",
          file=sys.stderr)
    return EXIT_FAIL


def cmd_verify(args) -> int:
    q = quad_spec(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {"q": q, "seed": args.seed, "order": args.order, "points": args.points}
    if args.grid:
        if args.suite != "cube":
            raise UsageError("--grid applies to the cube suite only")
        grid = parse_grid(args.grid)
        kwargs["x_values"] = grid["x"]
        if "t" in grid:
            if min(grid["t"]) <= 0:
                raise UsageError("grid t values must be positive")
            kwargs["t_values"] = grid["t"]
    if args.order < 1 or args.points < 1:
        raise UsageError("--order and --points must be positive")
    reports = [SUITES[n](**kwargs) for n in names]
    report = reports[0] if len(reports) == 1 else merge("all", reports)
    return finish(report, args)


def cmd_report(args) -> int:
    q = quad_spec(args)
    report = merge("all", (fn(q=q, seed=args.seed) for fn in SUITES.values()))
    return finish(report, args)


def cmd_duality(args) -> int:
    if args.m < 2 or args.jmax < 0 or args.tau <= 0 or args.t <= 0:
        raise UsageError("need m >= 2, jmax >= 0, tau > 0, t > 0")
    case = duality_case(args.m, args.tau, args.t, args.x, args.jmax, quad_spec(args),
                        tol=args.tol)
    print(f"oracle {case.params['oracle']}")
    print("j,partial_sum,absolute_error")
    sums = case.params["partial_sums"].split(",")
    errs = case.params["abs_errors"].split(",")
    for j, (v, e) in enumerate(zip(sums, errs)):
        print(f"{j},{v},{e}")
    print(f"best j={case.params['best_index']} relative_error={fmt_float(case.metric)}")
    report = VerificationReport("duality", [case])
    return finish(report, args)


def _eval_rows(args, q: QuadSpec) -> list[tuple[Optional[float], float, float]]:
    if args.grid:
        grid = parse_grid(args.grid)
    elif args.x is not None:
        grid = {"x": parse_values(args.x)}
    else:
        raise UsageError("eval needs --x or --grid")
    xs = grid["x"]
    rows = []
    if args.what == "airy":
        if "t" in grid:
            raise UsageError("airy takes no t axis")
        for x in xs:
            rows.append((None, x, airy(x, q)))
        return rows
    ts = grid.get("t", [args.t])
    a = canonical_a(args.m) if args.a is None else args.a
    for t in ts:
        vals = np.atleast_1d(airy_heat(KernelParams(a, args.m, args.s, t), np.array(xs), q))
        rows.extend((t, x, float(v)) for x, v in zip(xs, vals))
    return rows


def cmd_eval(args) -> int:
    q = quad_spec(args)
    rows = _eval_rows(args, q)
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(["t", "x", "value"])
                for t, x, v in rows:
                    w.writerow(["" if t is None else fmt_float(t), fmt_float(x), fmt_float(v)])
        except OSError as exc:
            print(f"error: cannot write {args.csv}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    for t, x, v in rows:
        print(format(v, ".10g") if len(rows) == 1 else
              (f"{x:g} {v:.10g}" if t is None else f"{t:g} {x:g} {v:.10g}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airyherm",
        description="Verify lacunary Hermite, Airy-heat and Gould-Hopper identities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--quad-tol", type=float, default=None,
                        help="relative quadrature tolerance (default from AIRYHERM_QUAD_TOL or 1e-10)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    parser.add_argument("--tol-override", type=float, default=None,
                        help="replace every case tolerance (for testing the exit contract)")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--order", type=int, default=12, help="series order N (lacunary)")
    v.add_argument("--points", type=int, default=40, help="number of u points (lacunary)")
    v.add_argument("--grid", help='grid spec, e.g. "t=0.25,0.5;x=-2:2:0.5" (cube)')
    v.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("duality", help="duality partial sums")
    dsub = d.add_subparsers(dest="action", required=True)
    scan = dsub.add_parser("scan", help="partial sums against the oracle")
    scan.add_argument("--m", type=int, default=4)
    scan.add_argument("--tau", type=float, default=50.0)
    scan.add_argument("--t", type=float, default=1.0)
    scan.add_argument("--x", type=float, default=0.5)
    scan.add_argument("--jmax", type=int, default=8)
    scan.add_argument("--tol", type=float, default=1e-3,
                      help="relative tolerance on the best partial sum (even m)")
    scan.add_argument("--json", metavar="PATH")
    scan.set_defaults(func=cmd_duality)

    e = sub.add_parser("eval", help="evaluate Ai or the Airy-heat kernel")
    e.add_argument("what", choices=["airy", "kernel"])
    e.add_argument("--x", help="x values: list or lo:hi:step")
    e.add_argument("--grid", help='grid spec, e.g. "t=1,2;x=-1:1:0.5"')
    e.add_argument("--m", type=int, default=3)
    e.add_argument("--a", type=float, default=None, help="coefficient (default canonical for m)")
    e.add_argument("--s", type=float, default=0.0)
    e.add_argument("--t", type=float, default=1.0)
    e.add_argument("--csv", metavar="PATH", help="write t,x,value rows")
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("report", help="run every suite")
    r.add_argument("--json", metavar="PATH", required=True)
    r.set_defaults(func=cmd_report)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
