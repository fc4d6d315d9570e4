"""Command line front end.

    su2discord compute --two-j 1 --f 1.0
    su2discord sweep --two-j 1,3,9,49 --f-steps 101 --out fig1.csv
    su2discord verify --two-j 1,3,9 --f-steps 11 --tol 1e-8

Exit codes: 0 success, 1 bad arguments or I/O failure, 2 verification
failure.
"""
import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .analytic import correlation_report, quantum_discord
from .oracle import numeric_discord
from .states import SU2State, build_product_basis

QUANTITIES = ("mutual", "classical", "discord", "discord_large_j", "eof", "negativity")
DEFAULT_QUANTITIES = ("mutual", "classical", "discord", "eof", "negativity")
FLATNESS_TOL = 1e-10

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x):
    """15 significant digits, enough to round-trip a double within 1e-15."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".15g")


def _two_j_list(text):
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("every two_j must be an integer >= 1")
    return vals


def _quantities(text):
    vals = [v.strip() for v in text.split(",") if v.strip()]
    bad = [v for v in vals if v not in QUANTITIES]
    if bad or not vals:
        raise argparse.ArgumentTypeError(
            f"unknown quantities {bad}; choose from {','.join(QUANTITIES)}")
    return tuple(q for q in QUANTITIES if q in vals)


def _grid(text):
    try:
        n_theta, n_phi = (int(v) for v in text.lower().replace("x", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 64x128, got {text!r}")
    if n_theta < 8 or n_phi < 8:
        raise argparse.ArgumentTypeError("grid needs at least 8 points per angle")
    return n_theta, n_phi


def f_grid(start, end, steps):
    """Linspace grid with the endpoints hit exactly."""
    grid = np.linspace(start, end, steps)
    grid[0], grid[-1] = start, end
    return [float(f) for f in grid]


def _state(two_j, f):
    try:
        return SU2State(two_j, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def sweep_rows(two_j_list, f_values, quantities=DEFAULT_QUANTITIES, jobs=1):
    """Rows ``{two_j, F, quantity...}`` ordered by ``(two_j, F)`` ascending."""
    points = [(tj, f) for tj in sorted(two_j_list) for f in sorted(f_values)]

    def row(point):
        report = correlation_report(SU2State(*point)).as_dict()
        return {"two_j": point[0], "F": point[1], **{q: report[q] for q in quantities}}

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(row, points))


def render(rows, fields, form):
    if form == "json":
        data = [{k: json.loads(fmt(r[k])) for k in fields} for r in rows]
        return json.dumps(data, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in rows:
        writer.writerow([fmt(r[k]) for k in fields])
    return buf.getvalue()


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def cmd_compute(args):
    report = correlation_report(_state(args.two_j, args.f)).as_dict()
    if args.format == "json":
        text = json.dumps({k: json.loads(fmt(v)) for k, v in report.items()}, indent=1) + "\n"
    elif args.format == "csv":
        text = render([report], list(report), "csv")
    else:
        width = max(len(k) for k in report)
        text = "".join(f"{k:<{width}}  {fmt(v)}\n" for k, v in report.items())
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args):
    if not 0 <= args.f_start <= args.f_end <= 1:
        raise UsageError("need 0 <= f-start <= f-end <= 1")
    if args.f_steps < 2:
        raise UsageError("f-steps must be >= 2")
    rows = sweep_rows(args.two_j, f_grid(args.f_start, args.f_end, args.f_steps),
                      args.quantities, args.jobs)
    _emit(render(rows, ["two_j", "F", *args.quantities], args.format), args.out)
    return EXIT_OK


def verify(two_j_list, f_steps=11, grid=(64, 128)):
    """Oracle-versus-closed-form deviation and landscape spread per ``two_j``."""
    summary = []
    for tj in two_j_list:
        dev = spread = 0.0
        for f in f_grid(0.0, 1.0, f_steps):
            s = SU2State(tj, f)
            rho = build_product_basis(s)
            numeric, flat = numeric_discord(rho, grid, return_spread=True)
            dev = max(dev, abs(numeric - quantum_discord(s)))
            spread = max(spread, flat)
        summary.append({"two_j": tj, "max_deviation": dev, "max_spread": spread})
    return summary


def cmd_verify(args):
    if not args.tol > 0:
        raise UsageError("tol must be positive")
    start = time.perf_counter()
    summary = verify(args.two_j, args.f_steps, args.grid)
    ok = True
    lines = []
    for row in summary:
        passed = row["max_deviation"] <= args.tol and row["max_spread"] <= FLATNESS_TOL
        ok &= passed
        lines.append(
            f"two_j={row['two_j']:<4d} max|D_oracle - D_closed|={row['max_deviation']:.3e} "
            f"spread={row['max_spread']:.3e} {'PASS' if passed else 'FAIL'}\n")
    lines.append(f"{'PASS' if ok else 'FAIL'} tol={args.tol:g} "
                 f"({time.perf_counter() - start:.1f}s)\n")
    _emit("".join(lines), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser():
    parser = _Parser(prog="su2discord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="all measures at one (j, F)")
    p.add_argument("--two-j", type=int, required=True, help="twice the spin, 2j >= 1")
    p.add_argument("--f", type=float, required=True, help="weight F in [0, 1]")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("sweep", help="tabulate measures over an F grid")
    p.add_argument("--two-j", type=_two_j_list, default=[1, 3, 9, 49])
    p.add_argument("--f-start", type=float, default=0.0)
    p.add_argument("--f-end", type=float, default=1.0)
    p.add_argument("--f-steps", type=int, default=101)
    p.add_argument("--quantities", type=_quantities, default=DEFAULT_QUANTITIES)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check closed forms against the measurement oracle")
    p.add_argument("--two-j", type=_two_j_list, default=[1, 2, 3, 4, 9])
    p.add_argument("--f-steps", type=int, default=11)
    p.add_argument("--grid", type=_grid, default=(64, 128))
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"su2discord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
