"""Command-line front end: point queries, sweeps, region maps, offsets, verification.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
``HKRATES_OUTPUT_DIR`` redirects relative ``--output``/``--plot`` paths.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import asymptotics, verify
from .optimizers import r_asym, r_etw, r_orth, r_rs, r_sason, r_sym, r_ts
from .rates import ChannelParams
from .regions import GridScan, RegionLabel, classify_rates, db_to_linear, scan

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2
OUTPUT_DIR_ENV = "HKRATES_OUTPUT_DIR"


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """12 significant digits; empty for missing values."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return f"{x:.12g}"


def _resolve(path: str | None) -> Path | None:
    if path is None or path == "-":
        return None
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _to_linear(value: float, units: str) -> float:
    return float(db_to_linear(value)) if units == "db" else float(value)


def _channel(a: float, p: float) -> ChannelParams:
    try:
        return ChannelParams(a, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write_csv(header, rows, output) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in r])
    text = buf.getvalue()
    path = _resolve(output)
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8", newline="\n")
    return text


def _write_json(obj, output):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    path = _resolve(output)
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8", newline="\n")


def _line_plot(path, x, series, xlabel, ylabel, title):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "hkrates"
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, y in series.items():
        ax.plot(x, y, label=name)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(_resolve(path), format="svg", metadata={"Date": None})
    plt.close(fig)


def rate_report(ch: ChannelParams) -> dict:
    sym, asym, rs = r_sym(ch), r_asym(ch), r_rs(ch)
    orth, etw = r_orth(ch), r_etw(ch)
    label = classify_rates(sym.rate, sym.split.lambda1, asym.rate, orth.rate)
    return {
        "a": ch.a,
        "p": ch.p,
        "R_sym": sym.rate,
        "lambda_sym": sym.split.lambda1,
        "R_asym": asym.rate,
        "lambda_asym": asym.split.lambda2,
        "R_orth": orth.rate,
        "R_ETW": etw.rate,
        "ETW_infeasible": etw.extras["infeasible"],
        "R_RS": rs.rate,
        "label": int(label),
        "label_name": label.name,
    }


def cmd_rate(args) -> int:
    ch = _channel(args.a, _to_linear(args.p, args.units))
    rep = rate_report(ch)
    if args.format == "json":
        _write_json(rep, args.output)
        return EXIT_OK
    lines = [f"{k} = {fmt(v) if isinstance(v, float) else v}" for k, v in rep.items()]
    text = "\n".join(lines) + "\n"
    path = _resolve(args.output)
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.steps < 1 or args.a_min > args.a_max or (args.steps > 1 and args.a_min == args.a_max):
        raise UsageError("empty a range")
    if not (0.0 < args.a_min and args.a_max < 1.0):
        raise UsageError("a range must lie inside (0, 1); strong interference (a >= 1) is excluded")
    p = _to_linear(args.p, args.units)
    a_values = np.linspace(args.a_min, args.a_max, args.steps)
    header = ["a", "R_sym", "R_asym", "R_orth", "R_ETW"]
    if args.ts:
        header += ["R_TS", "R_Sason"]
    rows = []
    for a in a_values:
        ch = _channel(float(a), p)
        row = [ch.a, r_sym(ch).rate, r_asym(ch).rate, r_orth(ch).rate, r_etw(ch).rate]
        if args.ts:
            row += [r_ts(ch).rate, r_sason(ch).rate]
        rows.append(row)
    if args.format == "json":
        _write_json([dict(zip(header, r)) for r in rows], args.output)
    else:
        _write_csv(header, rows, args.output)
    if args.plot:
        cols = list(zip(*rows))
        series = {h: cols[i] for i, h in enumerate(header) if i > 0}
        _line_plot(args.plot, cols[0], series, "a", "sum rate [bits/channel use]", f"P = {fmt(p)}")
    return EXIT_OK


def cmd_region(args) -> int:
    try:
        grid = GridScan(
            axes=args.axes,
            x_min=args.x_min,
            x_max=args.x_max,
            x_steps=args.x_steps,
            y_min=args.y_min,
            y_max=args.y_max,
            y_steps=args.y_steps,
            time_sharing=args.ts,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = scan(grid)
    if not any(r.in_domain for r in result.rows):
        raise UsageError("grid has no points with 0 < a < 1")
    header = ["x", "y", "a", "p", "label", "R_sym", "R_asym", "R_orth"]
    if args.ts:
        header += ["ts_adv", "sason_adv"]
    rows = []
    for r in result.rows:
        row = [r.x, r.y, r.a, r.p, int(r.label), r.r_sym, r.r_asym, r.r_orth]
        if args.ts:
            if r.in_domain:
                row += [r.r_ts - r.r_no_ts, r.r_sason - r.r_no_ts]
            else:
                row += [math.nan, math.nan]
        rows.append(row)
    if args.format == "json":
        _write_json([{h: (None if isinstance(v, float) and math.isnan(v) else v) for h, v in zip(header, r)} for r in rows], args.output)
    else:
        _write_csv(header, rows, args.output)
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    if args.steps < 1 or not (0.0 < args.a_min <= args.a_max < 1.0):
        raise UsageError("a range must be non-empty and inside (0, 1)")
    a_values = np.linspace(args.a_min, args.a_max, args.steps)
    header = ["a"] + [f"dR_{s}" for s in asymptotics.OFFSET_SCHEMES]
    rows = [[float(a)] + [asymptotics.delta_offset(s, float(a)) for s in asymptotics.OFFSET_SCHEMES] for a in a_values]
    if args.format == "json":
        _write_json([dict(zip(header, r)) for r in rows], args.output)
    else:
        _write_csv(header, rows, args.output)
    report = [f"crossover Sym/Asym: a = {fmt(asymptotics.crossover('Sym', 'Asym'))}"]
    report.append(f"crossover Sym/Orth: a = {fmt(asymptotics.crossover('Sym', 'Orth'))}")
    try:
        x = asymptotics.crossover("Asym", "Orth")
        report.append(f"crossover Asym/Orth: a = {fmt(x)}")
    except asymptotics.NoCrossoverError:
        report.append("crossover Asym/Orth: none in (0, 1)")
    sys.stderr.write("\n".join(report) + "\n")
    if args.plot:
        cols = list(zip(*rows))
        series = {h: cols[i] for i, h in enumerate(header) if i > 0}
        _line_plot(args.plot, cols[0], series, "a", "offset [bits]", "high-SNR sum-rate offsets")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = verify.run_suite(name, seed=args.seed, samples=args.samples)
        print(res.summary())
        for f in res.failures[:10]:
            print(f"  failing: {f}")
        ok &= res.passed
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkrates",
        description="Optimized Han-Kobayashi sum rates of the symmetric Gaussian interference channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("csv", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", "-o", default=None, help="output file (default stdout)")

    sp = sub.add_parser("rate", help="all rates at one (a, P)")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--units", choices=("linear", "db"), default="linear")
    common(sp, formats=("text", "json"))
    sp.set_defaults(func=cmd_rate)

    sp = sub.add_parser("sweep", help="rates versus a at fixed P")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--units", choices=("linear", "db"), default="linear")
    sp.add_argument("--a-min", type=float, default=0.01)
    sp.add_argument("--a-max", type=float, default=0.99)
    sp.add_argument("--steps", type=int, default=99)
    sp.add_argument("--ts", action="store_true", help="include the time-sharing rates")
    sp.add_argument("--plot", default=None, help="write an SVG line plot")
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("region", help="best-strategy map")
    sp.add_argument("--axes", choices=("a-p", "snr-inr"), default="a-p")
    sp.add_argument("--x-min", type=float, default=None)
    sp.add_argument("--x-max", type=float, default=None)
    sp.add_argument("--x-steps", type=int, default=50)
    sp.add_argument("--y-min", type=float, default=None)
    sp.add_argument("--y-max", type=float, default=None)
    sp.add_argument("--y-steps", type=int, default=41)
    sp.add_argument("--ts", action="store_true", help="include time-sharing advantages")
    common(sp)
    sp.set_defaults(func=cmd_region)

    sp = sub.add_parser("asymptotics", help="high-SNR offsets and crossovers")
    sp.add_argument("--a-min", type=float, default=0.01)
    sp.add_argument("--a-max", type=float, default=0.99)
    sp.add_argument("--steps", type=int, default=99)
    sp.add_argument("--plot", default=None, help="write an SVG line plot")
    common(sp)
    sp.set_defaults(func=cmd_asymptotics)

    sp = sub.add_parser("verify", help="run the invariant suites")
    sp.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return parser


_REGION_DEFAULTS = {
    "a-p": (0.01, 0.99, 0.0, 40.0),
    "snr-inr": (0.0, 40.0, 0.0, 40.0),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "region":
        defaults = _REGION_DEFAULTS[args.axes]
        for name, d in zip(("x_min", "x_max", "y_min", "y_max"), defaults):
            if getattr(args, name) is None:
                setattr(args, name, d)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hkrates {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
