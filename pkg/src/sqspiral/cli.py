"""Command-line interface: build/cache the table, verification suites, reports.

Exit codes: 0 success, 1 verification failure, 2 I/O error, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import arms as arms_mod
from . import primes as primes_mod
from . import verify as verify_mod
from .config import Config, load_config
from .constants import c2_estimate
from .series import (axis_crossings, fib_angle_series, fib_area_ratio_series,
                     same_arm_angle_series, square_angle_series,
                     square_band_ratio_series)
from .svg import GroupStyle, RenderSpec, parse_style, render_svg
from .table import build_table, load_table, save_table

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_IO = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sqspiral", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="config file (default ./spiral.conf)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and cache the angle table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", help="cache file path (overrides config/env)")

    p = sub.add_parser("verify", help="run a reproduction suite")
    p.add_argument("suite", choices=list(verify_mod.SUITES) + ["all"])

    p = sub.add_parser("arms", help="trace spiral arms for a number group")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--seed-bound", type=int, default=None)

    p = sub.add_parser("areas", help="area and angle series reports")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--bands", type=int, metavar="M_MAX")
    mode.add_argument("--square-angles", type=int, metavar="K_MAX")
    mode.add_argument("--same-arm", type=int, metavar="R_MAX")
    mode.add_argument("--crossings", type=int, metavar="WINDING_MAX")
    mode.add_argument("--winding-distances", type=int, metavar="MAX_N",
                      help="winding-distance CSV over all probes")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--figure", metavar="SVG_PATH",
                   help="also write the series as a chart")

    p = sub.add_parser("fib", help="Fibonacci angle and area constants")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--angles", action="store_true")
    mode.add_argument("--areas", action="store_true")
    p.add_argument("--count", type=int, default=6)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--figure", metavar="SVG_PATH",
                   help="also write the series as a chart")

    p = sub.add_parser("primes", help="prime-rich polynomial scan / arm report")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--scan-d", type=int, metavar="D")
    mode.add_argument("--report", action="store_true")
    p.add_argument("--t", type=int, default=100)
    p.add_argument("--c-min", type=int, default=-10)
    p.add_argument("--c-max", type=int, default=20)
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("render", help="deterministic SVG of the spiral")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--group", action="append", default=[])
    p.add_argument("--arms", action="store_true",
                   help="overlay traced arms of the listed groups")
    p.add_argument("--out", required=True)
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--style", help="key=value style file")
    return parser


def _table_for(cfg: Config, max_n: int):
    if cfg.cache_path:
        try:
            table = load_table(cfg.cache_path)
            if table.max_n >= max_n:
                return table
        except (OSError, ValueError):
            pass
    return build_table(max_n)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_build(args, cfg: Config) -> int:
    path = args.cache or cfg.cache_path
    table = build_table(args.n)
    if path:
        save_table(table, path)
    _emit(f"max_n={table.max_n}\n"
          f"final_angle={table.w(table.max_n):.12f}\n"
          f"c2_raw={c2_estimate(table, table.max_n):.12f}\n")
    if path:
        _emit(f"cache={path}\n")
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    checks = verify_mod.run_suite(args.suite)
    _emit(verify_mod.render_report(checks))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_VERIFY


def cmd_arms(args, cfg: Config) -> int:
    group = arms_mod.parse_group(args.group)
    max_n = args.n or cfg.max_n
    table = _table_for(cfg, max_n)
    seed_bound = args.seed_bound or cfg.seed_bound(max_n)
    found = arms_mod.enumerate_arms(table, group, max_n, seed_bound=seed_bound)
    report = arms_mod.classify_systems(found, group, max_n)
    fmt = args.format or cfg.output
    _emit(arms_mod.report_json(report) if fmt == "json"
          else arms_mod.report_csv(report))
    return EXIT_OK


def _emit_series(series, args, cfg: Config) -> None:
    fmt = args.format or cfg.output
    _emit(series.summary_json() if fmt == "json" else series.to_csv())
    if args.figure:
        from .svg import render_report_figure
        with open(args.figure, "w", encoding="utf-8") as fh:
            fh.write(render_report_figure(series))


def cmd_areas(args, cfg: Config) -> int:
    if args.bands is not None:
        series = square_band_ratio_series(args.bands)
    elif args.square_angles is not None:
        table = _table_for(cfg, (args.square_angles + 1) ** 2)
        series = square_angle_series(table, args.square_angles)
    elif args.same_arm is not None:
        table = _table_for(cfg, (args.same_arm + 3) ** 2)
        series = same_arm_angle_series(table, args.same_arm)
    elif args.winding_distances is not None:
        from .constants import constants_report
        max_n = args.winding_distances
        if max_n < 1000:
            raise ValueError("--winding-distances needs MAX_N >= 1000")
        table = _table_for(cfg, max_n)
        report = constants_report(table, [max_n // 512, max_n // 64,
                                          max_n // 8, max_n],
                                  probes=range(1, max_n))
        _emit(report.winding_table_csv())
        return EXIT_OK
    else:
        table = _table_for(cfg, max(400, 12 * args.crossings ** 2))
        report = axis_crossings(table, args.crossings)
        doc = {"crossings": list(report.crossings), "poly": str(report.poly),
               "second_diffs": list(report.second_diffs),
               "angles_deg": [round(a, 8) for a in report.angles_deg],
               "notes": report.notes()}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    _emit_series(series, args, cfg)
    return EXIT_OK


def cmd_fib(args, cfg: Config) -> int:
    fmt = args.format or cfg.output
    if args.angles:
        from .series import fibonacci_numbers
        top = fibonacci_numbers(args.count + 1)[-1]
        table = _table_for(cfg, top)
        fib = fib_angle_series(table, args.count)
        if fmt == "json":
            _emit(fib.alphas_deg.summary_json())
            _emit(fib.step_ratios.summary_json())
            _emit(fib.cumulative_ratios.summary_json())
        else:
            _emit(fib.alphas_deg.to_csv())
        if args.figure:
            from .svg import render_report_figure
            with open(args.figure, "w", encoding="utf-8") as fh:
                fh.write(render_report_figure(fib.alphas_deg))
    else:
        _emit_series(fib_area_ratio_series(args.count), args, cfg)
    return EXIT_OK


def cmd_primes(args, cfg: Config) -> int:
    if args.scan_d is not None:
        rows = primes_mod.scan_prime_polys(args.scan_d,
                                           range(args.c_min, args.c_max + 1),
                                           args.t)
        _emit(primes_mod.scan_csv(rows))
    else:
        max_n = args.n or cfg.max_n
        table = _table_for(cfg, max_n)
        arms = primes_mod.prime_arm_report(
            table, max_n, density_threshold=cfg.prime_density_threshold)
        lines = ["a,b_hat,c,len,prime_count,density,coprime6,members"]
        for a in arms:
            lines.append(f"{a.poly.a},{a.poly.b},{a.poly.c},{len(a.members)},"
                         f"{a.prime_count},{a.density:.4f},"
                         f"{str(a.coprime6).lower()},"
                         + " ".join(str(m) for m in a.members))
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_render(args, cfg: Config) -> int:
    max_n = args.n or cfg.max_n
    table = _table_for(cfg, max_n)
    style = dict()
    if args.style:
        with open(args.style, encoding="utf-8") as fh:
            style = parse_style(fh.read())
    groups = tuple(GroupStyle(group=arms_mod.parse_group(spec))
                   for spec in args.group)
    overlays = []
    if args.arms:
        for gs in groups:
            overlays.extend(arms_mod.enumerate_arms(
                table, gs.group, max_n, seed_bound=cfg.seed_bound(max_n)))
    spec_kwargs = dict(max_n=max_n, groups=groups, arm_overlays=tuple(overlays),
                       mirror=args.mirror or cfg.mirror)
    if style:
        spec_kwargs["style"] = style
    doc = render_svg(table, RenderSpec(**spec_kwargs))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(doc)
    _emit(f"wrote {args.out}\n")
    return EXIT_OK


_COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "arms": cmd_arms,
    "areas": cmd_areas,
    "fib": cmd_fib,
    "primes": cmd_primes,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = load_config(args.config)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, cfg)
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
