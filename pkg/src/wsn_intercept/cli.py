"""Command-line front end.

Exit codes: 0 success, 2 usage or configuration error, 3 numeric failure
(including physically invalid parameters such as a shape factor < 0.5).
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .config import ConfigError, load_config
from .errors import AccuracyError, DomainError
from .sweep import FIGURES, SLOPE_COLUMNS, rows_to_csv, run_figure, run_slope, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_analyze(args):
    config = load_config(args.config)
    _write(rows_to_csv(run_sweep(config, args.workers)), args.out)


def _cmd_simulate(args):
    config = load_config(args.config)
    sweep = dataclasses.replace(config.sweep, methods=("mc",), mc_trials=args.trials,
                                mc_seed=args.seed)
    config = dataclasses.replace(config, sweep=sweep)
    _write(rows_to_csv(run_sweep(config, args.workers)), args.out)


def _cmd_figure(args):
    _write(rows_to_csv(run_figure(args.preset, args.workers)), args.out)


def _cmd_slope(args):
    config = load_config(args.config)
    _write(rows_to_csv(run_slope(config), SLOPE_COLUMNS), args.out)


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsn-intercept",
        description="Intercept probability of scheduled sensor transmissions under Nakagami fading.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="evaluate a configured sweep and emit CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("simulate", help="Monte Carlo estimates for a configured sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("figure", help="emit the data grid of a figure preset")
    p.add_argument("preset", choices=sorted(FIGURES))
    p.add_argument("--out")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("slope", help="fitted vs theoretical diversity orders")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_slope)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    source = getattr(args, "config", None) or "config"
    try:
        args.func(args)
    except ConfigError as exc:
        where = f"{source}:{exc.line}" if exc.line else source
        print(f"{where}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, AccuracyError, ArithmeticError) as exc:
        print(f"{source}: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
