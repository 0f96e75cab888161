"""``rsfactors`` command line: run verification pipelines and write reports."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .config import ConfigError, RawConfig, load_config
from .pipelines import PIPELINES, InternalInvariantError, run_pipeline
from .report import Report

EXIT_PASS, EXIT_CONFIG, EXIT_FAIL, EXIT_INTERNAL = 0, 2, 3, 4


def _u64(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsfactors", description=__doc__)
    parser.add_argument("--version", action="version", version=f"rsfactors {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification pipeline")
    v.add_argument("pipeline", help="pipeline name (see list-pipelines)")
    v.add_argument("--config", type=Path, help="run configuration file (defaults apply when omitted)")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    v.add_argument("--seed", type=_u64, help="override the configured seed")
    v.add_argument("--trunc", type=_nonneg, help="override the truncation degree D")
    v.add_argument("--timing", action="store_true", help="record wall-clock duration in the summary")

    sub.add_parser("list-pipelines", help="show available pipelines")
    return parser


def _emit(report: Report, out: Path | None) -> None:
    text = report.render()
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        for line in report.footer():
            print(line, file=sys.stderr)


def verify(args) -> int:
    try:
        raw = load_config(args.config) if args.config else RawConfig(source="<defaults>")
        start = time.perf_counter()
        try:
            report = run_pipeline(args.pipeline, raw, seed=args.seed, trunc=args.trunc)
        except InternalInvariantError as exc:
            report = exc.report or Report(args.pipeline, {}, args.seed or 0, internal_error=str(exc))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.timing:
        report.duration_s = time.perf_counter() - start
    _emit(report, args.out)
    if report.internal_error:
        return EXIT_INTERNAL
    return EXIT_PASS if report.overall == "pass" else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list-pipelines":
        for name, (_, summary) in PIPELINES.items():
            print(f"{name:14s} {summary}")
        return EXIT_PASS
    return verify(args)


if __name__ == "__main__":
    sys.exit(main())
