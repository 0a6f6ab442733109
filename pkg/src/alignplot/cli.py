"""Command line: ``alignplot --x A.fa --y B.fa [options]``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from fractions import Fraction

from .bench import benchmark
from .io import FastaError, read_fasta, select_record, write_dots, write_pgm, write_tsv
from .model import MODES, ConfigError, PlotConfig
from .runner import compute_plot


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="alignplot",
        description="Alignment plot: score of every pair of w-windows between two sequences.")
    p.add_argument("--x", required=True, metavar="FILE", help="FASTA file for the row sequence")
    p.add_argument("--y", required=True, metavar="FILE", help="FASTA file for the column sequence")
    p.add_argument("--record", metavar="NAME", help="record to use from each file (default: first)")
    p.add_argument("--window", type=_positive, default=100, metavar="W")
    p.add_argument("--step", type=_positive, default=5, metavar="H", help="stride over x-windows")
    p.add_argument("--mode", choices=MODES, default="sea8")
    p.add_argument("--threshold", type=_fraction, metavar="T",
                   help="keep window pairs scoring at least T")
    p.add_argument("--workers", type=_positive, default=os.cpu_count() or 1, metavar="K")
    p.add_argument("--output", metavar="PATH", help="output file (default: stdout)")
    p.add_argument("--format", choices=("tsv", "pgm", "dots"), default="tsv")
    p.add_argument("--dense", action="store_true", help="write every cell to TSV, ignoring --threshold")
    p.add_argument("--lcs-only", action="store_true",
                   help="plain LCS scores instead of match 1 / mismatch 0 / gap -1/2")
    p.add_argument("--bench", action="store_true",
                   help="time the modes in --bench-modes on the inputs instead of writing a plot")
    p.add_argument("--bench-modes", default=",".join(MODES), metavar="M1,M2,...")
    p.add_argument("--json", action="store_true", help="benchmark report as JSON")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


@contextmanager
def _sink(path: str | None, binary: bool):
    if path is None:
        yield sys.stdout.buffer if binary else sys.stdout
        return
    with open(path, "wb" if binary else "w", newline=None if binary else "\n") as fh:
        yield fh


def run(args: argparse.Namespace) -> int:
    x = select_record(read_fasta(args.x), args.record).to_sequence()
    y = select_record(read_fasta(args.y), args.record).to_sequence()
    cfg = PlotConfig(window_w=args.window, step_h=args.step, blowup_r=1 if args.lcs_only else 2,
                     threshold=args.threshold, mode=args.mode, workers=args.workers)
    cfg.grid_dims(len(x), len(y))

    if args.bench:
        modes = [m.strip() for m in args.bench_modes.split(",") if m.strip()]
        report = benchmark(x, y, cfg, modes)
        with _sink(args.output, binary=False) as out:
            out.write((report.to_json() if args.json else report.table()) + "\n")
        return 0

    grid = compute_plot(x, y, cfg)
    t = cfg.threshold_half
    if args.format == "pgm":
        with _sink(args.output, binary=True) as out:
            write_pgm(grid, out, t)
    else:
        with _sink(args.output, binary=False) as out:
            if args.format == "tsv":
                write_tsv(grid, out, t, dense=args.dense)
            else:
                write_dots(grid, out, t)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return run(args)
    except (FastaError, ConfigError, OSError, ValueError, RuntimeError) as exc:
        print(f"alignplot: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
