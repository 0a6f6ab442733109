"""FASTA input and plot serialization (TSV, binary PGM, dot list)."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Optional, TextIO

import numpy as np

from .model import PlotGrid, Sequence

TSV_HEADER = "# x_offset y_offset score\n"
DOTS_HEADER = "# x_offset y_offset\n"


class FastaError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class FastaRecord:
    header: str
    sequence: str

    @property
    def name(self) -> str:
        return self.header.split(maxsplit=1)[0] if self.header.strip() else ""

    def to_sequence(self) -> Sequence:
        return Sequence.from_text(self.sequence, name=self.name or self.header)


def parse_fasta(lines: Iterable[str]) -> list[FastaRecord]:
    records: list[FastaRecord] = []
    header: Optional[str] = None
    header_line = 0
    chunks: list[str] = []

    def close():
        if header is not None:
            if not chunks:
                raise FastaError(f"record {header!r} has no sequence", header_line)
            records.append(FastaRecord(header, "".join(chunks)))

    lineno = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            close()
            header, header_line, chunks = line[1:].strip(), lineno, []
            continue
        if header is None:
            raise FastaError("sequence data before the first '>' header", lineno)
        seq = "".join(line.split()).upper()
        bad = next((c for c in seq if not c.isprintable() or c == ">" or ord(c) > 126), None)
        if bad is not None:
            raise FastaError(f"invalid sequence character {bad!r}", lineno)
        chunks.append(seq)
    close()
    if not records:
        raise FastaError("no FASTA records found" if lineno else "empty FASTA input", lineno or None)
    return records


def read_fasta(path: str | os.PathLike) -> list[FastaRecord]:
    with open(path, encoding="ascii", errors="strict") as fh:
        try:
            return parse_fasta(fh)
        except UnicodeDecodeError as exc:
            raise FastaError(f"non-ASCII data in {os.fspath(path)}: {exc.reason}") from None


def select_record(records: list[FastaRecord], name: str | None) -> FastaRecord:
    if name is None:
        return records[0]
    for rec in records:
        if name in (rec.header, rec.name):
            return rec
    raise FastaError(f"no record named {name!r}")


def _score_text(v: int) -> str:
    return f"{v / 2:.1f}"


def _selected(grid: PlotGrid, threshold: int | None, dense: bool) -> tuple[np.ndarray, np.ndarray]:
    if dense or threshold is None:
        rows, cols = np.indices(grid.values.shape)
        return rows.ravel(), cols.ravel()
    return np.nonzero(grid.values >= threshold)


def write_tsv(grid: PlotGrid, sink: TextIO, threshold: int | None = None, dense: bool = False):
    """Tab-separated cells: x window start, y window start, score with one decimal."""
    sink.write(TSV_HEADER)
    rows, cols = _selected(grid, threshold, dense)
    if rows.size == 0:
        return
    lo, hi = int(grid.values.min()), int(grid.values.max())
    text = {v: _score_text(v) for v in range(lo, hi + 1)}
    xs = grid.row_origin + rows * grid.step
    ys = grid.col_origin + cols
    vals = grid.values[rows, cols]
    sink.writelines(f"{x}\t{y}\t{text[v]}\n" for x, y, v in zip(xs.tolist(), ys.tolist(), vals.tolist()))


def write_dots(grid: PlotGrid, sink: TextIO, threshold: int | None = None):
    """Window starts of the cells at or above the threshold, one pair per line."""
    sink.write(DOTS_HEADER)
    rows, cols = _selected(grid, threshold, False)
    xs = grid.row_origin + rows * grid.step
    ys = grid.col_origin + cols
    sink.writelines(f"{x}\t{y}\n" for x, y in zip(xs.tolist(), ys.tolist()))


def pgm_pixels(grid: PlotGrid, threshold: int | None = None) -> np.ndarray:
    """round(255 * clamp(score, 0, w) / w), rounding halves up; below-threshold cells are 0."""
    full = 2 * grid.window
    c = np.clip(grid.values.astype(np.int64), 0, full)
    px = (510 * c + full) // (2 * full)
    if threshold is not None:
        px[grid.values < threshold] = 0
    return px.astype(np.uint8)


def write_pgm(grid: PlotGrid, sink: BinaryIO, threshold: int | None = None):
    sink.write(f"P5\n{grid.cols} {grid.rows}\n255\n".encode("ascii"))
    sink.write(pgm_pixels(grid, threshold).tobytes())
