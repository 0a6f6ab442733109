"""Reduction of the (1, 0, -1/2) alignment score to LCS on sentinel-interleaved strings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import SENTINEL, PlotGrid, Sequence


@dataclass(frozen=True, eq=False)
class BlownSequence:
    data: np.ndarray
    raw_len: int

    def __len__(self) -> int:
        return int(self.data.size)

    def __eq__(self, other):
        if not isinstance(other, BlownSequence):
            return NotImplemented
        return self.raw_len == other.raw_len and np.array_equal(self.data, other.data)

    def unblow(self) -> np.ndarray:
        return self.data[1::2].copy()


def blow_codes(codes: np.ndarray) -> np.ndarray:
    """Interleave the sentinel before every code: ``abab -> $a$b$a$b``."""
    codes = np.asarray(codes, dtype=np.uint8)
    if (codes == SENTINEL).any():
        raise ValueError("input already contains the sentinel code")
    out = np.zeros(2 * codes.size, dtype=np.uint8)
    out[1::2] = codes
    return out


def blowup(s: Sequence) -> BlownSequence:
    return BlownSequence(blow_codes(s.data), len(s))


def recover_score(llcs_blown: int, m: int, n: int) -> int:
    """Alignment score in half-units from the LLCS of the blown strings."""
    return 2 * llcs_blown - (m + n)


def apply_threshold(grid: PlotGrid, t: int) -> list[tuple[int, int, int]]:
    """Cells with half-unit score ``>= t`` as ``(row, col, value)`` in row-major order."""
    rows, cols = np.nonzero(grid.values >= t)
    vals = grid.values[rows, cols]
    return [(int(r), int(c), int(v)) for r, c, v in zip(rows, cols, vals)]
