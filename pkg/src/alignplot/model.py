"""Core data types shared by the engines: sequences, plot configuration, plot grids."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

SENTINEL = 0
MODES = ("dp", "blcs", "sea_scalar", "sea16", "sea8")

# Largest raw window an 8-bit lane can serve: window span values plus INF must fit in a byte.
SEA8_MAX_WINDOW = 254


class ConfigError(ValueError):
    """Raised for plot configurations that cannot be served by the chosen engine."""


class EmptyPlotError(ConfigError):
    """Raised when no window fits into one of the inputs."""


@dataclass(frozen=True, eq=False)
class Sequence:
    name: str
    data: np.ndarray
    alphabet_size: int = 256

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.uint8)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        if data.size:
            if int(data.max()) >= self.alphabet_size:
                raise ValueError(f"{self.name}: code out of alphabet range")
            if (data == SENTINEL).any():
                raise ValueError(f"{self.name}: raw sequence contains the sentinel code")

    @classmethod
    def from_text(cls, text: str | bytes, name: str = "seq") -> "Sequence":
        if isinstance(text, str):
            text = text.encode("ascii")
        return cls(name, np.frombuffer(text.upper(), dtype=np.uint8))

    def __len__(self) -> int:
        return int(self.data.size)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.name == other.name and np.array_equal(self.data, other.data)

    def text(self) -> str:
        return self.data.tobytes().decode("latin-1")

    def window(self, start: int, length: int) -> "Sequence":
        return Sequence(f"{self.name}[{start}:{start + length}]",
                        self.data[start:start + length], self.alphabet_size)


@dataclass(frozen=True)
class ScoringScheme:
    match: Fraction
    mismatch: Fraction
    gap: Fraction

    @classmethod
    def for_blowup(cls, r: int) -> "ScoringScheme":
        if r == 1:
            return cls(Fraction(1), Fraction(0), Fraction(0))
        if r == 2:
            return cls(Fraction(1), Fraction(0), Fraction(-1, 2))
        raise ConfigError(f"blowup factor must be 1 or 2, got {r}")


def window_grid_dims(m: int, n: int, w: int, h: int) -> tuple[int, int]:
    """Number of sampled x-windows (stride ``h``) and y-windows (stride 1)."""
    if w < 1 or h < 1:
        raise ConfigError("window and step must be positive")
    if w > min(m, n):
        raise EmptyPlotError(f"window {w} does not fit inputs of length {m} and {n}")
    return (m - w) // h + 1, n - w + 1


@dataclass(frozen=True)
class PlotConfig:
    window_w: int = 100
    step_h: int = 5
    blowup_r: int = 2
    threshold: Optional[Fraction] = None
    mode: str = "sea8"
    workers: int = 1

    def __post_init__(self):
        if self.window_w < 1:
            raise ConfigError("window must be positive")
        if self.step_h < 1:
            raise ConfigError("step must be positive")
        if self.blowup_r not in (1, 2):
            raise ConfigError(f"blowup factor must be 1 or 2, got {self.blowup_r}")
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        if self.mode == "sea8" and self.window_w > SEA8_MAX_WINDOW:
            raise ConfigError(
                f"window {self.window_w} overflows 8-bit lanes (max {SEA8_MAX_WINDOW}); use sea16")
        if self.threshold is not None:
            object.__setattr__(self, "threshold", Fraction(self.threshold))

    @property
    def scoring(self) -> ScoringScheme:
        return ScoringScheme.for_blowup(self.blowup_r)

    @property
    def threshold_half(self) -> Optional[int]:
        """Threshold in half-units, rounded up so that ``value >= t`` is preserved."""
        if self.threshold is None:
            return None
        t = self.threshold * 2
        return -((-t.numerator) // t.denominator)

    def grid_dims(self, m: int, n: int) -> tuple[int, int]:
        return window_grid_dims(m, n, self.window_w, self.step_h)


@dataclass(eq=False)
class PlotGrid:
    """Window-pair scores in half-units (score * 2).

    Row ``i`` is the x-window starting at ``row_origin + i * step``; column ``j`` is
    the y-window starting at ``col_origin + j``.
    """
    values: np.ndarray
    window: int
    step: int = 1
    row_origin: int = 0
    col_origin: int = 0

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    def x_offset(self, row: int) -> int:
        return self.row_origin + row * self.step

    def y_offset(self, col: int) -> int:
        return self.col_origin + col

    def scores(self) -> np.ndarray:
        return self.values / 2.0

    def __eq__(self, other):
        if not isinstance(other, PlotGrid):
            return NotImplemented
        return (self.window == other.window and self.step == other.step
                and self.row_origin == other.row_origin and self.col_origin == other.col_origin
                and self.values.shape == other.values.shape
                and np.array_equal(self.values, other.values))
