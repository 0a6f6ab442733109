"""Mode-comparison benchmark: time each engine on the same input, after checking they agree."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .model import MODES, PlotConfig, PlotGrid, Sequence
from .runner import compute_plot

# DP is the baseline; no early-termination heuristic is implemented.
LABELS = {
    "dp": "DP (per-pair dynamic programming)",
    "blcs": "BLCS (bit-parallel LCS)",
    "sea_scalar": "Seaweed, scalar",
    "sea16": "Seaweed, 16-bit lanes",
    "sea8": "Seaweed, 8-bit lanes",
}


class BenchmarkMismatch(RuntimeError):
    pass


@dataclass
class ModeTiming:
    mode: str
    seconds: float
    cell_updates: int
    cell_updates_per_s: float
    window_pairs_per_s: float
    speedup: float


@dataclass
class BenchReport:
    m: int
    n: int
    window: int
    step: int
    blowup: int
    workers: int
    rows: int
    cols: int
    timings: list[ModeTiming] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def table(self) -> str:
        lines = [
            f"{self.m} x {self.n}, window {self.window}, step {self.step}, "
            f"blowup {self.blowup}, {self.workers} worker(s), grid {self.rows} x {self.cols}",
            f"{'mode':<36}{'seconds':>10}{'cells/s':>12}{'speedup':>9}",
        ]
        for t in self.timings:
            lines.append(f"{LABELS.get(t.mode, t.mode):<36}{t.seconds:>10.3f}"
                         f"{t.cell_updates_per_s:>12.3g}{t.speedup:>9.2f}")
        return "\n".join(lines)


def cell_updates(mode: str, rows: int, cols: int, n: int, cfg: PlotConfig) -> int:
    """Alignment-dag cells each engine touches: a full table per pair, or one strip per row."""
    wl = cfg.window_w * cfg.blowup_r
    if mode in ("dp", "blcs"):
        return rows * cols * wl * wl
    return rows * wl * n * cfg.blowup_r


def warm_up(modes, cfg: PlotConfig):
    """Trigger JIT compilation outside the timed region."""
    tiny = Sequence.from_text("ACGTACGTAC")
    small = replace(cfg, window_w=4, step_h=1, workers=1)
    for mode in modes:
        compute_plot(tiny, tiny, replace(small, mode=mode))


def benchmark(x: Sequence, y: Sequence, cfg: PlotConfig, modes=MODES, repeat: int = 1) -> BenchReport:
    modes = list(modes)
    unknown = [m for m in modes if m not in MODES]
    if not modes or unknown:
        raise ValueError(f"modes must be a non-empty subset of {MODES}, got {modes}")
    warm_up(modes, cfg)
    rows, cols = cfg.grid_dims(len(x), len(y))
    report = BenchReport(len(x), len(y), cfg.window_w, cfg.step_h, cfg.blowup_r, cfg.workers,
                         rows, cols)
    reference: PlotGrid | None = None
    base = None
    for mode in modes:
        run_cfg = replace(cfg, mode=mode)
        best = np.inf
        for _ in range(repeat):
            t0 = time.perf_counter()
            grid = compute_plot(x, y, run_cfg)
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = grid
        elif grid != reference:
            bad = int(np.count_nonzero(grid.values != reference.values))
            raise BenchmarkMismatch(f"{mode} disagrees with {modes[0]} on {bad} cells")
        base = best if base is None else base
        work = cell_updates(mode, rows, cols, len(y), cfg)
        report.timings.append(ModeTiming(mode, best, work, work / best, rows * cols / best, base / best))
    return report
