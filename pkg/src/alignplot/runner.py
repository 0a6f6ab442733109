"""Strip decomposition and multi-worker plot computation.

Each grid row is one strip (an x-window against all of y). Strips share no state, so
rows are handed out round-robin and written once into a preallocated grid.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .baselines import blcs_row, dp_row
from .lanes import check_lane_capacity, lane_row, lane_template
from .model import PlotConfig, PlotGrid, Sequence
from .seaweed import scalar_row, strip_inputs

log = logging.getLogger(__name__)

RowFn = Callable[[np.ndarray, np.ndarray, int, int], np.ndarray]


@dataclass(frozen=True)
class StripTask:
    row_index: int
    x_offset: int
    engine: str
    worker: int


def plan_strips(cfg: PlotConfig, m: int, n: int | None = None) -> list[StripTask]:
    """One task per grid row, in row order, assigned to workers round-robin."""
    rows, _ = cfg.grid_dims(m, m if n is None else n)
    return [StripTask(i, i * cfg.step_h, cfg.mode, i % cfg.workers) for i in range(rows)]


def _lane_engine(bits: int) -> RowFn:
    def run(xb, yb, w, r):
        unit = r if bits == 8 else 1
        return lane_row(xb, yb, w, r, unit, lane_template(xb.size, bits))
    return run


ENGINES: dict[str, RowFn] = {
    "dp": dp_row,
    "blcs": blcs_row,
    "sea_scalar": scalar_row,
    "sea16": _lane_engine(16),
    "sea8": _lane_engine(8),
}


def _check_engine(cfg: PlotConfig):
    if cfg.mode == "sea8":
        check_lane_capacity(cfg.window_w, 8)
    elif cfg.mode == "sea16":
        check_lane_capacity(cfg.window_w * cfg.blowup_r, 16)


def compute_plot(x: Sequence, y: Sequence, cfg: PlotConfig) -> PlotGrid:
    tasks = plan_strips(cfg, len(x), len(y))
    rows, cols = cfg.grid_dims(len(x), len(y))
    _check_engine(cfg)
    xb, yb = strip_inputs(x, y, cfg)
    w, r = cfg.window_w, cfg.blowup_r
    engine = ENGINES[cfg.mode]
    values = np.empty((rows, cols), np.int32)

    def work(mine: list[StripTask]):
        for task in mine:
            xw = xb[task.x_offset * r:(task.x_offset + w) * r]
            values[task.row_index] = engine(xw, yb, w, r)

    by_worker = [[t for t in tasks if t.worker == k] for k in range(cfg.workers)]
    if cfg.workers == 1:
        work(by_worker[0])
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            for fut in [pool.submit(work, mine) for mine in by_worker]:
                fut.result()
    log.debug("computed %dx%d plot with %s on %d workers", rows, cols, cfg.mode, cfg.workers)
    return PlotGrid(values, w, cfg.step_h)
