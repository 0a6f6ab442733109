"""Scalar seaweed combing over one strip (an x-window against all of y).

Seaweeds are identified by their start column. Top-boundary seaweeds start at
columns ``0 .. n-1``; the seaweed entering row ``i`` from the left boundary gets
start ``-(i + 1)``, so deeper rows lie further left. Ends on the bottom boundary
are columns ``0 .. n-1``; the seaweed leaving row ``i`` on the right boundary gets
end ``n + (w - 1 - i)``, continuing the bottom row around the corner.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from typing import Iterator, NamedTuple

import numba
import numpy as np

from .model import PlotConfig, PlotGrid, Sequence
from .scoring import blow_codes


class BottomEvent(NamedTuple):
    end_col: int
    start_col: int

    @property
    def span(self) -> int:
        return self.end_col - self.start_col


@dataclass(frozen=True, eq=False)
class ImplicitHSM:
    """Critical points ``(start, end)`` of one strip, one per seaweed (``w + n`` total)."""
    strip_width: int
    strip_height: int
    critical_points: np.ndarray

    @property
    def bottom_points(self) -> np.ndarray:
        cp = self.critical_points
        return cp[cp[:, 1] < self.strip_width]


class CellVisit(NamedTuple):
    row: int
    col: int
    top: int
    left: int
    exchanged: bool


def comb_cells(xw, y) -> Iterator[CellVisit]:
    """Row-major pure-Python combing that reports every cell decision.

    This is the readable reference for the cell rule; the compiled kernel must agree with it.
    """
    w, n = len(xw), len(y)
    front = list(range(n))
    for i in range(w):
        runner = -(i + 1)
        for j in range(n):
            top = front[j]
            exchanged = xw[i] == y[j] or runner > top
            yield CellVisit(i, j, top, runner, exchanged)
            if exchanged:
                front[j], runner = runner, top


@numba.njit(nogil=True, cache=True)
def _comb(xw, y):
    w = xw.shape[0]
    n = y.shape[0]
    front = np.arange(n).astype(np.int64)
    right = np.empty(w, np.int64)
    for i in range(w):
        runner = -(i + 1)
        c = xw[i]
        for j in range(n):
            top = front[j]
            if c == y[j] or runner > top:
                front[j] = runner
                runner = top
        right[i] = runner
    return front, right


@numba.njit(nogil=True, cache=True, inline="always")
def _heap_push(heap, size, key):
    i = size
    while i > 0:
        parent = (i - 1) >> 1
        if heap[parent] <= key:
            break
        heap[i] = heap[parent]
        i = parent
    heap[i] = key
    return size + 1


@numba.njit(nogil=True, cache=True, inline="always")
def _heap_pop(heap, size):
    size -= 1
    key = heap[size]
    i = 0
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        if c + 1 < size and heap[c + 1] < heap[c]:
            c += 1
        if heap[c] >= key:
            break
        heap[i] = heap[c]
        i = c
    heap[i] = key
    return size


@numba.njit(nogil=True, cache=True)
def _window_llcs(starts, unit, win_units, win_cols):
    """Sliding-window seaweed count over bottom events in column order.

    ``starts[e]`` is the start (in units of ``unit`` columns) of the seaweed that left
    the strip at column ``e``; a negative value marks a seaweed that is never counted.
    Window ``k`` covers units ``k .. k + win_units - 1``; its LLCS is ``win_cols`` minus
    the number of seaweeds that both start and end inside it. Starts live in an
    array-backed min-heap; the minimum is dropped while it precedes the window.
    """
    n = starts.shape[0]
    n_windows = n // unit - win_units + 1
    out = np.empty(max(n_windows, 0), np.int64)
    heap = np.empty(n, np.int64)
    size = 0
    for e in range(n):
        size = _heap_push(heap, size, starts[e])
        if (e + 1) % unit != 0:
            continue
        k = e // unit - win_units + 1
        if k < 0:
            continue
        while size > 0 and heap[0] < k:
            size = _heap_pop(heap, size)
        out[k] = win_cols - size
    return out


def _codes(s) -> np.ndarray:
    if isinstance(s, Sequence):
        return s.data
    if isinstance(s, (str, bytes)):
        return Sequence.from_text(s).data
    return np.ascontiguousarray(s, dtype=np.uint8)


def comb_strip(xw, y) -> tuple[ImplicitHSM, list[BottomEvent]]:
    xc, yc = _codes(xw), _codes(y)
    if xc.size < 1 or yc.size < 1:
        raise ValueError("strip needs at least one row and one column")
    w, n = xc.size, yc.size
    bottom, right = _comb(xc, yc)
    ends = np.concatenate([np.arange(n), n + (w - 1 - np.arange(w))])
    points = np.column_stack([np.concatenate([bottom, right]), ends])
    events = [BottomEvent(e, int(s)) for e, s in enumerate(bottom)]
    return ImplicitHSM(n, w, points), events


def llcs_query(hsm: ImplicitHSM, i: int, j: int) -> int:
    """LLCS of the strip's x-window against ``y[i:j]``."""
    if not 0 <= i <= j <= hsm.strip_width:
        raise IndexError(f"query ({i}, {j}) outside [0, {hsm.strip_width}]")
    return semi_local_value(hsm, i, j)


def semi_local_value(hsm: ImplicitHSM, i: int, j: int) -> int:
    """Highest-score matrix entry over the extended range ``-w <= i <= j <= n + w``.

    Outside ``[0, n]`` the y-substring is padded with wildcards that match anything.
    """
    cp = hsm.critical_points
    inside = np.count_nonzero((cp[:, 0] >= i) & (cp[:, 1] < j))
    return j - i - int(inside)


@numba.njit(nogil=True, cache=True)
def _query_all(bottom):
    """``A[i, j] = j - i - #{e < j : bottom[e] >= i}`` for all ``0 <= i <= j <= n``."""
    n = bottom.shape[0]
    a = np.zeros((n + 1, n + 1), np.int64)
    for i in range(n + 1):
        inside = 0
        for j in range(i + 1, n + 1):
            if bottom[j - 1] >= i:
                inside += 1
            a[i, j] = j - i - inside
    return a


def query_matrix(hsm: ImplicitHSM) -> np.ndarray:
    """All ``llcs_query`` values at once; entries with ``i > j`` are zero."""
    bottom = np.full(hsm.strip_width, -1, np.int64)
    pts = hsm.bottom_points
    bottom[pts[:, 1]] = pts[:, 0]
    return _query_all(bottom)


def wlcs_row(events, w: int, n: int) -> np.ndarray:
    """LLCS of the strip's x-window against every w-window of y, via a min-heap of starts."""
    if len(events) != n:
        raise ValueError(f"expected {n} bottom events, got {len(events)}")
    starts = np.empty(n, np.int64)
    for k, ev in enumerate(events):
        if ev.end_col != k:
            raise ValueError(f"bottom event stream is missing column {k}")
        starts[k] = ev.start_col
    return _window_llcs(starts, 1, w, w)


def wlcs_row_reference(events, w: int) -> list[int]:
    """Plain heapq version of :func:`wlcs_row`, kept for cross-checking the compiled one."""
    heap: list[int] = []
    out = []
    for ev in events:
        heapq.heappush(heap, ev.start_col)
        k = ev.end_col - w + 1
        if k < 0:
            continue
        while heap and heap[0] < k:
            heapq.heappop(heap)
        out.append(w - len(heap))
    return out


@numba.njit(nogil=True, cache=True)
def scalar_row(xw, y, w, r):
    """Half-unit scores of one x-window (already blown when ``r == 2``) against y."""
    bottom, _ = _comb(xw, y)
    llcs = _window_llcs(bottom, 1, r * w, r * w)
    if r == 1:
        return 2 * llcs
    return 2 * llcs[::r] - 2 * w


def plot_scalar(x: Sequence, y: Sequence, cfg: PlotConfig) -> PlotGrid:
    from .runner import compute_plot
    return compute_plot(x, y, replace(cfg, mode="sea_scalar"))


def strip_inputs(x: Sequence, y: Sequence, cfg: PlotConfig):
    """Raw or blown code arrays for x and y as the engines consume them."""
    if cfg.blowup_r == 2:
        return blow_codes(x.data), blow_codes(y.data)
    return x.data, y.data


__all__ = [
    "BottomEvent", "ImplicitHSM", "CellVisit", "comb_cells", "comb_strip", "llcs_query",
    "semi_local_value", "query_matrix", "wlcs_row", "wlcs_row_reference", "scalar_row", "plot_scalar",
]
