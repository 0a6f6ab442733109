"""Antidiagonal seaweed combing on fixed-width saturating unsigned lanes.

Lane ``i`` holds row ``i`` of the strip. At sweep step ``t`` lane ``i`` is at column
``t - i``; ``V`` carries the seaweeds entering cells from the left and ``W`` those
entering from the top. Seaweeds are identified by the distance between their start
and the current column (in units of ``unit`` columns), so a larger value means an
earlier start. All-ones (``INF``) marks a seaweed that can no longer be counted in any
window; left-boundary seaweeds are born at ``INF``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .model import SEA8_MAX_WINDOW, ConfigError
from .seaweed import _window_llcs

_DTYPES = {8: np.uint8, 16: np.uint16}


def lane_dtype(bits: int):
    try:
        return _DTYPES[bits]
    except KeyError:
        raise ConfigError(f"lane width must be 8 or 16 bits, got {bits}") from None


def lane_inf(bits: int) -> int:
    return (1 << bits) - 1


@dataclass(frozen=True, eq=False)
class LaneVector:
    lanes: np.ndarray
    bits: int

    def __post_init__(self):
        lanes = np.asarray(self.lanes)
        if lanes.dtype != lane_dtype(self.bits):
            lanes = lanes.astype(lane_dtype(self.bits))
        object.__setattr__(self, "lanes", lanes)

    @classmethod
    def of(cls, values, bits: int = 16) -> "LaneVector":
        return cls(np.asarray(values, dtype=lane_dtype(bits)), bits)

    @property
    def inf(self) -> int:
        return lane_inf(self.bits)

    def __len__(self) -> int:
        return self.lanes.size

    def __eq__(self, other):
        if not isinstance(other, LaneVector):
            return NotImplemented
        return self.bits == other.bits and np.array_equal(self.lanes, other.lanes)

    def tolist(self) -> list[int]:
        return self.lanes.tolist()


# In-place lane primitives behind the public wrappers. The sweep fuses the same
# primitives into one pass per antidiagonal (see _step).

@numba.njit(nogil=True, cache=True, inline="always")
def _sat_inc(v, inf, out):
    for k in range(v.shape[0]):
        a = v[k]
        out[k] = a + 1 if a != inf else a


@numba.njit(nogil=True, cache=True, inline="always")
def _eq_mask(v, w, inf, out):
    for k in range(v.shape[0]):
        out[k] = inf if v[k] == w[k] else 0


@numba.njit(nogil=True, cache=True, inline="always")
def _cmp_xchg(v, w, lo, hi):
    for k in range(v.shape[0]):
        a = v[k]
        b = w[k]
        lo[k] = a if a < b else b
        hi[k] = b if a < b else a


@numba.njit(nogil=True, cache=True, inline="always")
def _select(m, v, w, out):
    for k in range(v.shape[0]):
        out[k] = v[k] if m[k] != 0 else w[k]


def _check_pair(a: LaneVector, b: LaneVector):
    if len(a) != len(b) or a.bits != b.bits:
        raise ValueError("lane vectors differ in lane count or width")


def sat_increment(v: LaneVector) -> LaneVector:
    out = np.empty_like(v.lanes)
    _sat_inc(v.lanes, v.lanes.dtype.type(v.inf), out)
    return LaneVector(out, v.bits)


def eq_mask(v: LaneVector, w: LaneVector) -> LaneVector:
    _check_pair(v, w)
    out = np.empty_like(v.lanes)
    _eq_mask(v.lanes, w.lanes, v.lanes.dtype.type(v.inf), out)
    return LaneVector(out, v.bits)


def compare_exchange(v: LaneVector, w: LaneVector) -> tuple[LaneVector, LaneVector]:
    _check_pair(v, w)
    lo, hi = np.empty_like(v.lanes), np.empty_like(v.lanes)
    _cmp_xchg(v.lanes, w.lanes, lo, hi)
    return LaneVector(lo, v.bits), LaneVector(hi, v.bits)


def select_by_mask(m: LaneVector, v: LaneVector, w: LaneVector) -> LaneVector:
    _check_pair(v, w)
    _check_pair(m, v)
    if not np.isin(m.lanes, (0, m.inf)).all():
        raise ValueError("mask lanes must be 0 or INF")
    out = np.empty_like(v.lanes)
    _select(m.lanes, v.lanes, w.lanes, out)
    return LaneVector(out, v.bits)


@dataclass(frozen=True, eq=False)
class RestrictedEvents:
    """Per-column bottom spans in units of ``unit`` columns; ``inf`` where span exceeds the window."""
    spans: np.ndarray
    unit: int
    window_units: int
    bits: int

    @property
    def inf(self) -> int:
        return lane_inf(self.bits)

    def start_units(self) -> np.ndarray:
        """Start of each emitted seaweed in units; -1 for uncountable ones."""
        e = np.arange(self.spans.size) // self.unit
        s = e - self.spans.astype(np.int64)
        s[self.spans == self.inf] = -1
        return s


def check_lane_capacity(window_units: int, bits: int):
    """Reject windows whose span values would collide with INF."""
    if bits == 8:
        if window_units > SEA8_MAX_WINDOW:
            raise ConfigError(
                f"window of {window_units} units overflows 8-bit lanes (max {SEA8_MAX_WINDOW})")
    elif bits == 16:
        if 2 * window_units + 1 > lane_inf(16):
            raise ConfigError(f"window of {window_units} units overflows 16-bit lanes")
    else:
        lane_dtype(bits)


# Lanes are processed in fixed chunks so the compiled loop has no scalar remainder.
CHUNK = 64


@numba.njit(nogil=True, cache=True)
def _step(v, wcur, wnext, xl, ych, inc, infv):
    """One antidiagonal: every lane runs the cell rule, bottom outputs land one lane down."""
    for c in range(v.shape[0] // CHUNK):
        o = c * CHUNK
        for k in range(CHUNK):
            i = o + k
            a = v[i]
            b = wcur[i]
            match = xl[i] == ych[i]
            lo = a if a < b else b
            hi = b if a < b else a
            # match: exchange; mismatch: the smaller distance (later start) goes down
            wnext[i + 1] = a if match else lo
            rt = b if match else hi
            v[i] = rt + (inc[i] if rt != infv else 0)


@numba.njit(nogil=True, cache=True)
def _sweep(xw, y, unit, template):
    """Antidiagonal sweep; returns the bottom span (in units) for every column.

    ``template`` is an all-INF lane vector of the strip height and the lane dtype.
    """
    h = xw.shape[0]
    n = y.shape[0]
    dt = template.dtype
    nl = (h + CHUNK - 1) // CHUNK * CHUNK
    infv = template[0]
    zero = infv - infv
    # y padded and reversed so lane i at step t reads yr[base + i] with column t - i.
    # Padding values only reach lanes outside the strip or past its last column.
    ypad = np.zeros(n + 2 * nl, dt)
    ypad[nl:nl + n] = y
    yr = ypad[::-1].copy()
    plen = yr.shape[0]
    xl = np.zeros(nl, dt)
    xl[:h] = xw

    v = np.full(nl, infv, dt)
    wa = np.full(nl + 1, infv, dt)
    wb = np.full(nl + 1, infv, dt)
    wa[0] = zero
    # Lanes that cross a unit boundary when stepping right; the pattern cycles with t % unit.
    inc = np.zeros((unit, nl), dt)
    for p in range(unit):
        for i in range(nl):
            if (p - i + 1) % unit == 0:
                inc[p, i] = 1
    spans = np.empty(n, dt)

    for t in range(n + h - 1):
        if t < h:
            v[t] = infv
        base = plen - 1 - t - nl
        _step(v, wa, wb, xl, yr[base:base + nl], inc[t % unit], infv)
        # the lane shift: lane 0 receives the seaweed starting at the top of column t + 1
        wb[0] = zero
        e = t - (h - 1)
        if e >= 0:
            spans[e] = wb[h]
        wa, wb = wb, wa
    return spans


@numba.njit(nogil=True, cache=True)
def lane_row(xw, y, w, r, unit, template):
    """Half-unit scores of one x-window (blown when ``r == 2``) against y, from lane spans."""
    spans = _sweep(xw, y, unit, template)
    infv = template[0]
    n = spans.shape[0]
    starts = np.empty(n, np.int64)
    for e in range(n):
        s = spans[e]
        starts[e] = -1 if s == infv else e // unit - np.int64(s)
    if unit == 1:
        llcs = _window_llcs(starts, 1, r * w, r * w)[::r]
    else:
        llcs = _window_llcs(starts, unit, w, r * w)
    if r == 1:
        return 2 * llcs
    return 2 * llcs - 2 * w


def lane_template(height: int, bits: int) -> np.ndarray:
    return np.full(height, lane_inf(bits), lane_dtype(bits))


def comb_strip_lanes(xw, y, r: int = 1, bits: int = 16, window: int | None = None) -> RestrictedEvents:
    """Lane-parallel bottom events of one strip.

    ``xw`` and ``y`` are code arrays, already blown when ``r == 2``. Distances are kept in
    columns for 16-bit lanes and in blocks of ``r`` columns for 8-bit lanes. ``window`` is
    the counted window length in columns (defaults to the strip height).
    """
    xw = np.ascontiguousarray(xw, dtype=np.uint8)
    y = np.ascontiguousarray(y, dtype=np.uint8)
    window = xw.size if window is None else window
    unit = r if bits == 8 else 1
    if window % unit:
        raise ConfigError(f"window {window} is not a multiple of the blowup factor {r}")
    window_units = window // unit
    check_lane_capacity(window_units, bits)
    spans = _sweep(xw, y, unit, lane_template(xw.size, bits))
    spans[(spans > window_units) & (spans != lane_inf(bits))] = lane_inf(bits)
    return RestrictedEvents(spans, unit, window_units, bits)


__all__ = [
    "LaneVector", "RestrictedEvents", "sat_increment", "eq_mask", "compare_exchange",
    "select_by_mask", "comb_strip_lanes", "check_lane_capacity", "lane_inf", "lane_row",
    "lane_template",
]
