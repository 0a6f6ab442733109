"""Reference engines: textbook dynamic programming and bit-parallel LCS.

``dp_plot`` is the ground truth every seaweed engine is checked against.
"""
from __future__ import annotations

import numba
import numpy as np

from .model import PlotConfig, PlotGrid, Sequence

WORD = 64
TILE = 64


def _codes(s) -> np.ndarray:
    if isinstance(s, Sequence):
        return s.data
    if isinstance(s, (str, bytes)):
        return Sequence.from_text(s).data
    return np.ascontiguousarray(s, dtype=np.uint8)


@numba.njit(nogil=True, cache=True)
def _dp_llcs(a, b):
    n = b.shape[0]
    row = np.zeros(n + 1, np.int64)
    for i in range(a.shape[0]):
        c = a[i]
        diag = 0
        for j in range(n):
            up = row[j + 1]
            if c == b[j]:
                val = diag + 1
            else:
                val = up if up > row[j] else row[j]
            diag = up
            row[j + 1] = val
    return row[n]


def dp_llcs(a, b) -> int:
    return int(_dp_llcs(_codes(a), _codes(b)))


@numba.njit(nogil=True, cache=True)
def _dp_align_half(a, b):
    # match +2, mismatch 0, gap -1 (half-units)
    n = b.shape[0]
    row = np.empty(n + 1, np.int64)
    for j in range(n + 1):
        row[j] = -j
    for i in range(a.shape[0]):
        diag = row[0]
        row[0] = -(i + 1)
        for j in range(n):
            up = row[j + 1]
            best = diag + (2 if a[i] == b[j] else 0)
            if up - 1 > best:
                best = up - 1
            if row[j] - 1 > best:
                best = row[j] - 1
            diag = up
            row[j + 1] = best
    return row[n]


def dp_align_score(a, b) -> int:
    """Global alignment score (match 1, mismatch 0, gap -1/2) in half-units, on raw strings."""
    return int(_dp_align_half(_codes(a), _codes(b)))


@numba.njit(nogil=True, cache=True)
def dp_row(xb, yb, w, r):
    """Half-unit scores of one x-window against all y-windows by per-pair DP.

    Each pair gets its own full ``(r*w) x (r*w)`` table; TILE consecutive pairs are
    evaluated side by side so the innermost loop runs across independent tables.
    """
    wl = r * w
    n_windows = yb.shape[0] // r - w + 1
    out = np.empty(n_windows, np.int64)
    ytile = np.zeros((wl, TILE), np.int16)
    row = np.zeros((wl + 1, TILE), np.int16)
    diag = np.zeros(TILE, np.int16)
    left = np.zeros(TILE, np.int16)
    one = np.int16(1)
    zero = np.int16(0)
    ny = yb.shape[0]
    for k0 in range(0, n_windows, TILE):
        for b in range(wl):
            for t in range(TILE):
                idx = r * (k0 + t) + b
                ytile[b, t] = yb[idx] if idx < ny else -1
        row[:, :] = 0
        for a in range(wl):
            c = np.int16(xb[a])
            for t in range(TILE):
                diag[t] = zero
                left[t] = zero
            for b in range(wl):
                for t in range(TILE):
                    up = row[b + 1, t]
                    d = diag[t] + (one if ytile[b, t] == c else zero)
                    val = max(max(up, left[t]), d)
                    diag[t] = up
                    left[t] = val
                    row[b + 1, t] = val
        for t in range(TILE):
            if k0 + t < n_windows:
                out[k0 + t] = row[wl, t]
    if r == 1:
        return 2 * out
    return 2 * out - 2 * w


def dp_plot(x: Sequence, y: Sequence, cfg: PlotConfig) -> PlotGrid:
    from dataclasses import replace

    from .runner import compute_plot
    return compute_plot(x, y, replace(cfg, mode="dp"))


@numba.njit(nogil=True, cache=True, inline="always")
def _popcount(v):
    v = v - ((v >> np.uint64(1)) & np.uint64(0x5555555555555555))
    v = (v & np.uint64(0x3333333333333333)) + ((v >> np.uint64(2)) & np.uint64(0x3333333333333333))
    v = (v + (v >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (v * np.uint64(0x0101010101010101)) >> np.uint64(56)


@numba.njit(nogil=True, cache=True)
def _match_masks(p):
    nw = (p.shape[0] + WORD - 1) // WORD
    masks = np.zeros((256, max(nw, 1)), np.uint64)
    for i in range(p.shape[0]):
        masks[p[i], i // WORD] |= np.uint64(1) << np.uint64(i % WORD)
    return masks


@numba.njit(nogil=True, cache=True)
def _blcs(m, masks, text, lo, hi, col):
    """Bit-parallel LLCS of a length-``m`` pattern against ``text[lo:hi]``.

    ``col`` is the bit column (one bit per pattern position), reset here. Per text
    character c: ``V <- (V + (V & M[c])) | (V & ~M[c])``; zero bits count the LCS.
    """
    nw = col.shape[0]
    ones = ~np.uint64(0)
    for k in range(nw):
        col[k] = ones
    for j in range(lo, hi):
        mrow = masks[text[j]]
        carry = np.uint64(0)
        for k in range(nw):
            v = col[k]
            u = v & mrow[k]
            s = v + u
            c1 = np.uint64(1) if s < v else np.uint64(0)
            s2 = s + carry
            c2 = np.uint64(1) if s2 < s else np.uint64(0)
            carry = c1 | c2
            col[k] = s2 | (v & ~mrow[k])
    zeros = 0
    for k in range(nw):
        bits = m - k * WORD
        v = col[k]
        if bits < WORD:
            v = v | (ones << np.uint64(bits))
        zeros += WORD - np.int64(_popcount(v))
    return zeros


def blcs_llcs(a, b) -> int:
    ac, bc = _codes(a), _codes(b)
    if ac.size == 0 or bc.size == 0:
        return 0
    col = np.empty(_match_masks(ac).shape[1], np.uint64)
    return int(_blcs(ac.size, _match_masks(ac), bc, 0, bc.size, col))


@numba.njit(nogil=True, cache=True)
def blcs_row(xb, yb, w, r):
    """Half-unit scores of one x-window against all y-windows, one bit-parallel run per pair."""
    wl = r * w
    masks = _match_masks(xb)
    col = np.empty(masks.shape[1], np.uint64)
    n_windows = yb.shape[0] // r - w + 1
    out = np.empty(n_windows, np.int64)
    for k in range(n_windows):
        out[k] = _blcs(wl, masks, yb, r * k, r * k + wl, col)
    if r == 1:
        return 2 * out
    return 2 * out - 2 * w


__all__ = ["dp_llcs", "dp_align_score", "dp_row", "dp_plot", "blcs_llcs", "blcs_row"]
