import numpy as np
import pytest
from hypothesis import settings

from alignplot.model import Sequence

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


def lcs_oracle(a, b, wildcard=None):
    """Textbook LCS table, in plain Python; ``wildcard`` in ``b`` matches anything."""
    a, b = list(a), list(b)
    L = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            hit = ca == cb or (wildcard is not None and cb == wildcard)
            L[i + 1][j + 1] = max(L[i][j + 1], L[i + 1][j], L[i][j] + hit)
    return L[-1][-1]


def align_oracle(a, b):
    """Global alignment, match 1 / mismatch 0 / gap -1/2, returned in half-units."""
    a, b = list(a), list(b)
    S = [[-j for j in range(len(b) + 1)]]
    for i, ca in enumerate(a):
        row = [-(i + 1)]
        for j, cb in enumerate(b):
            row.append(max(S[i][j] + (2 if ca == cb else 0), S[i][j + 1] - 1, row[j] - 1))
        S.append(row)
    return S[-1][-1]


def plot_oracle(x, y, w, h, r):
    """Half-unit window-pair scores by brute force."""
    x, y = list(x), list(y)
    rows = (len(x) - w) // h + 1
    cols = len(y) - w + 1
    out = np.empty((rows, cols), np.int64)
    for i in range(rows):
        xw = x[i * h:i * h + w]
        for j in range(cols):
            yw = y[j:j + w]
            out[i, j] = align_oracle(xw, yw) if r == 2 else 2 * lcs_oracle(xw, yw)
    return out


def random_codes(rng, sigma, n):
    return rng.integers(1, sigma + 1, size=n).astype(np.uint8)


def random_seq(rng, sigma, n, name="s"):
    return Sequence(name, random_codes(rng, sigma, n))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def acceptance():
    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
