import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from alignplot.baselines import blcs_llcs, dp_align_score, dp_llcs, dp_plot
from alignplot.model import PlotConfig, Sequence

from conftest import align_oracle, lcs_oracle, plot_oracle, random_codes


def brute_llcs(a, b):
    """Longest subsequence of ``a`` that is also a subsequence of ``b``, by enumeration."""
    def is_subseq(s, t):
        it = iter(t)
        return all(c in it for c in s)
    for k in range(len(a), -1, -1):
        if any(is_subseq(c, b) for c in itertools.combinations(a, k)):
            return k


def test_dp_llcs_examples():
    assert brute_llcs("ABCBDAB", "BDCABA") == 4
    assert dp_llcs("ABCBDAB", "BDCABA") == 4
    assert dp_llcs("ACGTTA", "ACGTTA") == 6
    assert dp_llcs("ACGT", "") == 0


@given(st.text("AB", max_size=8), st.text("AB", max_size=8))
def test_dp_llcs_against_enumeration(a, b):
    assert dp_llcs(a, b) == brute_llcs(a, b)


@given(st.text("ACGT", max_size=40), st.text("ACGT", max_size=40))
def test_dp_align_score(a, b):
    assert dp_align_score(a, b) == align_oracle(a, b)


def test_blcs_matches_dp(rng):
    for _ in range(300):
        sigma = int(rng.choice([2, 4, 20]))
        a = random_codes(rng, sigma, int(rng.integers(0, 300)))
        b = random_codes(rng, sigma, int(rng.integers(0, 300)))
        assert blcs_llcs(a, b) == dp_llcs(a, b)
    s = random_codes(rng, 4, 257)
    assert blcs_llcs(s, s) == 257


@pytest.mark.parametrize("m", [63, 64, 65, 128, 129])
def test_blcs_word_boundaries(rng, m):
    a, b = random_codes(rng, 2, m), random_codes(rng, 2, 150)
    assert blcs_llcs(a, b) == lcs_oracle(a, b)


def test_dp_plot_examples(rng):
    x = Sequence("x", random_codes(rng, 4, 30))
    g = dp_plot(x, x, PlotConfig(window_w=6, step_h=1, blowup_r=1))
    assert (np.diag(g.values) == 12).all()
    one = dp_plot(x, x, PlotConfig(window_w=30, step_h=1, blowup_r=2))
    assert one.values.shape == (1, 1) and one.values[0, 0] == 60
    y = Sequence("y", random_codes(rng, 4, 30))
    one = dp_plot(x, y, PlotConfig(window_w=30, step_h=1, blowup_r=1))
    assert one.values[0, 0] == 2 * dp_llcs(x, y)


def test_dp_plot_random(rng):
    for _ in range(20):
        w = int(rng.integers(1, 10))
        m, n = rng.integers(w, 30, size=2)
        h, r = int(rng.integers(1, 4)), int(rng.integers(1, 3))
        x = Sequence("x", random_codes(rng, 4, m))
        y = Sequence("y", random_codes(rng, 4, n))
        for mode in ("dp", "blcs"):
            g = dp_plot(x, y, PlotConfig(window_w=w, step_h=h, blowup_r=r, mode=mode))
            assert g.values.tolist() == plot_oracle(x.data, y.data, w, h, r).tolist()
