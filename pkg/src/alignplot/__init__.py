"""Alignment plots (window-pair LCS / alignment scores) via seaweed combing."""
from .baselines import blcs_llcs, dp_align_score, dp_llcs, dp_plot
from .lanes import LaneVector, comb_strip_lanes, compare_exchange, eq_mask, sat_increment, select_by_mask
from .model import ConfigError, EmptyPlotError, PlotConfig, PlotGrid, ScoringScheme, Sequence, window_grid_dims
from .runner import StripTask, compute_plot, plan_strips
from .scoring import BlownSequence, apply_threshold, blowup, recover_score
from .seaweed import BottomEvent, ImplicitHSM, comb_strip, llcs_query, plot_scalar, wlcs_row

__version__ = "0.1.0"
