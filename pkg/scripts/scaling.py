"""Worker scaling of one engine: wall time and speedup for each thread count.

    python3 scripts/scaling.py --length 20000 --workers 1 2 4 8
"""
import argparse
import os
import time
from dataclasses import replace

import numpy as np

from alignplot.model import MODES
from alignplot import PlotConfig, Sequence, compute_plot


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--length", type=int, default=10000)
    p.add_argument("--window", type=int, default=100)
    p.add_argument("--step", type=int, default=5)
    p.add_argument("--mode", choices=MODES, default="sea8")
    p.add_argument("--workers", type=int, nargs="+", default=[1, 2, 4, 8])
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    dna = np.frombuffer(b"ACGT", np.uint8)
    x = Sequence("x", rng.choice(dna, args.length))
    y = Sequence("y", rng.choice(dna, args.length))
    cfg = PlotConfig(window_w=args.window, step_h=args.step, mode=args.mode)
    compute_plot(Sequence("w", x.data[:300]), Sequence("w", y.data[:300]), cfg)  # compile

    print(f"{os.cpu_count()} cpu(s) visible, mode {args.mode}, {args.length} x {args.length}")
    print(f"{'workers':>8}{'seconds':>10}{'speedup':>9}")
    reference, base = None, None
    for k in args.workers:
        t0 = time.perf_counter()
        grid = compute_plot(x, y, replace(cfg, workers=k))
        dt = time.perf_counter() - t0
        if reference is None:
            reference, base = grid, dt
        elif grid != reference:
            raise SystemExit(f"grid with {k} workers differs from {args.workers[0]} workers")
        print(f"{k:>8}{dt:>10.3f}{base / dt:>9.2f}")


if __name__ == "__main__":
    main()
