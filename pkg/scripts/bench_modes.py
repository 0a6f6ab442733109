"""Time every engine on random DNA and print a comparison table.

    python3 scripts/bench_modes.py --length 5000 --window 100 --step 5
"""
import argparse

import numpy as np

from alignplot.model import MODES
from alignplot import PlotConfig, Sequence
from alignplot.bench import benchmark


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--length", type=int, default=5000)
    p.add_argument("--window", type=int, default=100)
    p.add_argument("--step", type=int, default=5)
    p.add_argument("--blowup", type=int, choices=(1, 2), default=2)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--modes", nargs="+", choices=MODES, default=list(MODES))
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    dna = np.frombuffer(b"ACGT", np.uint8)
    x = Sequence("x", rng.choice(dna, args.length))
    y = Sequence("y", rng.choice(dna, args.length))
    cfg = PlotConfig(window_w=args.window, step_h=args.step, blowup_r=args.blowup,
                     workers=args.workers)
    report = benchmark(x, y, cfg, args.modes, args.repeat)
    print(report.to_json() if args.json else report.table())


if __name__ == "__main__":
    main()
