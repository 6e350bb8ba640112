#!/usr/bin/env python3
"""Classifier phase diagram over the (mu, k) plane on log-spaced grids.

Defaults match the qualitative picture at n = 10^9.  Writes the verdict CSV
consumed by the plotting scripts.

    python scripts/run_phase_diagram.py -o results/phase_diagram.csv
"""

import argparse
import os
import sys

import numpy as np

from rggclique.experiments import phase_diagram


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=float, default=1e9)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--mu-min", type=float, default=0.01)
    parser.add_argument("--mu-max", type=float, default=1e5)
    parser.add_argument("--mu-points", type=int, default=60)
    parser.add_argument("--k-min", type=float, default=2.0)
    parser.add_argument("--k-max", type=float, default=1e6)
    parser.add_argument("--k-points", type=int, default=60)
    parser.add_argument("--epsilon", type=float, default=0.1)
    parser.add_argument("--output", "-o", default="results/phase_diagram.csv")
    args = parser.parse_args()

    table = phase_diagram(
        args.n, args.d,
        np.geomspace(args.mu_min, args.mu_max, args.mu_points),
        np.geomspace(args.k_min, args.k_max, args.k_points),
        epsilon=args.epsilon,
    )
    os.makedirs(os.path.dirname(args.output) or ".", exist_ok=True)
    table.write_csv(args.output)
    counts = {}
    for cell in table.cells:
        counts[(cell.vd, cell.cn)] = counts.get((cell.vd, cell.cn), 0) + 1
    print(f"wrote {args.output} ({len(table.cells)} cells)")
    for (vd, cn), count in sorted(counts.items()):
        print(f"  vd={vd:<9} cn={cn:<9} {count:>5} cells")
    return 0


if __name__ == "__main__":
    sys.exit(main())
