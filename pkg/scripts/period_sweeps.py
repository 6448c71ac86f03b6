"""Tunneling period against coupling strength and oscillator cutoff.

Writes one CSV per (m, alpha) pair into the output directory, in a layout
that plots directly with gnuplot or pandas.
"""

import argparse
from pathlib import Path

import numpy as np

from razavy_dw import CoupledModel, sweep_c, sweep_N

PAIRS = ((1.0, 10.0), (0.1, 10.0), (1.0, 2.0))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results/sweeps")
    parser.add_argument("--d", type=int, default=1)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for m, alpha in PAIRS:
        base = CoupledModel.build(m=m, alpha=alpha, d=args.d)
        by_c = sweep_c(base, np.linspace(0.0, 2.0, 41), jobs=args.jobs)
        by_n = sweep_N(base, range(0, 11), jobs=args.jobs)
        tag = f"m{m:g}_alpha{alpha:g}_d{args.d}"
        np.savetxt(out / f"T_vs_c_{tag}.csv", by_c.rows(), delimiter=",", header="c,T,omega1", comments="")
        np.savetxt(out / f"T_vs_N_{tag}.csv", by_n.rows(), delimiter=",", header="N,T,omega1", comments="")
        print(f"{tag}: T(c=2)={by_c.periods[-1]:.2f}  T(N=10)={by_n.periods[-1]:.2f}")


if __name__ == "__main__":
    main()
