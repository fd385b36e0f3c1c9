#!/usr/bin/env python3
"""How well does the rung-1 ladder energy approximate the true first excited state?

Sweeps the Coulomb strength of a quartic well and reports, per value of c,
the parameter drift between the shape-invariance translation and the rung-1
reset values alongside the actual energy gap |E_ladder(1) - E_1(shooting)|.
The two track each other: the ladder is only as good as the drift is small.
"""

import argparse
import csv
import sys

from polycoulomb import (
    PolynomialCoulombPotential,
    build_ladder,
    find_eigenvalue,
    with_required_coefficients,
)


def run(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--l", type=int, default=1)
    parser.add_argument("--d", type=float, default=0.5)
    parser.add_argument("--f", type=float, default=0.1)
    parser.add_argument(
        "--c-values",
        default="-0.02,-0.05,-0.1,-0.25,-0.5,-1.0,-2.0",
        help="comma-separated Coulomb strengths to sweep",
    )
    parser.add_argument("--out", default=None, help="optional CSV path")
    args = parser.parse_args(argv)

    rows = [("c", "drift_a1", "drift_a2", "E_ladder_1", "E1_shooting", "gap")]
    for c in (float(x) for x in args.c_values.split(",")):
        pot = with_required_coefficients(
            PolynomialCoulombPotential.quartic(
                l=args.l, c=c, a=0.0, b=0.0, d=args.d, f=args.f
            )
        )
        ladder = build_ladder(pot, 1)
        e_ladder = ladder.steps[1].energy_abs
        e1 = find_eigenvalue(pot, 1).energy
        drift = ladder.steps[1].drift
        rows.append(
            (
                f"{c:.4g}",
                f"{drift[0]:.6f}",
                f"{drift[1]:.6f}",
                f"{e_ladder:.6f}",
                f"{e1:.6f}",
                f"{abs(e_ladder - e1):.6f}",
            )
        )

    if args.out:
        with open(args.out, "w", newline="") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
        print(f"wrote {args.out}")
    else:
        widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
        for row in rows:
            print("  ".join(str(cell).rjust(w) for cell, w in zip(row, widths)))
    return 0


if __name__ == "__main__":
    sys.exit(run())
