#!/usr/bin/env python3
"""Tabulate how a photon rest mass suppresses the radiated power.

Prints R relative to the massless Stefan-Boltzmann value over a grid of
x = mc^2/kT, together with the naive (c/4) U/V comparator and the two
asymptotic formulas in their respective regimes.
"""

import argparse
import math
import sys

from photongas import (SI, GasParameters, low_temp_radiance, radiance,
                       radiance_naive, small_mass_radiance)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--temp", type=float, default=300.0, help="temperature in K")
    parser.add_argument("--csv", default=None, help="also write the table as CSV")
    args = parser.parse_args()

    stefan = radiance(GasParameters(mass=0.0, temperature=args.temp))
    grid = [10 ** (-2 + 4 * i / 24) for i in range(25)]
    header = f"{'x':>10} {'R/R_SB':>12} {'R/R_naive':>12} {'asymptote/R':>12}"
    print(f"T = {args.temp} K, massless radiance R_SB = {stefan:.6e} W/m^2")
    print(header)
    lines = ["x,R_over_RSB,R_over_Rnaive,asymptote_over_R"]
    for x in grid:
        mass = x * SI.k_B * args.temp / SI.c**2
        params = GasParameters(mass=mass, temperature=args.temp)
        r = radiance(params)
        ratio_naive = r / radiance_naive(params)
        asym = small_mass_radiance(params) if x < 1 else low_temp_radiance(params)
        asym_ratio = asym / r if r > 0 else math.nan
        print(f"{x:10.4f} {r / stefan:12.6e} {ratio_naive:12.6f} {asym_ratio:12.6f}")
        lines.append(f"{x:.17g},{r / stefan:.17g},{ratio_naive:.17g},{asym_ratio:.17g}")
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            handle.write("\n".join(lines) + "\n")
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
