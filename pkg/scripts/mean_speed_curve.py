#!/usr/bin/env python3
"""Emit the thermal mean-speed curve (CSV + SVG) into an output directory.

The curve shows vbar/c against kT/mc^2: it climbs to 1 at high temperature
and hugs the nonrelativistic sqrt(8kT/pi m)/c asymptote at low temperature.
"""

import argparse
import pathlib
import sys

from photongas.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out", help="output directory")
    parser.add_argument("--points", type=int, default=120)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "mean_speed.csv"
    svg_path = out_dir / "mean_speed.svg"
    code = cli_main([
        "figure", "mean-speed",
        "--x-min", "0.01", "--x-max", "100",
        "--points", str(args.points), "--spacing", "log",
        "--out", str(csv_path), "--svg", str(svg_path),
    ])
    if code == 0:
        print(f"wrote {csv_path}")
        print(f"wrote {svg_path}")
    return code


if __name__ == "__main__":
    sys.exit(main())
