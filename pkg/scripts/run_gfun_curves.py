#!/usr/bin/env python3
"""Generate the damping-function curves G(t), Gdot(t) for several bath exponents.

Produces a long-format CSV (one block per exponent) covering sub-ohmic,
ohmic, and super-ohmic damping on a 20-period window, the dataset behind the
fundamental-solution figure panels.
"""

import argparse

from cdwring.cli import main as cli_main


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--s", default="0.8,1.0,1.2",
                   help="comma-separated bath exponents")
    p.add_argument("--g", type=float, default=1.0, help="coupling, Hz^(2-s)")
    p.add_argument("--mu", type=float, default=1e-8, help="reduced inertia, s")
    p.add_argument("--periods", type=float, default=20.0)
    p.add_argument("--points", type=int, default=400)
    p.add_argument("--out", default="gfun_curves.csv")
    args = p.parse_args()
    return cli_main([
        "gfun", "--s", args.s, "--g", str(args.g), "--mu", str(args.mu),
        "--t-max-periods", str(args.periods), "--points", str(args.points),
        "--out", args.out,
    ])


if __name__ == "__main__":
    raise SystemExit(main())
