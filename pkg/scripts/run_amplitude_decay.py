#!/usr/bin/env python3
"""Charge-density oscillation amplitude and its decoherence envelope.

Sweeps n1_osc(t) and the noise action Gamma(t) for a super-ohmic bath at the
reference scales (g_s = 1 Hz^(2-s), mu = 1e-8 s, cutoff 1/mu), the dataset
behind the time-crystal decay figure.
"""

import argparse

from cdwring.cli import main as cli_main


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--s", type=float, default=1.2, help="bath exponent")
    p.add_argument("--g", type=float, default=1.0, help="coupling, Hz^(2-s)")
    p.add_argument("--mu", type=float, default=1e-8, help="reduced inertia, s")
    p.add_argument("--temperature", type=float, default=0.0, help="K")
    p.add_argument("--periods", type=float, default=10.0)
    p.add_argument("--points", type=int, default=2000)
    p.add_argument("--out", default="amplitude_decay.csv")
    args = p.parse_args()
    return cli_main([
        "amplitude", "--s", str(args.s), "--g", str(args.g),
        "--mu", str(args.mu), "--temperature", str(args.temperature),
        "--t-max-periods", str(args.periods), "--points", str(args.points),
        "--out", args.out,
    ])


if __name__ == "__main__":
    raise SystemExit(main())
