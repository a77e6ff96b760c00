#!/usr/bin/env python3
"""Print the derived-timescale table for sub-ohmic, ohmic, and super-ohmic baths.

For each exponent the params report (inertia, period, characteristic
frequency, damping/decoherence times, lifetime, observable period count) is
emitted as JSON on stdout.
"""

import argparse

from cdwring.cli import main as cli_main


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--g", type=float, default=1.0, help="coupling, Hz^(2-s)")
    p.add_argument("--mu", type=float, default=1e-8, help="reduced inertia, s")
    p.add_argument("--s", default="0.8,1.0,1.2",
                   help="comma-separated bath exponents")
    args = p.parse_args()
    for s in args.s.split(","):
        print(f"--- s = {s} ---")
        code = cli_main(["params", "--s", s, "--g", str(args.g),
                         "--mu", str(args.mu)])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
