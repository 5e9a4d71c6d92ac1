#!/usr/bin/env python3
"""Generate a random instance file.

Example:
    python scripts/generate_instance.py --units 40 --seed 7 > instance.json
"""

import argparse
import json
import random
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--units", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pallet", type=int, nargs=3, default=(1200, 800, 1500),
                    metavar=("WIDTH", "DEPTH", "MAX_HEIGHT"))
    ap.add_argument("--min-side", type=int, default=50)
    ap.add_argument("--max-side", type=int, default=400)
    ap.add_argument("--vertical-support", type=float, default=0.7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    width, depth, zp = args.pallet
    units = [
        {
            "id": f"u{i:03d}",
            "w": rng.randint(args.min_side, args.max_side),
            "d": rng.randint(args.min_side, args.max_side),
            "h": rng.randint(args.min_side, args.max_side),
        }
        for i in range(args.units)
    ]
    doc = {
        "pallet": {"width": width, "depth": depth, "max_height": zp},
        "units": units,
        "params": {"vertical_support_min": args.vertical_support},
    }
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
