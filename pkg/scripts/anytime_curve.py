#!/usr/bin/env python3
"""Measure how solution quality grows with the time budget.

Solves one instance under a ladder of time limits and prints utilization,
node counts, and wall time per run. The default ladder ends at the
5-minute budget used for the reference experiments.

Example:
    python scripts/generate_instance.py --units 40 --seed 7 > instance.json
    python scripts/anytime_curve.py instance.json --limits 100 1000 10000
"""

import argparse
import dataclasses
import sys
import time
from pathlib import Path

from palletpack.files import parse_instance
from palletpack.search import solve


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("instance", type=Path)
    ap.add_argument("--limits", type=int, nargs="+",
                    default=[100, 1000, 10_000, 60_000, 300_000],
                    help="time limits in ms")
    args = ap.parse_args()

    instance = parse_instance(args.instance.read_text(encoding="utf-8"))
    print(f"{len(instance.units)} units, pallet "
          f"{instance.pallet.width}x{instance.pallet.depth}x{instance.pallet.max_height}")
    print(f"{'limit_ms':>9} {'wall_ms':>9} {'placed':>6} {'utilization':>11} "
          f"{'nodes':>9} {'pruned':>8} {'timed_out':>9}")
    for limit in args.limits:
        params = dataclasses.replace(instance.params, time_limit_ms=limit)
        started = time.monotonic()
        sol = solve(instance.units, instance.pallet, params)
        wall = (time.monotonic() - started) * 1000
        print(f"{limit:>9} {wall:>9.0f} {len(sol.placements):>6} "
              f"{sol.utilization:>11.4f} {sol.stats.nodes_expanded:>9} "
              f"{sol.stats.nodes_pruned_by_bound:>8} {str(sol.stats.timed_out):>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
