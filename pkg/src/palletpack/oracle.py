"""Brute-force reference implementations.

These exist to validate the production code paths: a millimeter-column
voxel count for the unused-volume formula, a bitset subset-sum table for
the knapsack bound, and a full enumeration of the search tree, without
bound pruning or a branch cap, for end-to-end prune safety. They trade all
performance for directness and are only meant for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .model import (
    PackingState,
    Pallet,
    Placement,
    SearchStats,
    Solution,
    SolverParams,
    TransportUnit,
    oriented,
)
from .scoring import rank_and_cut, scored_candidates
from .search import _validate_instance

MAX_VOXELS = 10**8
MAX_DP_SUM = 10**6


@dataclass(frozen=True)
class OracleConfig:
    voxel_resolution: int = 1
    max_units: int = 6

    def __post_init__(self):
        if self.voxel_resolution <= 0 or self.max_units <= 0:
            raise ValueError("oracle config values must be positive")


def voxel_unused_volume(state: PackingState, config: OracleConfig = OracleConfig()) -> int:
    """Unused pallet volume by direct column counting.

    Walks the floor in ``voxel_resolution`` steps, takes the tallest unit
    top over each column, and adds up the space left to the ceiling. Exact
    when the resolution divides all coordinates (always at 1 mm).
    """
    p = state.pallet
    res = config.voxel_resolution
    if p.width * p.depth * p.max_height > MAX_VOXELS * res**3:
        raise ValueError("pallet too large to voxelize")
    nx = p.width // res
    ny = p.depth // res
    heights = [[0] * ny for _ in range(nx)]
    for pl in state.placements:
        top = pl.z2
        for a in range(pl.x // res, (pl.x2 + res - 1) // res):
            col = heights[a]
            for b in range(pl.y // res, (pl.y2 + res - 1) // res):
                if top > col[b]:
                    col[b] = top
    zp = p.max_height
    cell = res * res
    return sum((zp - h) * cell for col in heights for h in col)


def dp_knapsack(volumes: Sequence[int], capacity: int) -> int:
    """Classic subset-sum maximization via a (bitset) reachability table."""
    if capacity < 0:
        raise ValueError("capacity must be >= 0")
    vols = [v for v in volumes if 0 < v <= capacity]
    if not vols:
        return 0
    g = gcd(*vols) if len(vols) > 1 else vols[0]
    scaled = [v // g for v in vols]
    cap = capacity // g
    if min(sum(scaled), cap) > MAX_DP_SUM:
        raise ValueError("instance too large for the dp table")
    cap = min(cap, sum(scaled))
    reachable = 1
    for v in scaled:
        reachable |= reachable << v
    reachable &= (1 << (cap + 1)) - 1
    return (reachable.bit_length() - 1) * g


def exhaustive_solve(
    units: Sequence[TransportUnit],
    pallet: Pallet,
    params: SolverParams,
    config: OracleConfig = OracleConfig(),
) -> Solution:
    """Full enumeration over the same candidate space as the solver.

    Same extreme points, feasibility rules, orientations, picking order
    with skipping, candidate ordering and incumbent tie-break, but no
    upper-bound pruning and no branch cap.
    """
    _validate_instance(units)
    if len(units) > config.max_units:
        raise ValueError(f"instance exceeds oracle limit of {config.max_units} units")
    units = list(units)
    n = len(units)
    best_state = PackingState.empty(pallet)
    best_volume = 0
    nodes = 0

    def explore(state: PackingState, idx: int, skippable: bool) -> None:
        nonlocal best_state, best_volume, nodes
        while idx < n:
            unit = units[idx]
            scored = scored_candidates(state, unit, params)
            ranked = rank_and_cut(scored, len(scored)) if scored else []
            nodes += 1
            if not ranked:
                if not skippable:
                    return
                idx += 1
                continue
            children = [
                state.with_placement(
                    Placement(unit.id, c.position, oriented(unit, c.rotated), c.rotated)
                )
                for c in ranked
            ]
            b = children[0].placed_volume()
            if b > best_volume:
                best_state = children[0]
                best_volume = b
            if idx + 1 < n:
                for child in children:
                    explore(child, idx + 1, True)
            return

    for root in range(n):
        explore(PackingState.empty(pallet), root, skippable=False)

    stats = SearchStats(nodes_expanded=nodes)
    return Solution(
        placements=best_state.placements,
        placed_volume=best_volume,
        utilization=best_volume / pallet.volume(),
        stats=stats,
        pallet=pallet,
    )
