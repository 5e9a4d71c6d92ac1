"""Depth-first branch and bound over (unit, position, orientation) choices.

Units are considered strictly in picking order. At each node the selected
unit's feasible candidates are ranked and capped; the best one greedily
extends the incumbent, then the node either descends into its candidate
children (best first), gets pruned when even the knapsack upper bound
cannot beat the incumbent, or, if the unit fits nowhere, is skipped so the
same state is retried with the next unit. A skipped unit stays skipped for
the rest of its branch. Exhausted branches backtrack; at the root the
first-placed unit itself advances through the picking order. The search is
fully deterministic; a wall-clock limit makes it an anytime solver.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import extreme_points
from .bounds import node_upper_bound
from .feasibility import check_placement
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
from .scoring import ScoredCandidate, evaluate, rank_and_cut


@dataclass(frozen=True)
class TraceEvent:
    """One step of the search, for debugging and replay."""

    kind: str  # expand | place | incumbent | prune | skip | backtrack
    unit_id: Optional[str] = None
    order_index: Optional[int] = None
    position: Optional[tuple[int, int, int]] = None
    rotated: Optional[bool] = None
    purpose: Optional[str] = None  # for place: incumbent | descend
    volume: Optional[int] = None
    upper_bound: Optional[int] = None
    incumbent_volume: Optional[int] = None
    candidates: Optional[int] = None
    depth: Optional[int] = None
    placements: Optional[tuple[tuple[str, tuple[int, int, int], bool], ...]] = None

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        for name in (
            "unit_id", "order_index", "position", "rotated", "purpose", "volume",
            "upper_bound", "incumbent_volume", "candidates", "depth", "placements",
        ):
            v = getattr(self, name)
            if v is not None:
                d[name] = v
        return d


class _Deadline(Exception):
    pass


def _validate_instance(units: Sequence[TransportUnit]) -> None:
    if not units:
        raise ValueError("instance has no transport units")
    seen = set()
    for i, u in enumerate(units):
        if u.id in seen:
            raise ValueError(f"duplicate unit id {u.id!r}")
        seen.add(u.id)
        if u.order_index != i:
            raise ValueError(
                f"unit {u.id!r} has order_index {u.order_index}, expected {i}"
            )


class _Searcher:
    def __init__(
        self,
        units: Sequence[TransportUnit],
        pallet: Pallet,
        params: SolverParams,
        trace: Optional[list[TraceEvent]],
    ):
        self.units = list(units)
        self.pallet = pallet
        self.params = params
        self.trace = trace
        self.incumbent = PackingState.empty(pallet)
        self.incumbent_volume = 0
        self.nodes_expanded = 0
        self.nodes_pruned = 0
        self.candidates_evaluated = 0
        self.timed_out = False
        self.deadline = time.monotonic() + params.time_limit_ms / 1000.0

    def _tick(self) -> None:
        if time.monotonic() >= self.deadline:
            raise _Deadline

    def _log(self, event: TraceEvent) -> None:
        if self.trace is not None:
            self.trace.append(event)

    def _ranked_candidates(
        self, state: PackingState, unit: TransportUnit
    ) -> list[ScoredCandidate]:
        scored: list[ScoredCandidate] = []
        for cand in extreme_points.generate(state):
            self._tick()
            for rotated in (False, True):
                dims = oriented(unit, rotated)
                report = check_placement(state, cand.coords, dims, self.params)
                if report.feasible:
                    score = evaluate(state, cand.coords, dims, self.params)
                    scored.append(ScoredCandidate(cand.coords, rotated, score, report))
        self.candidates_evaluated += len(scored)
        return rank_and_cut(scored, self.params.max_branches)

    def _placement(self, unit: TransportUnit, cand: ScoredCandidate) -> Placement:
        return Placement(unit.id, cand.position, oriented(unit, cand.rotated), cand.rotated)

    def _expand(self, state: PackingState, idx: int, depth: int, skippable: bool) -> None:
        n = len(self.units)
        while idx < n:
            self._tick()
            unit = self.units[idx]
            ranked = self._ranked_candidates(state, unit)
            self.nodes_expanded += 1
            self._log(TraceEvent(
                "expand", unit_id=unit.id, order_index=idx,
                candidates=len(ranked), depth=depth,
            ))

            if not ranked:
                if not skippable:
                    return
                self._log(TraceEvent("skip", unit_id=unit.id, order_index=idx, depth=depth))
                idx += 1
                continue

            best = ranked[0]
            best_state = state.with_placement(self._placement(unit, best))
            b = best_state.placed_volume()
            if b > self.incumbent_volume:
                self.incumbent = best_state
                self.incumbent_volume = b
                self._log(TraceEvent(
                    "place", unit_id=unit.id, order_index=idx, position=best.position,
                    rotated=best.rotated, purpose="incumbent", depth=depth,
                ))
                self._log(TraceEvent(
                    "incumbent", volume=b,
                    placements=tuple(
                        (pl.unit_id, pl.position, pl.rotated) for pl in best_state.placements
                    ),
                ))

            if idx + 1 < n:
                ub = node_upper_bound(best_state, self.units[idx + 1:], self.params.bound_mode)
                self._tick()
                if ub <= self.incumbent_volume:
                    self.nodes_pruned += 1
                    self._log(TraceEvent(
                        "prune", unit_id=unit.id, order_index=idx,
                        upper_bound=ub, incumbent_volume=self.incumbent_volume, depth=depth,
                    ))
                    return
                for cand in ranked:
                    child = best_state if cand is best else state.with_placement(
                        self._placement(unit, cand)
                    )
                    self._log(TraceEvent(
                        "place", unit_id=unit.id, order_index=idx, position=cand.position,
                        rotated=cand.rotated, purpose="descend", depth=depth,
                    ))
                    self._expand(child, idx + 1, depth + 1, True)
                    self._log(TraceEvent("backtrack", depth=depth))
            return
        # picking order exhausted: natural leaf, caller backtracks

    def run(self) -> tuple[Solution, Optional[list[TraceEvent]]]:
        started = time.monotonic()
        try:
            for root_idx in range(len(self.units)):
                self._expand(PackingState.empty(self.pallet), root_idx, 0, skippable=False)
        except _Deadline:
            self.timed_out = True
        elapsed_ms = int((time.monotonic() - started) * 1000)
        stats = SearchStats(
            nodes_expanded=self.nodes_expanded,
            nodes_pruned_by_bound=self.nodes_pruned,
            candidates_evaluated=self.candidates_evaluated,
            elapsed_ms=elapsed_ms,
            timed_out=self.timed_out,
        )
        sol = Solution(
            placements=self.incumbent.placements,
            placed_volume=self.incumbent_volume,
            utilization=self.incumbent_volume / self.pallet.volume(),
            stats=stats,
            pallet=self.pallet,
        )
        return sol, self.trace


def solve(units: Sequence[TransportUnit], pallet: Pallet, params: SolverParams) -> Solution:
    """Best configuration found before the tree or the time limit runs out."""
    _validate_instance(units)
    sol, _ = _Searcher(units, pallet, params, trace=None).run()
    return sol


def solve_with_trace(
    units: Sequence[TransportUnit], pallet: Pallet, params: SolverParams
) -> tuple[Solution, list[TraceEvent]]:
    """Like :func:`solve`, also returning the ordered event log."""
    _validate_instance(units)
    sol, trace = _Searcher(units, pallet, params, trace=[]).run()
    assert trace is not None
    return sol, trace
