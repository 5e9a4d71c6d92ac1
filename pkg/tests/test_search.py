import dataclasses
import random
import time

import pytest

from palletpack.feasibility import check_placement
from palletpack.model import (
    Dims,
    PackingState,
    Pallet,
    SolverParams,
    TransportUnit,
    oriented,
)
from palletpack.oracle import exhaustive_solve
from palletpack.search import solve, solve_with_trace

from conftest import random_solver_instance

P0 = SolverParams(vertical_support_min=0.0, max_branches=10**6, time_limit_ms=10**9)


def _unit(i, w, d, h):
    return TransportUnit(f"u{i}", Dims(w, d, h), i)


def test_single_unit_placed_at_origin(pallet_4x3x10):
    sol = solve([_unit(0, 2, 2, 1)], pallet_4x3x10, P0)
    assert len(sol.placements) == 1
    assert sol.placements[0].position == (0, 0, 0)
    assert sol.placed_volume == 4
    assert sol.utilization == 4 / 120


def test_oversized_unit_yields_empty_solution(pallet_4x3x10):
    sol = solve([_unit(0, 5, 5, 5)], pallet_4x3x10, P0)
    assert sol.placements == ()
    assert sol.placed_volume == 0
    assert sol.utilization == 0.0


def test_three_unit_stack_reaches_optimum():
    pal = Pallet(4, 2, 2)
    units = [_unit(i, 2, 2, 1) for i in range(3)]
    sol = solve(units, pal, P0)
    oracle = exhaustive_solve(units, pal, P0)
    assert sol.placed_volume == 12
    assert oracle.placed_volume == 12


def test_rotation_is_used_when_needed():
    pal = Pallet(2, 4, 5)
    sol = solve([_unit(0, 4, 2, 1)], pal, P0)
    assert len(sol.placements) == 1
    assert sol.placements[0].rotated
    assert sol.placements[0].oriented_dims == Dims(2, 4, 1)


def test_solve_is_deterministic():
    rng = random.Random(99)
    units, pallet, params = random_solver_instance(rng, max_units=5)
    a = solve(units, pallet, params)
    b = solve(units, pallet, params)
    assert a.placements == b.placements
    assert a.placed_volume == b.placed_volume
    assert a.utilization == b.utilization
    sa = dataclasses.replace(a.stats, elapsed_ms=0)
    sb = dataclasses.replace(b.stats, elapsed_ms=0)
    assert sa == sb


def test_placements_respect_picking_order():
    rng = random.Random(4)
    for _ in range(20):
        units, pallet, params = random_solver_instance(rng, max_units=6)
        sol = solve(units, pallet, params)
        order = {u.id: u.order_index for u in units}
        indices = [order[pl.unit_id] for pl in sol.placements]
        assert indices == sorted(indices)
        assert len(set(indices)) == len(indices)


def test_every_solution_revalidates():
    rng = random.Random(12)
    for _ in range(20):
        units, pallet, params = random_solver_instance(rng, max_units=6)
        sol = solve(units, pallet, params)
        by_id = {u.id: u for u in units}
        state = PackingState.empty(pallet)
        for pl in sol.placements:
            dims = oriented(by_id[pl.unit_id], pl.rotated)
            assert dims == pl.oriented_dims
            report = check_placement(state, pl.position, dims, params)
            assert report.feasible
            state = state.with_placement(pl)


def test_solve_matches_exhaustive_oracle_small_batch():
    rng = random.Random(21)
    for _ in range(15):
        units, pallet, params = random_solver_instance(rng, max_units=4)
        sol = solve(units, pallet, params)
        oracle = exhaustive_solve(units, pallet, params)
        assert sol.placed_volume == oracle.placed_volume
        assert sol.placements == oracle.placements


def test_trace_single_unit(pallet_4x3x10):
    _, trace = solve_with_trace([_unit(0, 2, 2, 1)], pallet_4x3x10, P0)
    kinds = [e.kind for e in trace]
    assert kinds.count("place") == 1
    assert kinds.count("incumbent") == 1


def test_trace_skip_when_second_unit_never_fits(pallet_4x3x10):
    # wide but low-volume, so descent is not cut off by the bound
    units = [_unit(0, 2, 2, 1), _unit(1, 5, 1, 1)]
    _, trace = solve_with_trace(units, pallet_4x3x10, P0)
    skips = [e for e in trace if e.kind == "skip"]
    assert skips and all(e.unit_id == "u1" for e in skips)
    descents = [e for e in trace if e.kind == "place" and e.purpose == "descend"]
    assert len(skips) == len(descents)


def test_trace_prune_cuts_descent(pallet_4x3x10):
    # root pass places everything; the later root with the tiny remainder
    # cannot beat it and is bounded out
    units = [_unit(0, 4, 3, 9), _unit(1, 1, 1, 1), _unit(2, 1, 1, 1)]
    sol, trace = solve_with_trace(units, pallet_4x3x10, P0)
    oracle = exhaustive_solve(units, pallet_4x3x10, P0)
    assert sol.placed_volume == oracle.placed_volume
    prunes = [i for i, e in enumerate(trace) if e.kind == "prune"]
    assert prunes
    for i in prunes:
        following = trace[i + 1]
        assert following.kind in ("expand", "backtrack")
        if following.kind == "expand":
            assert following.depth == 0  # next root, not a descent


def test_trace_incumbent_volumes_nondecreasing():
    rng = random.Random(33)
    units, pallet, params = random_solver_instance(rng, max_units=5)
    sol, trace = solve_with_trace(units, pallet, params)
    volumes = [e.volume for e in trace if e.kind == "incumbent"]
    assert volumes == sorted(volumes)
    if volumes:
        assert volumes[-1] == sol.placed_volume
    else:
        assert sol.placed_volume == 0


def test_trace_replays_to_the_solution():
    rng = random.Random(17)
    units, pallet, params = random_solver_instance(rng, max_units=5)
    sol, trace = solve_with_trace(units, pallet, params)
    incumbents = [e for e in trace if e.kind == "incumbent"]
    if incumbents:
        last = incumbents[-1].placements
        assert last == tuple(
            (pl.unit_id, pl.position, pl.rotated) for pl in sol.placements
        )


def test_time_limit_returns_incumbent_quickly():
    rng = random.Random(8)
    units = [
        TransportUnit(f"u{i}", Dims(rng.randint(50, 300), rng.randint(50, 300),
                                    rng.randint(50, 300)), i)
        for i in range(30)
    ]
    pallet = Pallet(1200, 800, 1000)
    params = SolverParams(vertical_support_min=0.7, time_limit_ms=150, max_branches=4)
    start = time.monotonic()
    sol = solve(units, pallet, params)
    wall = (time.monotonic() - start) * 1000
    assert sol.stats.timed_out
    assert wall < 1000
    assert sol.stats.elapsed_ms <= 1000


def test_invalid_instances_rejected(pallet_4x3x10):
    with pytest.raises(ValueError):
        solve([], pallet_4x3x10, P0)
    dup = [
        TransportUnit("a", Dims(1, 1, 1), 0),
        TransportUnit("a", Dims(1, 1, 1), 1),
    ]
    with pytest.raises(ValueError):
        solve(dup, pallet_4x3x10, P0)
    bad_order = [
        TransportUnit("a", Dims(1, 1, 1), 0),
        TransportUnit("b", Dims(1, 1, 1), 2),
    ]
    with pytest.raises(ValueError):
        solve(bad_order, pallet_4x3x10, P0)


def test_branch_cap_limits_children():
    rng = random.Random(55)
    units, pallet, _ = random_solver_instance(rng, max_units=5)
    wide = SolverParams(vertical_support_min=0.0, max_branches=10**6, time_limit_ms=10**9)
    narrow = dataclasses.replace(wide, max_branches=1)
    a = solve(units, pallet, wide)
    b = solve(units, pallet, narrow)
    assert b.stats.nodes_expanded <= a.stats.nodes_expanded
    assert b.placed_volume <= a.placed_volume
