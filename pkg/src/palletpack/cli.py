"""Command-line front end.

    palletpack solve INSTANCE [options]
    palletpack validate SOLUTION INSTANCE

Exit codes: 0 success (a timed-out solve still exits 0 and records
timed_out in the output), 1 failed validation or failed --seed-check,
2 unparseable input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .files import (
    InstanceFormatError,
    build_solution_file,
    parse_instance,
    parse_solution,
    solution_to_json,
    validate_solution,
)
from .search import solve, solve_with_trace
from .svg import render_svg

_BOUND_MODES = {"exact": "exact_knapsack", "lp": "lp_relaxation"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="palletpack")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve an instance file")
    ps.add_argument("instance", type=Path)
    ps.add_argument("--out", type=Path, help="write the solution file here (default: stdout)")
    ps.add_argument("--svg", type=Path, help="render the configuration to this SVG file")
    ps.add_argument("--trace", type=Path, help="write search events here, one JSON per line")
    ps.add_argument("--time-limit-ms", type=int)
    ps.add_argument("--max-branches", type=int)
    ps.add_argument("--bound-mode", choices=sorted(_BOUND_MODES))
    ps.add_argument("--vertical-support", type=float, help="minimum bottom-face support fraction")
    ps.add_argument("--horizontal-support-x", type=float)
    ps.add_argument("--horizontal-support-y", type=float)
    ps.add_argument("--gap", type=int, help="support gap tolerance in mm")
    ps.add_argument("--px", type=int, help="coplanarity tolerance on +x faces, mm")
    ps.add_argument("--py", type=int, help="coplanarity tolerance on +y faces, mm")
    ps.add_argument("--pz", type=int, help="coplanarity tolerance on unit tops, mm")
    ps.add_argument(
        "--seed-check", action="store_true",
        help="solve twice and fail unless both runs serialize identically",
    )

    pv = sub.add_parser("validate", help="re-check a solution against its instance")
    pv.add_argument("solution", type=Path)
    pv.add_argument("instance", type=Path)
    return parser


def _effective_params(file_params, args):
    overrides = {
        "time_limit_ms": args.time_limit_ms,
        "max_branches": args.max_branches,
        "bound_mode": _BOUND_MODES[args.bound_mode] if args.bound_mode else None,
        "vertical_support_min": args.vertical_support,
        "horizontal_support_min_x": args.horizontal_support_x,
        "horizontal_support_min_y": args.horizontal_support_y,
        "gap_tolerance": args.gap,
        "p_x": args.px,
        "p_y": args.py,
        "p_z": args.pz,
    }
    changes = {k: v for k, v in overrides.items() if v is not None}
    return dataclasses.replace(file_params, **changes) if changes else file_params


def _cmd_solve(args) -> int:
    try:
        text = args.instance.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.instance}: {exc}", file=sys.stderr)
        return 2
    try:
        instance = parse_instance(text)
        params = _effective_params(instance.params, args)
    except (InstanceFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.trace:
        solution, trace = solve_with_trace(instance.units, instance.pallet, params)
        with args.trace.open("w", encoding="utf-8") as fh:
            for ev in trace:
                fh.write(json.dumps(ev.as_dict(), sort_keys=True) + "\n")
    else:
        solution = solve(instance.units, instance.pallet, params)

    payload = solution_to_json(build_solution_file(solution, params, text))

    if args.seed_check:
        rerun = solve(instance.units, instance.pallet, params)
        if solution_to_json(build_solution_file(rerun, params, text)) != payload:
            print("seed-check: FAILED, reruns differ", file=sys.stderr)
            return 1
        print("seed-check: ok, reruns identical", file=sys.stderr)

    if args.out:
        args.out.write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    if args.svg:
        args.svg.write_text(render_svg(solution), encoding="utf-8")
    if solution.stats.timed_out:
        print(
            f"time limit reached after {solution.stats.elapsed_ms} ms; "
            "best configuration so far written",
            file=sys.stderr,
        )
    return 0


def _cmd_validate(args) -> int:
    try:
        sol_text = args.solution.read_text(encoding="utf-8")
        inst_text = args.instance.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    try:
        sf = parse_solution(sol_text)
        instance = parse_instance(inst_text)
    except (InstanceFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    violations = validate_solution(sf, instance, inst_text)
    if violations:
        for v in violations:
            print(f"INVALID: {v}")
        return 1
    print(f"valid: {len(sf.placements)} placements, utilization {sf.utilization:.4f}")
    return 0


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "solve":
        return _cmd_solve(args)
    return _cmd_validate(args)


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
