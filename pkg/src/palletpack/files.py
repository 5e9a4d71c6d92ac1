"""Instance and solution files.

Both formats are plain JSON. An instance names the pallet, the units in
picking order, and optional solver parameters; a solution records the
chosen placements plus enough context (effective parameters, input digest)
to re-validate it independently. Serialization is canonical so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass
from typing import Any

from .feasibility import check_overlap_bounds, check_placement
from .model import (
    Dims,
    PackingState,
    Pallet,
    Placement,
    SearchStats,
    Solution,
    SolverParams,
    TransportUnit,
    oriented,
    volume,
)

PARAM_FIELDS = (
    "vertical_support_min",
    "horizontal_support_min_x",
    "horizontal_support_min_y",
    "gap_tolerance",
    "p_x",
    "p_y",
    "p_z",
    "max_branches",
    "time_limit_ms",
    "bound_mode",
)


class InstanceFormatError(ValueError):
    """Raised with a message naming the offending field and constraint."""


@dataclass(frozen=True)
class InstanceFile:
    pallet: Pallet
    units: tuple[TransportUnit, ...]
    params: SolverParams


@dataclass(frozen=True)
class SolutionPlacement:
    id: str
    x: int
    y: int
    z: int
    rotated: bool


@dataclass(frozen=True)
class SolutionFile:
    placements: tuple[SolutionPlacement, ...]
    placed_volume: int
    utilization: float
    stats: dict[str, Any]
    params_echo: SolverParams
    instance_digest: str


def _need(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise InstanceFormatError(f"{where}: missing required field {key!r}")
    return obj[key]


def _pos_int(value: Any, field: str, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f"{where}: field {field!r} must be an integer, got {value!r}")
    if value <= 0:
        raise InstanceFormatError(f"{where}: field {field!r} must be positive, got {value}")
    return value


def parse_params(obj: dict, where: str = "params") -> SolverParams:
    unknown = set(obj) - set(PARAM_FIELDS)
    if unknown:
        raise InstanceFormatError(f"{where}: unknown field(s) {sorted(unknown)}")
    try:
        return SolverParams(**obj)
    except (TypeError, ValueError) as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc


def parse_instance(text: str) -> InstanceFile:
    """Parse and fully validate an instance document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"instance is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance: top level must be an object")

    pal = _need(doc, "pallet", "instance")
    if not isinstance(pal, dict):
        raise InstanceFormatError("pallet: must be an object")
    pallet = Pallet(
        _pos_int(_need(pal, "width", "pallet"), "width", "pallet"),
        _pos_int(_need(pal, "depth", "pallet"), "depth", "pallet"),
        _pos_int(_need(pal, "max_height", "pallet"), "max_height", "pallet"),
    )

    raw_units = _need(doc, "units", "instance")
    if not isinstance(raw_units, list) or not raw_units:
        raise InstanceFormatError("units: must be a nonempty list (picking order)")
    units = []
    seen: set[str] = set()
    for i, ru in enumerate(raw_units):
        where = f"units[{i}]"
        if not isinstance(ru, dict):
            raise InstanceFormatError(f"{where}: must be an object")
        uid = _need(ru, "id", where)
        if not isinstance(uid, str) or not uid:
            raise InstanceFormatError(f"{where}: field 'id' must be a nonempty string")
        if uid in seen:
            raise InstanceFormatError(f"units: duplicate id {uid!r}")
        seen.add(uid)
        dims = Dims(
            _pos_int(_need(ru, "w", where), "w", f"unit {uid!r}"),
            _pos_int(_need(ru, "d", where), "d", f"unit {uid!r}"),
            _pos_int(_need(ru, "h", where), "h", f"unit {uid!r}"),
        )
        units.append(TransportUnit(uid, dims, i))

    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise InstanceFormatError("params: must be an object")
    params = parse_params(raw_params)

    extra = set(doc) - {"pallet", "units", "params"}
    if extra:
        raise InstanceFormatError(f"instance: unknown field(s) {sorted(extra)}")
    return InstanceFile(pallet, tuple(units), params)


def serialize_instance(instance: InstanceFile) -> str:
    doc = {
        "pallet": {
            "width": instance.pallet.width,
            "depth": instance.pallet.depth,
            "max_height": instance.pallet.max_height,
        },
        "units": [
            {"id": u.id, "w": u.dims.w, "d": u.dims.d, "h": u.dims.h}
            for u in instance.units
        ],
        "params": asdict(instance.params),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def instance_digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def build_solution_file(
    solution: Solution, params: SolverParams, instance_text: str
) -> SolutionFile:
    """Assemble the solution document for a finished run.

    elapsed_ms is deliberately left out of the serialized stats so reruns
    of the same input are byte-identical.
    """
    stats = {
        "nodes_expanded": solution.stats.nodes_expanded,
        "nodes_pruned_by_bound": solution.stats.nodes_pruned_by_bound,
        "candidates_evaluated": solution.stats.candidates_evaluated,
        "timed_out": solution.stats.timed_out,
    }
    return SolutionFile(
        placements=tuple(
            SolutionPlacement(pl.unit_id, pl.x, pl.y, pl.z, pl.rotated)
            for pl in solution.placements
        ),
        placed_volume=solution.placed_volume,
        utilization=solution.utilization,
        stats=stats,
        params_echo=params,
        instance_digest=instance_digest(instance_text),
    )


def solution_to_json(sf: SolutionFile) -> str:
    doc = {
        "placements": [asdict(p) for p in sf.placements],
        "placed_volume": sf.placed_volume,
        "utilization": sf.utilization,
        "stats": sf.stats,
        "params_echo": asdict(sf.params_echo),
        "instance_digest": sf.instance_digest,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_solution(text: str) -> SolutionFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"solution is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("solution: top level must be an object")
    try:
        placements = tuple(
            SolutionPlacement(p["id"], p["x"], p["y"], p["z"], p["rotated"])
            for p in doc["placements"]
        )
        return SolutionFile(
            placements=placements,
            placed_volume=doc["placed_volume"],
            utilization=doc["utilization"],
            stats=doc["stats"],
            params_echo=parse_params(doc["params_echo"], "params_echo"),
            instance_digest=doc["instance_digest"],
        )
    except (KeyError, TypeError) as exc:
        raise InstanceFormatError(f"solution: malformed document ({exc})") from exc


def solution_from_file(sf: SolutionFile, instance: InstanceFile) -> Solution:
    """Rebuild a model Solution (with oriented dims) from a solution file.

    Geometry must be valid; run validate_solution first for untrusted input.
    """
    units_by_id = {u.id: u for u in instance.units}
    placements = tuple(
        Placement(sp.id, (sp.x, sp.y, sp.z), oriented(units_by_id[sp.id], sp.rotated), sp.rotated)
        for sp in sf.placements
    )
    stats = SearchStats(
        nodes_expanded=sf.stats.get("nodes_expanded", 0),
        nodes_pruned_by_bound=sf.stats.get("nodes_pruned_by_bound", 0),
        candidates_evaluated=sf.stats.get("candidates_evaluated", 0),
        timed_out=sf.stats.get("timed_out", False),
    )
    return Solution(
        placements=placements,
        placed_volume=sf.placed_volume,
        utilization=sf.utilization,
        stats=stats,
        pallet=instance.pallet,
    )


def validate_solution(
    sf: SolutionFile, instance: InstanceFile, instance_text: str | None = None
) -> list[str]:
    """Re-check a solution against the instance; returns violations.

    Placements are replayed in order, each checked against only the units
    placed before it, with the thresholds the solution claims it was
    solved with (params_echo).
    """
    violations: list[str] = []
    units_by_id = {u.id: u for u in instance.units}
    params = sf.params_echo

    if instance_text is not None and instance_digest(instance_text) != sf.instance_digest:
        violations.append("instance digest does not match the provided instance")

    last_order = -1
    state = PackingState.empty(instance.pallet)
    total = 0
    for i, sp in enumerate(sf.placements):
        unit = units_by_id.get(sp.id)
        if unit is None:
            violations.append(f"placement {i}: unknown unit id {sp.id!r}")
            continue
        if unit.order_index <= last_order:
            violations.append(
                f"placement {i} ({sp.id}): violates picking order "
                f"(order_index {unit.order_index} after {last_order})"
            )
        last_order = max(last_order, unit.order_index)
        dims = oriented(unit, sp.rotated)
        pos = (sp.x, sp.y, sp.z)
        if min(pos) < 0 or not check_overlap_bounds(state, pos, dims):
            violations.append(
                f"placement {i} ({sp.id}): overlaps another unit or exceeds pallet bounds"
            )
            continue
        report = check_placement(state, pos, dims, params)
        if not report.feasible:
            violations.append(
                f"placement {i} ({sp.id}): insufficient support "
                f"(vertical {float(report.vertical_fraction):.3f}, "
                f"x {float(report.horiz_x_fraction):.3f}, "
                f"y {float(report.horiz_y_fraction):.3f})"
            )
        state = state.with_placement(Placement(sp.id, pos, dims, sp.rotated))
        total += volume(dims)

    if total != sf.placed_volume:
        violations.append(
            f"placed_volume {sf.placed_volume} does not match placements (recomputed {total})"
        )
    expected_util = total / instance.pallet.volume()
    if not math.isclose(sf.utilization, expected_util, rel_tol=1e-9, abs_tol=1e-12):
        violations.append(
            f"utilization {sf.utilization} does not match recomputed {expected_util}"
        )
    return violations
