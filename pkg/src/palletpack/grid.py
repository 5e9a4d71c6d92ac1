"""Pallet-space discretization and the unused-volume measure.

Corner points of the placed units are projected onto the horizontal axes,
giving cut arrays along x and y. The cells of the resulting mesh carry the
height envelope: the top of the tallest unit whose footprint covers the
cell. The unused volume is everything between that envelope and the pallet
ceiling; later units can only land at or above the envelope because of the
fixed loading order, so this is the capacity available to them.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .model import PackingState


@dataclass(frozen=True)
class GridAxes:
    """Strictly increasing cut coordinates along x and y.

    Both arrays start at 0, end at the pallet extent, and contain every
    face coordinate of every placed unit on that axis.
    """

    dx: tuple[int, ...]
    dy: tuple[int, ...]


@dataclass(frozen=True)
class HeightEnvelope:
    """Per-cell maximum unit top over the mesh grid.

    ``cell_height[a][b]`` covers the cell between dx[a]..dx[a+1] and
    dy[b]..dy[b+1].
    """

    axes: GridAxes
    cell_height: tuple[tuple[int, ...], ...]


def build_axes(state: PackingState) -> GridAxes:
    """Deduplicated ascending cut arrays including the pallet boundaries."""
    xs = {0, state.pallet.width}
    ys = {0, state.pallet.depth}
    for pl in state.placements:
        xs.add(pl.x)
        xs.add(pl.x2)
        ys.add(pl.y)
        ys.add(pl.y2)
    return GridAxes(tuple(sorted(xs)), tuple(sorted(ys)))


def cell_units(state: PackingState, axes: GridAxes, j: int, k: int) -> set[int]:
    """Indices of placements whose footprint covers the cell anchored at
    (dx[j-1], dy[k-1]).

    Indices j, k are 1-based with 2 <= j <= len(dx) and 2 <= k <= len(dy);
    footprints are half-open, so a face coordinate belongs to the cell on
    its right/upper side only.
    """
    if not (2 <= j <= len(axes.dx)) or not (2 <= k <= len(axes.dy)):
        raise IndexError(f"cell index ({j}, {k}) out of range")
    ax = axes.dx[j - 2]
    ay = axes.dy[k - 2]
    out = set()
    for i, pl in enumerate(state.placements):
        if pl.x <= ax < pl.x2 and pl.y <= ay < pl.y2:
            out.add(i)
    return out


def _cell_heights(state: PackingState, axes: GridAxes) -> list[list[int]]:
    dx, dy = axes.dx, axes.dy
    heights = [[0] * (len(dy) - 1) for _ in range(len(dx) - 1)]
    for pl in state.placements:
        a0 = bisect_left(dx, pl.x)
        a1 = bisect_left(dx, pl.x2)
        b0 = bisect_left(dy, pl.y)
        b1 = bisect_left(dy, pl.y2)
        top = pl.z2
        for a in range(a0, a1):
            row = heights[a]
            for b in range(b0, b1):
                if top > row[b]:
                    row[b] = top
    return heights


def height_envelope(state: PackingState) -> HeightEnvelope:
    """Envelope over the mesh grid of ``build_axes(state)``."""
    axes = build_axes(state)
    return HeightEnvelope(axes, tuple(tuple(r) for r in _cell_heights(state, axes)))


def unused_volume(state: PackingState) -> int:
    """Pallet volume above the height envelope and below max_height."""
    axes = build_axes(state)
    dx, dy = axes.dx, axes.dy
    heights = _cell_heights(state, axes)
    zp = state.pallet.max_height
    total = 0
    for a in range(len(dx) - 1):
        wa = dx[a + 1] - dx[a]
        row = heights[a]
        for b in range(len(dy) - 1):
            total += (zp - row[b]) * wa * (dy[b + 1] - dy[b])
    return total
