"""Separated nets: one reference point per tile of a final-scale patch.

Mirror half-tiles are paired through their shared (apex, axis_end) edge and
each full tile contributes the center of its inscribed circle.  Both centers
are exact ring points:

    kite:  apex + (axis_end - apex)/phi    (incircle radius sin 36)
    dart:  axis_end + (apex - axis_end)/phi (incircle radius sin 36 / phi)

and both are equidistant from all four side lines of their tile.  Half-tiles
on the patch boundary whose mirror partner is missing contribute the same
full-tile point (it lies on the half's closed axis edge), which keeps every
net point an exact integer ring point; this affects only O(perimeter) points.

The farthest any location of a tile can be from its own reference point is
sqrt(3 - phi) ~= 1.17557 (the dart point to its wing vertices), which bounds
the covering radius of any net extracted here.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from .golden import CycloPoint, PHI_FLOAT
from .tiling import (
    EMBED_MATRIX,
    HALF_DART,
    HALF_KITE,
    Patch,
    Square,
    _MINV,
)

SOURCE_NAMES = {HALF_KITE: "kite", HALF_DART: "dart"}

# max distance from the in-point to a vertex, over both prototile shapes
COVERING_RADIUS_BOUND = math.sqrt(3.0 - PHI_FLOAT)

C2_GRID_STEP = 0.05
C2_ERROR_BOUND = C2_GRID_STEP * math.sqrt(2.0)


def full_tile_incenter(kind: int, apex: CycloPoint, axis_end: CycloPoint) -> CycloPoint:
    """Exact incircle center of the full tile with this symmetry axis."""
    if kind == HALF_KITE:
        return apex + (axis_end - apex).times_inv_phi()
    return axis_end + (apex - axis_end).times_inv_phi()


class NetPoint(NamedTuple):
    x: float
    y: float
    origin: CycloPoint | None
    source_kind: int
    tile_id: int


class Net:
    """Point set with provenance, a window square, and Delone statistics.

    ``c1`` (minimum pairwise distance) and ``c2`` (sampled covering radius
    over the analysis region) are computed lazily on first access; the big
    counting pipelines never need them.  ``c2`` is a grid-sampled lower
    estimate of the true covering radius with one-sided error at most
    ``C2_ERROR_BOUND``.
    """

    def __init__(
        self,
        xy: np.ndarray,
        source_kinds: np.ndarray,
        tile_ids: np.ndarray,
        window: Square,
        ring: np.ndarray | None = None,
        outline: np.ndarray | None = None,
    ) -> None:
        self.xy = np.ascontiguousarray(xy, dtype=np.float64)
        self.source_kinds = np.ascontiguousarray(source_kinds, dtype=np.uint8)
        self.tile_ids = np.ascontiguousarray(tile_ids, dtype=np.int64)
        if self.xy.ndim != 2 or self.xy.shape[1] != 2:
            raise ValueError("xy must have shape (M, 2)")
        if len(self.source_kinds) != len(self.xy) or len(self.tile_ids) != len(self.xy):
            raise ValueError("parallel arrays must have equal length")
        if len(self.xy) == 0:
            raise ValueError("empty net")
        self.window = Square(*window)
        self.ring = None if ring is None else np.ascontiguousarray(ring, dtype=np.int64)
        self.outline = None if outline is None else np.asarray(outline, dtype=np.float64)
        for arr in (self.xy, self.source_kinds, self.tile_ids, self.ring):
            if arr is not None:
                arr.flags.writeable = False

    def __len__(self) -> int:
        return len(self.xy)

    def point(self, i: int) -> NetPoint:
        origin = None if self.ring is None else CycloPoint(*map(int, self.ring[i]))
        return NetPoint(
            float(self.xy[i, 0]), float(self.xy[i, 1]),
            origin, int(self.source_kinds[i]), int(self.tile_ids[i]),
        )

    def points(self) -> Iterator[NetPoint]:
        return (self.point(i) for i in range(len(self)))

    @cached_property
    def _tree(self) -> cKDTree:
        return cKDTree(self.xy)

    @cached_property
    def c1(self) -> float:
        """Exact minimum pairwise distance (nearest-neighbor query)."""
        if len(self) < 2:
            raise ValueError("c1 needs at least two points")
        d, _ = self._tree.query(self.xy, k=2)
        return float(d[:, 1].min())

    def _c2_region_mask(self, pts: np.ndarray) -> np.ndarray:
        if self.outline is None:
            return np.ones(len(pts), dtype=bool)
        tri = self.outline
        keep = np.ones(len(pts), dtype=bool)
        for i in range(3):
            a = tri[i]
            b = tri[(i + 1) % 3]
            cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
            orient = (b[0] - a[0]) * (tri[(i + 2) % 3][1] - a[1]) - (b[1] - a[1]) * (tri[(i + 2) % 3][0] - a[0])
            keep &= cross * np.sign(orient) >= -1e-9
        return keep

    @cached_property
    def c2(self) -> float:
        """Sampled covering radius over the window, grid step C2_GRID_STEP.

        For nets extracted from non-covering patches the sampling region is
        the patch outline triangle intersected with the window's bounding
        grid, since locations outside the patch union are not covered.
        """
        x0, y0, side = self.window
        xs = np.arange(x0, x0 + side + C2_GRID_STEP / 2, C2_GRID_STEP)
        ys = np.arange(y0, y0 + side + C2_GRID_STEP / 2, C2_GRID_STEP)
        worst = 0.0
        tree = self._tree
        chunk = max(1, int(2_000_000 // max(len(xs), 1)))
        for start in range(0, len(ys), chunk):
            yy = ys[start:start + chunk]
            gx, gy = np.meshgrid(xs, yy, indexing="ij")
            pts = np.column_stack([gx.ravel(), gy.ravel()])
            mask = self._c2_region_mask(pts)
            if not mask.any():
                continue
            d, _ = tree.query(pts[mask], k=1)
            worst = max(worst, float(d.max()))
        return worst

    @property
    def c2_error_bound(self) -> float:
        return C2_ERROR_BOUND


def extract_net(p: Patch, window: Square | tuple | None = None) -> Net:
    """Pair mirror halves of a final-scale patch and emit tile incenters.

    Pre: ``p.scale_exp == 0`` (tile edge lengths 1 and phi).  Halves pair
    exactly on (kind, apex, axis_end); a key shared by more than two halves
    means the patch is not a legal tiling fragment.  Points are ordered by
    the patch index of their first contributing half-tile.

    ``window`` overrides the net's counting window; by default it is the
    covering square recorded by the patch generator, or a padded bounding
    box when none was recorded.
    """
    if len(p) == 0:
        raise ValueError("empty net")
    if p.scale_exp != 0:
        raise ValueError(
            f"net extraction requires final-scale tiles (scale_exp 0), got {p.scale_exp}"
        )
    n = len(p)
    keys = np.empty((n, 9), dtype=np.int64)
    keys[:, 0] = p.kinds
    keys[:, 1:5] = p.coords[:, 1]
    keys[:, 5:9] = p.coords[:, 2]
    order = np.lexsort(keys.T[::-1])
    sk = keys[order]
    new_group = np.empty(n, dtype=bool)
    new_group[0] = True
    new_group[1:] = (sk[1:] != sk[:-1]).any(axis=1)
    starts = np.flatnonzero(new_group)
    sizes = np.diff(np.append(starts, n))
    if sizes.max(initial=1) > 2:
        raise ValueError("more than two half-tiles share a symmetry axis; invalid patch")
    pair_chir = np.add.reduceat(p.chiralities[order].astype(np.int64), starts)
    if np.any(pair_chir[sizes == 2] != 0):
        raise ValueError("paired half-tiles must have opposite chirality")

    reps = order[starts]
    kinds = p.kinds[reps]
    apex = p.coords[reps, 1]
    axis_end = p.coords[reps, 2]
    ring = np.empty_like(apex)
    kite_rows = kinds == HALF_KITE
    ring[kite_rows] = apex[kite_rows] + (axis_end[kite_rows] - apex[kite_rows]) @ _MINV
    dart_rows = ~kite_rows
    ring[dart_rows] = axis_end[dart_rows] + (apex[dart_rows] - axis_end[dart_rows]) @ _MINV

    tile_ids = np.minimum.reduceat(order, starts)
    out = np.argsort(tile_ids, kind="stable")

    xy = ring[out].astype(np.float64) @ EMBED_MATRIX
    prov = p.provenance
    outline = None
    if "outline" in prov:
        outline = np.asarray(prov["outline"], dtype=np.int64).astype(np.float64) @ EMBED_MATRIX
    if window is not None:
        window = Square(*window)
    elif "square" in prov:
        window = Square(*prov["square"])
    else:
        lo = xy.min(axis=0)
        extent = float((xy.max(axis=0) - lo).max())
        window = Square(float(lo[0]) - 1.0, float(lo[1]) - 1.0, extent + 2.0)
    return Net(
        xy,
        kinds[out],
        tile_ids[out],
        window,
        ring=ring[out],
        outline=outline,
    )


def count_in_square(net: Net, square: Square | tuple) -> tuple[int, int]:
    """Half-open point counts [x, x+l) x [y, y+l), split by source kind."""
    square = Square(*square)
    wx, wy, wside = net.window
    eps = 1e-9
    if not (
        square.x >= wx - eps
        and square.y >= wy - eps
        and square.x + square.side <= wx + wside + eps
        and square.y + square.side <= wy + wside + eps
    ):
        raise ValueError("square extends outside the net window")
    x, y = net.xy[:, 0], net.xy[:, 1]
    mask = (x >= square.x) & (x < square.x + square.side) & (y >= square.y) & (y < square.y + square.side)
    kites = int(np.count_nonzero(mask & (net.source_kinds == HALF_KITE)))
    darts = int(np.count_nonzero(mask)) - kites
    return kites, darts


def export_net(net: Net, path: str) -> None:
    """Write one point per line (x, y, source_kind, tile_id) with a stats header."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("# penrosenet net v1\n")
        fh.write(f"# points {len(net)}\n")
        fh.write(f"# c1 {net.c1:.12g}\n")
        fh.write(f"# c2 {net.c2:.12g} error_bound {net.c2_error_bound:.12g}\n")
        fh.write(
            f"# window {net.window.x:.12g} {net.window.y:.12g} {net.window.side:.12g}\n"
        )
        for i in range(len(net)):
            fh.write(
                f"{net.xy[i, 0]:.12g} {net.xy[i, 1]:.12g} "
                f"{SOURCE_NAMES[int(net.source_kinds[i])]} {int(net.tile_ids[i])}\n"
            )


def load_net(path: str) -> Net:
    """Read the export_net format (positions are the rounded floats)."""
    window = None
    xs: list[float] = []
    ys: list[float] = []
    kinds: list[int] = []
    ids: list[int] = []
    name_codes = {v: k for k, v in SOURCE_NAMES.items()}
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if parts and parts[0] == "window":
                    window = Square(float(parts[1]), float(parts[2]), float(parts[3]))
                continue
            px, py, kind, tid = line.split()
            xs.append(float(px))
            ys.append(float(py))
            kinds.append(name_codes[kind])
            ids.append(int(tid))
    if window is None:
        raise ValueError("net file missing window header")
    return Net(np.column_stack([xs, ys]), np.array(kinds), np.array(ids), window)
