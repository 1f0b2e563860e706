"""Density and ratio statistics of net points in aligned squares.

The kite/dart count ratio of a deflated patch obeys the exact recursion
K' = 2K + D, D' = K + D, whose normalized form is the contraction
f(x) = (2x+1)/(x+1) with fixed point phi.  For a net of density rho, the
discrepancy of a square U is e_rho(U) = max(rho|U|/count, count/(rho|U|)),
and E_rho(2^i) is the sup of e_rho over integer-corner squares of side 2^i.
This module computes exact ratio traces, enumerates every integer-corner
square inside a net's window through prefix sums (an explicit lower bound
for the true sup), checks the phi^(-i/3) ratio and 10*phi^(-i/3) decay
bounds, analyses the supertile frame areas behind those bounds, and folds
E values into partial products whose convergence is the biLipschitz
criterion for the net.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .golden import CycloPoint, GoldenNum, PHI, PHI_FLOAT, golden_compare
from .net import Net
from .tiling import (
    EMBED_MATRIX,
    HALF_DART,
    HALF_KITE,
    KIND_CODES,
    Patch,
    Square,
    TileCensus,
    deflate_patch,
    embedded_outline,
    point_in_triangle,
    square_in_triangle,
    substitution_counts,
)

__all__ = [
    "DensityModel",
    "DiscrepancyReport",
    "RatioEntry",
    "RatioTrace",
    "RatioBoundCheck",
    "RegionCounts",
    "ReportRow",
    "build_report",
    "check_prop21",
    "check_prop22",
    "check_prop23",
    "compute_rho",
    "dart_area",
    "decay_bound",
    "default_density",
    "e_rho",
    "estimate_E_rho",
    "iterate_ratio_map",
    "kite_area",
    "partial_product",
    "ratio_bound",
    "ratio_map",
    "region_analysis",
    "report_to_csv",
    "report_to_json",
]


def ratio_map(x):
    """The contraction f(x) = (2x+1)/(x+1); exact for Fraction and GoldenNum."""
    if isinstance(x, GoldenNum):
        if x.sign() < 0:
            raise ValueError("ratio_map requires x >= 0")
        return (2 * x + 1) / (x + 1)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if x < 0:
            raise ValueError("ratio_map requires x >= 0")
        return (2 * x + 1) / (x + 1)
    x = float(x)
    if x < 0:
        raise ValueError("ratio_map requires x >= 0")
    return (2.0 * x + 1.0) / (x + 1.0)


def iterate_ratio_map(x0, n: int) -> list:
    """Exact iterates [x0, f(x0), ..., f^n(x0)] with gap certificates.

    Requires 1 <= x0 <= 2; verifies |f^k(x0) - phi| <= 4^(-k) exactly at
    every step (the contraction constant is 1/4 and |x0 - phi| <= 1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not isinstance(x0, GoldenNum):
        x0 = Fraction(x0)
        if not (1 <= x0 <= 2):
            raise ValueError("x0 must lie in [1, 2]")
    else:
        if golden_compare(x0, GoldenNum(1)) < 0 or golden_compare(x0, GoldenNum(2)) > 0:
            raise ValueError("x0 must lie in [1, 2]")
    values = [x0]
    for k in range(1, n + 1):
        nxt = ratio_map(values[-1])
        values.append(nxt)
        as_golden = nxt if isinstance(nxt, GoldenNum) else GoldenNum(nxt)
        gap = abs(as_golden - PHI)
        if golden_compare(gap, GoldenNum(Fraction(1, 4**k))) > 0:
            raise ArithmeticError(f"contraction bound violated at step {k}")
    return values


class RatioEntry(NamedTuple):
    n: int
    kites: int
    darts: int
    ratio: Fraction
    gap: GoldenNum
    bound: Fraction
    holds: bool


@dataclass(frozen=True)
class RatioTrace:
    """Exact |K_n/D_n - phi| <= 1/2^(n-1) certificates for a census seed."""

    seed: TileCensus
    entries: tuple[RatioEntry, ...]

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)


def check_prop21(seed: TileCensus, n_max: int = 25) -> RatioTrace:
    """Exact ratio-gap check for 3 <= n <= n_max from a generation-1 census.

    The seed census is the n = 1 row; row n uses n - 1 recursion steps.
    Requires at least one tile of each kind so every ratio is defined.
    """
    if seed.kites < 1 or seed.darts < 1:
        raise ValueError("seed census must have at least one half-kite and one half-dart")
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    entries = []
    for n in range(3, n_max + 1):
        counts = substitution_counts(seed, n - 1)
        ratio = Fraction(counts.kites, counts.darts)
        gap = abs(GoldenNum(ratio) - PHI)
        bound = Fraction(1, 2 ** (n - 1))
        holds = golden_compare(gap, GoldenNum(bound)) <= 0
        entries.append(RatioEntry(n, counts.kites, counts.darts, ratio, gap, bound, holds))
    return RatioTrace(seed, tuple(entries))


def _full_tile_area(kind: int) -> float:
    tri = np.array(Patch.single_tile(kind).coords[0], dtype=np.float64) @ EMBED_MATRIX
    u, v = tri[1] - tri[0], tri[2] - tri[0]
    return abs(float(u[0] * v[1] - u[1] * v[0]))


def dart_area() -> float:
    """Area of the full dart, from the exact unit seed then embedded."""
    return _full_tile_area(HALF_DART)


def kite_area() -> float:
    """Area of the full kite, from the exact unit seed then embedded."""
    return _full_tile_area(HALF_KITE)


def compute_rho(psi: float) -> float:
    """Net point density phi**2 / ((1 + phi**2) * psi) for dart area psi."""
    if psi <= 0:
        raise ValueError("psi must be positive")
    phi_sq = PHI_FLOAT * PHI_FLOAT
    return phi_sq / ((1.0 + phi_sq) * psi)


@dataclass(frozen=True)
class DensityModel:
    """Dart area psi and the implied point density rho."""

    psi: float
    rho: float

    def __post_init__(self) -> None:
        phi_sq = PHI_FLOAT * PHI_FLOAT
        if abs(self.rho * self.psi * (1.0 + phi_sq) - phi_sq) > 1e-12 * phi_sq:
            raise ValueError("rho, psi violate rho*psi*(1+phi^2) = phi^2")

    @classmethod
    def measured(cls) -> "DensityModel":
        psi = dart_area()
        return cls(psi, compute_rho(psi))


def default_density() -> DensityModel:
    return DensityModel.measured()


def e_rho(count: int, area: float, rho: float) -> float:
    """Discrepancy max(rho*area/count, count/(rho*area)) of one square."""
    if count == 0:
        raise ValueError("empty square")
    if count < 0 or area <= 0 or rho <= 0:
        raise ValueError("count must be >= 1 and area, rho positive")
    expected = rho * area
    return max(expected / count, count / expected)


def ratio_bound(i: int) -> float:
    """phi**(-i/3), the ratio-gap bound scale."""
    return PHI_FLOAT ** (-i / 3.0)


def decay_bound(i: int) -> float:
    """10 * phi**(-i/3), the E_rho - 1 decay bound."""
    return 10.0 * PHI_FLOAT ** (-i / 3.0)


def check_prop23(E: float, i: int) -> bool:
    """Whether E - 1 <= 10 * phi**(-i/3)."""
    if E < 1:
        raise ValueError("E must be >= 1")
    return E - 1.0 <= decay_bound(i)


class _CountGrid:
    """Per-unit-cell prefix sums of net points over an integer window.

    Point binning is half-open per cell, so counts over integer-corner
    squares from these prefix sums agree exactly with count_in_square.
    """

    def __init__(self, net: Net) -> None:
        x0, y0, side = net.window
        if (
            abs(x0 - round(x0)) > 1e-9
            or abs(y0 - round(y0)) > 1e-9
            or abs(side - round(side)) > 1e-9
        ):
            raise ValueError("square enumeration needs an integer-cornered window")
        self.x0 = int(round(x0))
        self.y0 = int(round(y0))
        self.side = int(round(side))
        if self.side < 1:
            raise ValueError("window too small")
        ix = np.floor(net.xy[:, 0] - self.x0).astype(np.int64)
        iy = np.floor(net.xy[:, 1] - self.y0).astype(np.int64)
        keep = (ix >= 0) & (ix < self.side) & (iy >= 0) & (iy < self.side)
        flat = ix[keep] * self.side + iy[keep]
        kinds = net.source_kinds[keep]
        ncell = self.side * self.side
        kite_cells = np.bincount(flat[kinds == HALF_KITE], minlength=ncell)
        dart_cells = np.bincount(flat[kinds == HALF_DART], minlength=ncell)
        self.cum_kites = self._cumulate(kite_cells.reshape(self.side, self.side))
        self.cum_darts = self._cumulate(dart_cells.reshape(self.side, self.side))

    @staticmethod
    def _cumulate(cells: np.ndarray) -> np.ndarray:
        side = cells.shape[0]
        cum = np.zeros((side + 1, side + 1), dtype=np.int64)
        cum[1:, 1:] = cells.cumsum(axis=0).cumsum(axis=1)
        return cum

    def square_counts(self, side: int) -> tuple[np.ndarray, np.ndarray]:
        """Counts over every [a, a+side) x [b, b+side) square; arrays indexed by offset."""
        if side < 1 or side > self.side:
            raise ValueError(f"window of side {self.side} cannot host squares of side {side}")
        out = []
        for cum in (self.cum_kites, self.cum_darts):
            out.append(
                cum[side:, side:] - cum[:-side, side:] - cum[side:, :-side] + cum[:-side, :-side]
            )
        return out[0], out[1]


def estimate_E_rho(net: Net, i: int, rho: float | None = None) -> float:
    """Max e_rho over all integer-corner squares of side 2**i in the window.

    A finite-window enumeration, hence a lower bound for the supremum over
    the infinite family of squares in the full plane.
    """
    if rho is None:
        rho = default_density().rho
    grid = _CountGrid(net)
    side = 2**i
    kites, darts = grid.square_counts(side)
    total = kites + darts
    if int(total.min()) == 0:
        raise ValueError("empty square")
    expected = rho * float(side) * float(side)
    e = np.maximum(expected / total, total / expected)
    return float(e.max())


@dataclass(frozen=True)
class RatioBoundCheck:
    """Worst kite/dart ratio gap over all side-2**i squares in a window."""

    i: int
    gap: float
    bound: float
    holds: bool
    squares_total: int
    squares_dart_free: int
    worst_square: Square
    worst_counts: TileCensus


def check_prop22(net: Net, i: int) -> RatioBoundCheck:
    """Empirical |K/D - phi| <= phi**(-i/3) over enumerated squares.

    The underlying guarantee is asymptotic (very large i); at desk scale
    this records hold/violate rather than asserting.  Dart-free squares are
    skipped and counted.
    """
    grid = _CountGrid(net)
    side = 2**i
    kites, darts = grid.square_counts(side)
    ok = darts > 0
    skipped = int(darts.size - ok.sum())
    if not ok.any():
        raise ValueError("every enumerated square is dart-free")
    gaps = np.full(kites.shape, -1.0)
    gaps[ok] = np.abs(kites[ok] / darts[ok] - PHI_FLOAT)
    flat_arg = int(np.argmax(gaps))
    a, b = divmod(flat_arg, gaps.shape[1])
    gap = float(gaps[a, b])
    bound = ratio_bound(i)
    return RatioBoundCheck(
        i=i,
        gap=gap,
        bound=bound,
        holds=gap <= bound,
        squares_total=int(gaps.size),
        squares_dart_free=skipped,
        worst_square=Square(float(grid.x0 + a), float(grid.y0 + b), float(side)),
        worst_counts=TileCensus(int(kites[a, b]), int(darts[a, b])),
    )


def partial_product(E: Sequence) -> tuple[float, float]:
    """Product of E values and the sum of (E - 1); checks ln(prod) <= sum.

    Accepts (i, E_i) pairs or plain values.  Any E < 1 is rejected since
    e_rho is >= 1 by construction.
    """
    values = []
    for item in E:
        if isinstance(item, (tuple, list)):
            values.append(float(item[1]))
        else:
            values.append(float(item))
    if any(v < 1.0 for v in values):
        raise ValueError("all E values must be >= 1")
    product = 1.0
    log_sum = 0.0
    for v in values:
        product *= v
        log_sum += v - 1.0
    if product > 0 and math.log(product) > log_sum + 1e-12:
        raise ArithmeticError("ln(product) exceeded sum of (E - 1)")
    return product, log_sum


@dataclass(frozen=True)
class RegionCounts:
    """Supertile census and area bookkeeping behind the ratio bound.

    For a square of side l with phi**m <= l < phi**(m+1), supertiles are the
    deflation ancestors floor(m/2) generations up (edge scale phi**floor(m/2),
    diameter bound a = phi**(floor(m/2)+1)).  ``contained``/``intersecting``
    count supertiles wholly inside / meeting the square; ``refined`` is the
    exact census of final tiles inside the contained region, obtained by the
    count recursion.  ``checks`` records the frame inequalities.
    """

    square: Square
    m: int
    supertile_rounds: int
    frame_a: float
    contained: TileCensus
    intersecting: TileCensus
    contained_area: float
    intersecting_area: float
    refined: TileCensus
    ratio_gap: float | None
    ratio_gap_bound: float
    checks: dict


def _segment_intersect(p1, p2, q1, q2, eps: float = 1e-9) -> bool:
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if v > eps:
            return 1
        if v < -eps:
            return -1
        return 0

    def on_seg(a, b, c):
        return (
            min(a[0], b[0]) - eps <= c[0] <= max(a[0], b[0]) + eps
            and min(a[1], b[1]) - eps <= c[1] <= max(a[1], b[1]) + eps
        )

    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_seg(p1, p2, q1):
        return True
    if o2 == 0 and on_seg(p1, p2, q2):
        return True
    if o3 == 0 and on_seg(q1, q2, p1):
        return True
    if o4 == 0 and on_seg(q1, q2, p2):
        return True
    return False


def region_analysis(patch: Patch, square: Square | tuple) -> RegionCounts:
    """Frame-area analysis of a square against the patch's supertile levels.

    Requires a patch built by generate_patch_covering (the supertile layer
    is rebuilt deterministically from its recorded seed).  The square must
    lie inside the patch union and have side >= 1.
    """
    square = Square(*square)
    prov = patch.provenance
    for key in ("seed_kind", "seed_chirality", "rounds", "translation"):
        if key not in prov:
            raise ValueError("patch lacks covering provenance (use generate_patch_covering)")
    tri = embedded_outline(patch)
    if not square_in_triangle(square, tri, margin=-1e-9):
        raise ValueError("square exceeds the patch")
    l = square.side
    l_frac = Fraction(l)
    if l_frac < 1:
        raise ValueError("square side must be >= 1")
    m = 0
    while golden_compare(PHI ** (m + 1), GoldenNum(l_frac)) <= 0:
        m += 1
    half = m // 2
    rounds = int(prov["rounds"])
    if half > rounds:
        raise ValueError("square too large for the patch's deflation depth")
    a = PHI_FLOAT ** (half + 1)

    seed = Patch.single_tile(
        KIND_CODES[prov["seed_kind"]],
        prov["seed_chirality"],
        scale_exp=-rounds,
        translation=CycloPoint(*(int(c) for c in prov["translation"])),
    )
    tau2 = deflate_patch(seed, rounds - half)
    emb = tau2.embedded()

    eps = 1e-9
    x1, y1 = square.x, square.y
    x2, y2 = square.x + l, square.y + l
    inside = (
        (emb[:, :, 0] >= x1 - eps) & (emb[:, :, 0] <= x2 + eps)
        & (emb[:, :, 1] >= y1 - eps) & (emb[:, :, 1] <= y2 + eps)
    )
    contained_mask = inside.all(axis=1)

    bb_lo = emb.min(axis=1)
    bb_hi = emb.max(axis=1)
    candidate = (
        (bb_lo[:, 0] <= x2 + eps) & (bb_hi[:, 0] >= x1 - eps)
        & (bb_lo[:, 1] <= y2 + eps) & (bb_hi[:, 1] >= y1 - eps)
    )
    corners = square.corners()
    sq_edges = [(corners[k], corners[(k + 1) % 4]) for k in range(4)]
    intersect_mask = contained_mask.copy()
    for idx in np.flatnonzero(candidate & ~contained_mask):
        tri_pts = emb[idx]
        hit = inside[idx].any()
        if not hit:
            hit = any(point_in_triangle(c, tri_pts, eps) for c in corners)
        if not hit:
            tri_edges = [(tri_pts[k], tri_pts[(k + 1) % 3]) for k in range(3)]
            hit = any(
                _segment_intersect(e1[0], e1[1], e2[0], e2[1])
                for e1 in tri_edges
                for e2 in sq_edges
            )
        intersect_mask[idx] = hit

    def mask_census(mask: np.ndarray) -> TileCensus:
        kites = int(np.count_nonzero(mask & (tau2.kinds == HALF_KITE)))
        return TileCensus(kites, int(np.count_nonzero(mask)) - kites)

    contained = mask_census(contained_mask)
    intersecting = mask_census(intersect_mask)

    psi = dart_area()
    scale_area = PHI_FLOAT ** (2 * half)
    half_kite_area = PHI_FLOAT * psi / 2.0 * scale_area
    half_dart_area = psi / 2.0 * scale_area
    v_area = contained.kites * half_kite_area + contained.darts * half_dart_area
    w_area = intersecting.kites * half_kite_area + intersecting.darts * half_dart_area

    refined = substitution_counts(contained, half)
    if refined.darts > 0:
        gap = abs(refined.kites / refined.darts - PHI_FLOAT)
    else:
        gap = None
    gap_bound = 2.0 ** (-half)

    frame = w_area - v_area
    slack = 1e-9 * max(1.0, l * l)
    checks = {
        "contained_le_intersecting": contained.kites <= intersecting.kites
        and contained.darts <= intersecting.darts,
        "v_le_square_le_w": v_area <= l * l + slack and l * l <= w_area + slack,
        "v_lower_applicable": l > 4 * a,
        "v_lower": (not l > 4 * a) or v_area >= l * l - 4 * a * l - slack,
        "frame_area": frame <= 8 * a * l + slack,
        "dart_fit": math.floor(frame / psi) <= 8 * a * l / psi + slack,
        "kite_fit": math.floor(frame / (psi * PHI_FLOAT)) <= 8 * a * l / (psi * PHI_FLOAT) + slack,
        "ratio_gap_in_bound": gap is not None and gap <= gap_bound,
        "d1_lower": refined.darts >= l * l / 5.0,
    }
    return RegionCounts(
        square=square,
        m=m,
        supertile_rounds=half,
        frame_a=a,
        contained=contained,
        intersecting=intersecting,
        contained_area=v_area,
        intersecting_area=w_area,
        refined=refined,
        ratio_gap=gap,
        ratio_gap_bound=gap_bound,
        checks=checks,
    )


@dataclass(frozen=True)
class ReportRow:
    i: int
    side: int
    E_rho: float
    e_min: float
    e_mean: float
    ratio_gap_max: float
    ratio_bound: float
    ratio_holds: bool
    decay_bound: float
    decay_holds: bool
    squares_total: int
    squares_dart_free: int
    E_argmax_x: int
    E_argmax_y: int
    E_argmax_kites: int
    E_argmax_darts: int
    partial_product: float
    partial_log_sum: float


@dataclass(frozen=True)
class DiscrepancyReport:
    """Per-i discrepancy statistics plus the running product certificates."""

    i_min: int
    i_max: int
    rho: float
    psi: float
    window: Square
    net_points: int
    kite_points: int
    dart_points: int
    rows: tuple[ReportRow, ...]

    @property
    def product(self) -> float:
        return self.rows[-1].partial_product if self.rows else 1.0

    @property
    def log_sum(self) -> float:
        return self.rows[-1].partial_log_sum if self.rows else 0.0


def build_report(net: Net, i_min: int, i_max: int, model: DensityModel | None = None) -> DiscrepancyReport:
    """Enumerate all integer-corner squares of sides 2**i_min .. 2**i_max."""
    if i_min > i_max:
        raise ValueError("i_min must be <= i_max")
    if model is None:
        model = default_density()
    grid = _CountGrid(net)
    if 2**i_max > grid.side:
        raise ValueError(
            f"window side {grid.side} too small for squares of side {2**i_max}"
        )
    rows = []
    running_product = 1.0
    running_sum = 0.0
    for i in range(i_min, i_max + 1):
        side = 2**i
        kites, darts = grid.square_counts(side)
        total = kites + darts
        if int(total.min()) == 0:
            raise ValueError(f"empty square at i={i}")
        expected = model.rho * float(side) * float(side)
        e = np.maximum(expected / total, total / expected)
        flat_arg = int(np.argmax(e))
        ax, by = divmod(flat_arg, e.shape[1])
        E = float(e[ax, by])
        ok = darts > 0
        gaps = np.abs(kites[ok] / darts[ok] - PHI_FLOAT)
        gap_max = float(gaps.max()) if gaps.size else float("nan")
        running_product *= E
        running_sum += E - 1.0
        if math.log(running_product) > running_sum + 1e-12:
            raise ArithmeticError("ln(product) exceeded sum of (E - 1)")
        rows.append(
            ReportRow(
                i=i,
                side=side,
                E_rho=E,
                e_min=float(e.min()),
                e_mean=float(e.mean()),
                ratio_gap_max=gap_max,
                ratio_bound=ratio_bound(i),
                ratio_holds=bool(gap_max <= ratio_bound(i)),
                decay_bound=decay_bound(i),
                decay_holds=bool(E - 1.0 <= decay_bound(i)),
                squares_total=int(e.size),
                squares_dart_free=int(darts.size - ok.sum()),
                E_argmax_x=grid.x0 + int(ax),
                E_argmax_y=grid.y0 + int(by),
                E_argmax_kites=int(kites[ax, by]),
                E_argmax_darts=int(darts[ax, by]),
                partial_product=running_product,
                partial_log_sum=running_sum,
            )
        )
    kite_points = int(np.count_nonzero(net.source_kinds == HALF_KITE))
    return DiscrepancyReport(
        i_min=i_min,
        i_max=i_max,
        rho=model.rho,
        psi=model.psi,
        window=net.window,
        net_points=len(net),
        kite_points=kite_points,
        dart_points=len(net) - kite_points,
        rows=tuple(rows),
    )


_CSV_STATS = (
    "E_rho",
    "E_minus_1",
    "e_min",
    "e_mean",
    "ratio_gap_max",
    "ratio_bound",
    "ratio_holds",
    "decay_bound",
    "decay_holds",
    "squares_total",
    "squares_dart_free",
    "E_argmax_x",
    "E_argmax_y",
    "E_argmax_kites",
    "E_argmax_darts",
    "partial_product",
    "partial_log_sum",
)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.12g}"


def _row_stat(row: ReportRow, stat: str):
    if stat == "E_minus_1":
        return row.E_rho - 1.0
    return getattr(row, stat)


def report_to_csv(report: DiscrepancyReport, path: str) -> None:
    """Long-format CSV: header ``i,statistic,value``, one row per (i, statistic)."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("i,statistic,value\n")
        for row in report.rows:
            for stat in _CSV_STATS:
                fh.write(f"{row.i},{stat},{_fmt(_row_stat(row, stat))}\n")


def _round12(value):
    if isinstance(value, bool) or not isinstance(value, (float, np.floating)):
        return value
    return float(f"{float(value):.12g}")


def report_to_json(report: DiscrepancyReport, path: str) -> None:
    """JSON document with run metadata and the full per-i table."""
    doc = {
        "format": "penrosenet discrepancy report v1",
        "i_min": report.i_min,
        "i_max": report.i_max,
        "rho": _round12(report.rho),
        "psi": _round12(report.psi),
        "window": [_round12(report.window.x), _round12(report.window.y), _round12(report.window.side)],
        "net_points": report.net_points,
        "kite_points": report.kite_points,
        "dart_points": report.dart_points,
        "product": _round12(report.product),
        "log_sum": _round12(report.log_sum),
        "rows": [
            {
                "i": row.i,
                "side": row.side,
                **{stat: (_round12(_row_stat(row, stat))) for stat in _CSV_STATS},
            }
            for row in report.rows
        ],
    }
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
