"""Penrose kite/dart patches generated by exact half-tile deflation.

A patch is a flat array of Robinson half-triangles with integer coordinates
in Z[zeta].  Deflation splits every half-kite into two half-kites and one
half-dart and every half-dart into one of each, with split points at exact
1/phi fractions along edges.  Children are rescaled by phi each round (and
the patch-wide ``scale_exp`` incremented) so coordinates stay integers; the
master outline keeps a fixed physical size while tiles shrink.

Vertex role order is ``(wing, apex, axis_end)``.  The apex sits between the
two equal sides, and apex -> axis_end is half of the full tile's symmetry
axis, so mirror partners share (apex, axis_end) and differ only in the wing.
Writing a half-tile as (A, B, C) = (wing, apex, axis_end):

    half-kite: |BA| = |BC| = phi, |CA| = 1, apex angle 36 deg
    half-dart: |BA| = |BC| = 1, |CA| = phi, apex angle 108 deg

One deflation round uses split points at 1/phi fractions (all exact in the
ring since 1/phi = zeta + zeta**4):

          A                                A
         /  \\          Q = A + (B-A)/phi   (on edge B-A, |AQ| = 1)
        Q    \\         R = B + (C-B)/phi   (on the axis, |BR| = 1)
       /      \\
      B---R----C       half-kite (A,B,C) -> dart(R,Q,B), kite(Q,A,R),
                                            kite(C,A,R)
          A
         / \\           P = C + (A-C)/phi   (on edge C-A, |CP| = 1)
        P   \\
       /     \\         half-dart (A,B,C) -> dart(B,P,A), kite(P,C,B)
      B-------C

Child chirality follows the pattern (same, flipped, same) for the kite and
(same, flipped) for the dart; chirality +1 means the (wing, apex, axis_end)
loop is counterclockwise.  This is the standard Robinson decomposition in
one of its two mirror conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .golden import (
    CycloPoint,
    EMBED_COS,
    EMBED_SIN,
    MUL_BY_INV_PHI,
    MUL_BY_OMEGA,
    MUL_BY_PHI,
    PHI_FLOAT,
    orientation,
    squared_length,
    PHI,
)

HALF_KITE = 0
HALF_DART = 1
RIGHT = 1
LEFT = -1

KIND_NAMES = {HALF_KITE: "half-kite", HALF_DART: "half-dart"}
KIND_CODES = {"half-kite": HALF_KITE, "half-dart": HALF_DART}

DEFAULT_TILE_CAP = 50_000_000

_MPHI = np.array(MUL_BY_PHI, dtype=np.int64)
_MINV = np.array(MUL_BY_INV_PHI, dtype=np.int64)
_MOMEGA = np.array(MUL_BY_OMEGA, dtype=np.int64)
EMBED_MATRIX = np.array([EMBED_COS, EMBED_SIN], dtype=np.float64).T  # (4, 2)

# Unit seeds, apex at the origin, axis along +x; LEFT seeds are the complex
# conjugates of the RIGHT ones.  Rows are (wing, apex, axis_end).
_SEED_COORDS = {
    (HALF_KITE, RIGHT): ((1, 1, 0, 0), (0, 0, 0, 0), (0, 0, -1, -1)),
    (HALF_KITE, LEFT): ((0, -1, -1, -1), (0, 0, 0, 0), (0, 0, -1, -1)),
    (HALF_DART, RIGHT): ((1, 1, 1, 1), (0, 0, 0, 0), (1, 0, 0, 0)),
    (HALF_DART, LEFT): ((0, -1, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0)),
}


class TileCapError(RuntimeError):
    """Raised when a deflation would exceed the configured tile cap."""


class Square(NamedTuple):
    """Axis-aligned square with corner (x, y) and side length ``side``."""

    x: float
    y: float
    side: float

    @property
    def center(self) -> tuple[float, float]:
        return (self.x + self.side / 2.0, self.y + self.side / 2.0)

    @property
    def area(self) -> float:
        return self.side * self.side

    def corners(self) -> tuple[tuple[float, float], ...]:
        x, y, l = self.x, self.y, self.side
        return ((x, y), (x + l, y), (x + l, y + l), (x, y + l))


@dataclass(frozen=True)
class TileCensus:
    """Exact half-tile counts by kind."""

    kites: int
    darts: int

    def total(self) -> int:
        return self.kites + self.darts

    def __iter__(self):
        return iter((self.kites, self.darts))


@dataclass(frozen=True)
class HalfTile:
    """One Robinson half-triangle with exact ring vertices.

    ``kind`` is HALF_KITE or HALF_DART, ``chirality`` is RIGHT (+1) for a
    counterclockwise (wing, apex, axis_end) loop and LEFT (-1) for its
    mirror image.
    """

    kind: int
    chirality: int
    wing: CycloPoint
    apex: CycloPoint
    axis_end: CycloPoint
    generation: int = 0

    @property
    def vertices(self) -> tuple[CycloPoint, CycloPoint, CycloPoint]:
        return (self.wing, self.apex, self.axis_end)

    def is_well_formed(self) -> bool:
        """Exact shape check: equal legs, golden base ratio, orientation."""
        leg1 = squared_length(self.wing - self.apex)
        leg2 = squared_length(self.axis_end - self.apex)
        base = squared_length(self.wing - self.axis_end)
        if leg1 != leg2:
            return False
        phi_sq = PHI * PHI
        if self.kind == HALF_KITE:
            if leg1 != phi_sq * base:
                return False
        else:
            if base != phi_sq * leg1:
                return False
        return orientation(self.wing, self.apex, self.axis_end) == self.chirality

    def embedded(self, scale_exp: int = 0) -> tuple[tuple[float, float], ...]:
        from .golden import embed

        return tuple(embed(v, scale_exp) for v in self.vertices)


def deflate_tile(t: HalfTile) -> list[HalfTile]:
    """Split one half-tile into its Robinson children, exactly.

    Children are returned in the parent's coordinate frame (edge lengths
    shrink by 1/phi); ``deflate_patch`` is the scale-managed counterpart.
    Order matches the vectorized engine: kite -> [dart, flipped kite, kite],
    dart -> [dart, flipped kite].
    """
    a, b, c = t.wing, t.apex, t.axis_end
    g = t.generation + 1
    if t.kind == HALF_KITE:
        q = a + (b - a).times_inv_phi()
        r = b + (c - b).times_inv_phi()
        return [
            HalfTile(HALF_DART, t.chirality, r, q, b, g),
            HalfTile(HALF_KITE, -t.chirality, q, a, r, g),
            HalfTile(HALF_KITE, t.chirality, c, a, r, g),
        ]
    p = c + (a - c).times_inv_phi()
    return [
        HalfTile(HALF_DART, t.chirality, b, p, a, g),
        HalfTile(HALF_KITE, -t.chirality, p, c, b, g),
    ]


class Patch:
    """Immutable array of half-tiles sharing one scale exponent.

    ``coords`` has shape (N, 3, 4): per tile the ring coefficients of
    (wing, apex, axis_end).  Physical positions are ``coords`` embedded and
    multiplied by phi**(-scale_exp); a patch whose tiles have unit short
    edges therefore has scale_exp == 0.
    """

    __slots__ = ("kinds", "chiralities", "coords", "generation", "scale_exp", "provenance")

    def __init__(
        self,
        kinds: np.ndarray,
        chiralities: np.ndarray,
        coords: np.ndarray,
        generation: int = 0,
        scale_exp: int = 0,
        provenance: dict | None = None,
    ) -> None:
        kinds = np.ascontiguousarray(kinds, dtype=np.uint8)
        chiralities = np.ascontiguousarray(chiralities, dtype=np.int8)
        coords = np.ascontiguousarray(coords, dtype=np.int64)
        if kinds.ndim != 1 or chiralities.shape != kinds.shape:
            raise ValueError("kinds and chiralities must be parallel 1-d arrays")
        if coords.shape != (len(kinds), 3, 4):
            raise ValueError(f"coords must have shape (N, 3, 4), got {coords.shape}")
        if kinds.size and kinds.max() > 1:
            raise ValueError("kinds must be HALF_KITE (0) or HALF_DART (1)")
        if chiralities.size and not np.all(np.abs(chiralities) == 1):
            raise ValueError("chiralities must be +1 or -1")
        for arr in (kinds, chiralities, coords):
            arr.flags.writeable = False
        self.kinds = kinds
        self.chiralities = chiralities
        self.coords = coords
        self.generation = int(generation)
        self.scale_exp = int(scale_exp)
        self.provenance = provenance or {}

    def __len__(self) -> int:
        return len(self.kinds)

    @classmethod
    def single_tile(
        cls,
        kind: int,
        chirality: int = RIGHT,
        scale_exp: int = 0,
        translation: CycloPoint | None = None,
    ) -> "Patch":
        base = np.array(_SEED_COORDS[(kind, chirality)], dtype=np.int64)
        if translation is not None:
            base = base + np.array(translation.coeffs, dtype=np.int64)
        prov = {"seed_kind": KIND_NAMES[kind], "seed_chirality": chirality, "outline": base.copy()}
        return cls(
            np.array([kind]), np.array([chirality]), base[None, :, :],
            generation=0, scale_exp=scale_exp, provenance=prov,
        )

    @classmethod
    def full_tile(cls, kind: int, scale_exp: int = 0) -> "Patch":
        """Both mirror halves of one tile, sharing apex and axis_end."""
        right = np.array(_SEED_COORDS[(kind, RIGHT)], dtype=np.int64)
        left = np.array(_SEED_COORDS[(kind, LEFT)], dtype=np.int64)
        return cls(
            np.array([kind, kind]),
            np.array([RIGHT, LEFT]),
            np.stack([right, left]),
            generation=0,
            scale_exp=scale_exp,
            provenance={"seed_kind": KIND_NAMES[kind], "seed_chirality": 0},
        )

    def tile(self, i: int) -> HalfTile:
        w, a, e = (CycloPoint(*map(int, row)) for row in self.coords[i])
        return HalfTile(int(self.kinds[i]), int(self.chiralities[i]), w, a, e, self.generation)

    def tiles(self) -> Iterator[HalfTile]:
        """Iterate as HalfTile objects (intended for small patches)."""
        return (self.tile(i) for i in range(len(self)))

    def embedded(self) -> np.ndarray:
        """Vertex coordinates in R**2, shape (N, 3, 2) float64."""
        flat = self.coords.reshape(-1, 4).astype(np.float64) @ EMBED_MATRIX
        if self.scale_exp:
            flat = flat * PHI_FLOAT ** (-self.scale_exp)
        return flat.reshape(len(self), 3, 2)

    def transformed(self, tenth_turns: int = 0, translation: CycloPoint | None = None) -> "Patch":
        """Rotate by multiples of 36 degrees about the origin, then translate."""
        coords = self.coords
        if tenth_turns % 10:
            coords = coords @ np.linalg.matrix_power(_MOMEGA, tenth_turns % 10)
        if translation is not None:
            coords = coords + np.array(translation.coeffs, dtype=np.int64)
        prov = dict(self.provenance)
        if "outline" in prov:
            outline = np.asarray(prov["outline"], dtype=np.int64)
            if tenth_turns % 10:
                outline = outline @ np.linalg.matrix_power(_MOMEGA, tenth_turns % 10)
            if translation is not None:
                outline = outline + np.array(translation.coeffs, dtype=np.int64)
            prov["outline"] = outline
        return Patch(self.kinds, self.chiralities, coords, self.generation, self.scale_exp, prov)


def census(p: Patch) -> TileCensus:
    """Exact half-tile counts of a patch."""
    kites = int(np.count_nonzero(p.kinds == HALF_KITE))
    return TileCensus(kites, len(p) - kites)


def substitution_counts(seed: TileCensus, n: int) -> TileCensus:
    """Iterate the census recursion K' = 2K + D, D' = K + D, n times, exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    kites, darts = seed.kites, seed.darts
    for _ in range(n):
        kites, darts = 2 * kites + darts, kites + darts
    return TileCensus(kites, darts)


@dataclass(frozen=True)
class SubstitutionRule:
    """Generic substitution: matrix[i][j] children of type i per parent of type j."""

    names: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.names)
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            raise ValueError("matrix must be square and match the name count")
        if any(entry < 0 for row in self.matrix for entry in row):
            raise ValueError("matrix entries must be >= 0")

    def apply(self, counts: Sequence[int]) -> tuple[int, ...]:
        if len(counts) != len(self.names):
            raise ValueError("count vector length does not match rule")
        return tuple(
            sum(self.matrix[i][j] * counts[j] for j in range(len(counts)))
            for i in range(len(counts))
        )

    def dominant_eigen(self, tol: float = 1e-14, max_iter: int = 10_000) -> tuple[float, tuple[float, ...]]:
        """Dominant eigenvalue and eigenvector by power iteration on floats."""
        m = np.array(self.matrix, dtype=np.float64)
        v = np.full(len(self.names), 1.0 / len(self.names))
        lam = 0.0
        for _ in range(max_iter):
            w = m @ v
            w_norm = float(np.linalg.norm(w))
            if w_norm == 0.0:
                raise ValueError("rule annihilates the iteration vector")
            new_v = w / w_norm
            lam = float(w @ v) / float(v @ v)
            # the eigenvalue estimate converges twice as fast as the vector,
            # so loop on vector stability
            delta = float(np.linalg.norm(new_v - v))
            v = new_v
            if delta <= tol:
                break
        return lam, tuple(float(x) for x in v)


PENROSE_SUBSTITUTION = SubstitutionRule(("half-kite", "half-dart"), ((2, 1), (1, 1)))


def generic_substitution_counts(rule: SubstitutionRule, seed: Sequence[int], n: int) -> tuple[int, ...]:
    """Exact M**n . seed for any substitution rule."""
    if n < 0:
        raise ValueError("n must be >= 0")
    counts = tuple(int(x) for x in seed)
    for _ in range(n):
        counts = rule.apply(counts)
    return counts


def _deflate_once(kinds: np.ndarray, chir: np.ndarray, coords: np.ndarray):
    kite_rows = kinds == HALF_KITE
    kc = coords[kite_rows]
    dc = coords[~kite_rows]
    kx = chir[kite_rows]
    dx = chir[~kite_rows]
    nk, nd = len(kc), len(dc)

    scaled_k = kc @ _MPHI
    q = kc[:, 0] @ _MINV + kc[:, 1]
    r = kc[:, 1] @ _MINV + kc[:, 2]
    scaled_d = dc @ _MPHI
    p = dc[:, 2] @ _MINV + dc[:, 0]

    new_coords = np.concatenate([
        np.stack([r, q, scaled_k[:, 1]], axis=1),
        np.stack([q, scaled_k[:, 0], r], axis=1),
        np.stack([scaled_k[:, 2], scaled_k[:, 0], r], axis=1),
        np.stack([scaled_d[:, 1], p, scaled_d[:, 0]], axis=1),
        np.stack([p, scaled_d[:, 2], scaled_d[:, 1]], axis=1),
    ])
    new_kinds = np.concatenate([
        np.full(nk, HALF_DART, dtype=np.uint8),
        np.full(2 * nk, HALF_KITE, dtype=np.uint8),
        np.full(nd, HALF_DART, dtype=np.uint8),
        np.full(nd, HALF_KITE, dtype=np.uint8),
    ])
    new_chir = np.concatenate([kx, -kx, kx, dx, -dx])
    return new_kinds, new_chir, new_coords


def deflate_patch(p: Patch, rounds: int, cap: int = DEFAULT_TILE_CAP) -> Patch:
    """Deflate every tile ``rounds`` times, rescaling by phi each round.

    The projected census is computed first through the exact recursion and
    checked against ``cap`` before any geometry is built.  Child block order
    per round: kite children by slot (dart, flipped kite, kite) over all kite
    parents, then dart children by slot (dart, flipped kite) over all dart
    parents.
    """
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    projected = substitution_counts(census(p), rounds)
    if projected.total() > cap:
        raise TileCapError(
            f"deflation would produce {projected.total()} half-tiles, cap is {cap}"
        )
    kinds, chir, coords = p.kinds, p.chiralities, p.coords
    for _ in range(rounds):
        kinds, chir, coords = _deflate_once(kinds, chir, coords)
    prov = dict(p.provenance)
    if "outline" in prov and rounds:
        # outline ring coordinates live at the patch scale, so they pick up
        # the same phi factor as the tiles
        prov["outline"] = np.asarray(prov["outline"], dtype=np.int64) @ np.linalg.matrix_power(_MPHI, rounds)
    return Patch(
        kinds, chir, coords,
        generation=p.generation + rounds,
        scale_exp=p.scale_exp + rounds,
        provenance=prov,
    )


def _triangle_geometry(kind: int) -> tuple[np.ndarray, tuple[float, float], float]:
    """Embedded unit seed triangle, its incenter and inradius."""
    base = np.array(_SEED_COORDS[(kind, RIGHT)], dtype=np.float64) @ EMBED_MATRIX
    a = np.linalg.norm(base[2] - base[1])  # side opposite the wing
    b = np.linalg.norm(base[0] - base[2])  # opposite the apex
    c = np.linalg.norm(base[1] - base[0])  # opposite the axis end
    weights = np.array([a, b, c])
    incenter = (weights[:, None] * base).sum(axis=0) / weights.sum()
    s = weights.sum() / 2.0
    u, v = base[1] - base[0], base[2] - base[0]
    area = abs(float(u[0] * v[1] - u[1] * v[0])) / 2.0
    return base, (float(incenter[0]), float(incenter[1])), float(area / s)


_SEED_GEOMETRY = {k: _triangle_geometry(k) for k in (HALF_KITE, HALF_DART)}


def point_in_triangle(point: Sequence[float], tri: np.ndarray, eps: float = 1e-9) -> bool:
    """Float half-plane test; tri is a (3, 2) array in either orientation."""
    px, py = float(point[0]), float(point[1])
    sign = 0.0
    for i in range(3):
        ax, ay = tri[i]
        bx, by = tri[(i + 1) % 3]
        ex, ey = bx - ax, by - ay
        cross = ex * (py - ay) - ey * (px - ax)
        norm = math.hypot(ex, ey)
        d = cross / norm if norm else 0.0
        if abs(d) <= eps:
            continue
        if sign == 0.0:
            sign = math.copysign(1.0, d)
        elif math.copysign(1.0, d) != sign:
            return False
    return True


def square_in_triangle(square: Square, tri: np.ndarray, margin: float = 0.0) -> bool:
    """Whether the closed square sits inside the triangle with a safety margin."""
    ax = np.asarray(tri, dtype=np.float64)
    ccw = (ax[1, 0] - ax[0, 0]) * (ax[2, 1] - ax[0, 1]) - (ax[1, 1] - ax[0, 1]) * (ax[2, 0] - ax[0, 0])
    order = ax if ccw >= 0 else ax[::-1]
    for corner in square.corners():
        for i in range(3):
            a = order[i]
            b = order[(i + 1) % 3]
            e = b - a
            d = (e[0] * (corner[1] - a[1]) - e[1] * (corner[0] - a[0])) / math.hypot(e[0], e[1])
            if d < margin:
                return False
    return True


def patch_outline(p: Patch) -> np.ndarray:
    """Ring coordinates (3, 4) of the seed triangle at the patch's scale."""
    outline = p.provenance.get("outline")
    if outline is None:
        raise KeyError("patch has no recorded outline (not built from a single seed)")
    return np.asarray(outline, dtype=np.int64)


def embedded_outline(p: Patch) -> np.ndarray:
    out = patch_outline(p).astype(np.float64) @ EMBED_MATRIX
    if p.scale_exp:
        out = out * PHI_FLOAT ** (-p.scale_exp)
    return out


def generate_patch_covering(
    square: Square | tuple,
    seed_kind: int = HALF_KITE,
    seed_chirality: int = RIGHT,
    cap: int = DEFAULT_TILE_CAP,
    slack: float = 2.0,
) -> Patch:
    """Deterministic patch whose union contains the given square.

    Scales a single seed half-tile by phi**n with n minimal such that the
    seed's inscribed circle covers the square's circumscribed circle plus
    ``slack``, centers it on the square through an exact ring translation
    (rounding error < 1 tile edge, absorbed by the slack), and deflates n
    rounds, so final tiles have edge lengths 1 and phi (scale_exp == 0).
    """
    square = Square(*square)
    if square.side <= 0:
        raise ValueError("square side must be positive")
    _, incenter, inradius = _SEED_GEOMETRY[seed_kind]
    if seed_chirality == LEFT:
        incenter = (incenter[0], -incenter[1])
    need = square.side * math.sqrt(2.0) / 2.0 + slack
    n = 0
    while inradius * PHI_FLOAT**n < need:
        n += 1

    cx, cy = square.center
    dx = cx - incenter[0] * PHI_FLOAT**n
    dy = cy - incenter[1] * PHI_FLOAT**n
    v = round(dy / EMBED_SIN[1])
    u = round(dx - v * EMBED_COS[1])
    t = CycloPoint(int(u), int(v), 0, 0)
    for _ in range(n):
        t = t.times_inv_phi()

    seed = Patch.single_tile(seed_kind, seed_chirality, scale_exp=-n, translation=t)
    result = deflate_patch(seed, n, cap=cap)
    prov = dict(result.provenance)
    prov.update({
        "rounds": n,
        "translation": t.coeffs,
        "square": tuple(square),
    })
    patch = Patch(result.kinds, result.chiralities, result.coords,
                  result.generation, result.scale_exp, prov)
    tri = embedded_outline(patch)
    if not square_in_triangle(square, tri, margin=0.25):
        raise RuntimeError("seed placement failed to cover the square; increase slack")
    return patch


_KIND_LETTER = {HALF_KITE: "K", HALF_DART: "D"}
_LETTER_KIND = {"K": HALF_KITE, "D": HALF_DART}
_CHIR_LETTER = {RIGHT: "R", LEFT: "L"}
_LETTER_CHIR = {"R": RIGHT, "L": LEFT}


def save_patch(p: Patch, path: str) -> None:
    """Write the line-oriented patch format.

    Header carries the shared scale_exp; each tile line is
    ``kind chirality generation`` followed by the 12 integer coordinates of
    (wing, apex, axis_end).
    """
    c = census(p)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("# penrosenet patch v1\n")
        fh.write(f"# scale_exp {p.scale_exp}\n")
        fh.write(f"# generation {p.generation}\n")
        fh.write(f"# census {c.kites} {c.darts}\n")
        for i in range(len(p)):
            coords = " ".join(str(int(x)) for x in p.coords[i].ravel())
            fh.write(
                f"{_KIND_LETTER[int(p.kinds[i])]} {_CHIR_LETTER[int(p.chiralities[i])]} "
                f"{p.generation} {coords}\n"
            )


def load_patch(path: str) -> Patch:
    """Read the format written by save_patch, validating exact round-trip fields."""
    scale_exp = None
    generation = None
    header_census = None
    kinds: list[int] = []
    chirs: list[int] = []
    coords: list[list[int]] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) >= 2 and parts[0] == "scale_exp":
                    scale_exp = int(parts[1])
                elif len(parts) >= 2 and parts[0] == "generation":
                    generation = int(parts[1])
                elif len(parts) >= 3 and parts[0] == "census":
                    header_census = (int(parts[1]), int(parts[2]))
                continue
            parts = line.split()
            if len(parts) != 15:
                raise ValueError(f"malformed patch line: {line!r}")
            kinds.append(_LETTER_KIND[parts[0]])
            chirs.append(_LETTER_CHIR[parts[1]])
            gen = int(parts[2])
            if generation is None:
                generation = gen
            elif gen != generation:
                raise ValueError("mixed generations in patch file")
            coords.append([int(x) for x in parts[3:]])
    if scale_exp is None:
        raise ValueError("patch file missing scale_exp header")
    if not kinds:
        raise ValueError("patch file contains no tiles")
    if header_census is not None:
        actual = (kinds.count(HALF_KITE), kinds.count(HALF_DART))
        if actual != header_census:
            raise ValueError(
                f"census header {header_census} does not match tile lines {actual}"
            )
    arr = np.array(coords, dtype=np.int64).reshape(len(kinds), 3, 4)
    return Patch(
        np.array(kinds), np.array(chirs), arr,
        generation=generation or 0, scale_exp=scale_exp,
        provenance={"source": path},
    )
