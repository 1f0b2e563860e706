"""Net extraction: pairing, reference points, Delone statistics, counting."""

import math

import numpy as np
import pytest

from penrosenet.golden import CycloPoint, PHI_FLOAT, SIN36, embed
from penrosenet.net import (
    COVERING_RADIUS_BOUND,
    Net,
    count_in_square,
    export_net,
    extract_net,
    full_tile_incenter,
    load_net,
)
from penrosenet.tiling import (
    HALF_DART,
    HALF_KITE,
    LEFT,
    RIGHT,
    Patch,
    Square,
    census,
    deflate_patch,
    generate_patch_covering,
)


def line_distance(pt, a, b):
    ax, ay = a
    bx, by = b
    ex, ey = bx - ax, by - ay
    return abs(ex * (pt[1] - ay) - ey * (pt[0] - ax)) / math.hypot(ex, ey)


def full_tile_outline(kind):
    """Vertices of the paired tile: wing, apex, mirrored wing, axis_end."""
    patch = Patch.full_tile(kind)
    right, left = patch.tile(0), patch.tile(1)
    return [embed(v) for v in (right.wing, right.apex, left.wing, right.axis_end)]


class TestReferencePoints:
    def test_kite_point_is_incenter(self):
        tile = Patch.single_tile(HALF_KITE).tile(0)
        center = embed(full_tile_incenter(HALF_KITE, tile.apex, tile.axis_end))
        quad = full_tile_outline(HALF_KITE)
        dists = [
            line_distance(center, quad[i], quad[(i + 1) % 4]) for i in range(4)
        ]
        assert max(dists) - min(dists) < 1e-12
        assert abs(dists[0] - SIN36) < 1e-12

    def test_dart_point_is_incenter(self):
        tile = Patch.single_tile(HALF_DART).tile(0)
        center = embed(full_tile_incenter(HALF_DART, tile.apex, tile.axis_end))
        quad = full_tile_outline(HALF_DART)
        dists = [
            line_distance(center, quad[i], quad[(i + 1) % 4]) for i in range(4)
        ]
        assert max(dists) - min(dists) < 1e-12
        assert abs(dists[0] - SIN36 / PHI_FLOAT) < 1e-12

    def test_dart_wing_distance_attains_covering_bound(self):
        tile = Patch.single_tile(HALF_DART).tile(0)
        center = np.array(embed(full_tile_incenter(HALF_DART, tile.apex, tile.axis_end)))
        worst = max(
            float(np.linalg.norm(center - np.array(v))) for v in full_tile_outline(HALF_DART)
        )
        assert abs(worst - COVERING_RADIUS_BOUND) < 1e-12
        assert abs(COVERING_RADIUS_BOUND - math.sqrt(3.0 - PHI_FLOAT)) < 1e-15

    def test_kite_vertices_within_bound(self):
        tile = Patch.single_tile(HALF_KITE).tile(0)
        center = np.array(embed(full_tile_incenter(HALF_KITE, tile.apex, tile.axis_end)))
        worst = max(
            float(np.linalg.norm(center - np.array(v))) for v in full_tile_outline(HALF_KITE)
        )
        assert worst <= COVERING_RADIUS_BOUND + 1e-12


class TestExtraction:
    def test_lone_half_and_full_tile_agree(self):
        half = extract_net(Patch.single_tile(HALF_KITE))
        full = extract_net(Patch.full_tile(HALF_KITE))
        assert len(half) == 1
        assert len(full) == 1
        assert np.allclose(half.xy, full.xy, atol=1e-12)
        assert half.source_kinds[0] == full.source_kinds[0] == HALF_KITE

    def test_pair_counts_generation_two(self):
        patch = deflate_patch(Patch.full_tile(HALF_KITE, scale_exp=-2), 2)
        assert tuple(census(patch)) == (10, 6)
        net = extract_net(patch)
        kites = int(np.count_nonzero(net.source_kinds == HALF_KITE))
        darts = len(net) - kites
        assert (kites, darts) == (6, 5)

    def test_point_count_between_half_and_full_census(self):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-5), 5)
        counts = census(patch)
        net = extract_net(patch)
        assert math.ceil(counts.total() / 2) <= len(net) <= counts.total()

    def test_points_are_exact_ring_points(self):
        patch = deflate_patch(Patch.single_tile(HALF_DART, scale_exp=-4), 4)
        net = extract_net(patch)
        assert net.ring is not None
        for i in range(0, len(net), 5):
            p = net.point(i)
            x, y = embed(p.origin)
            assert abs(x - p.x) < 1e-12
            assert abs(y - p.y) < 1e-12

    def test_tile_ids_sorted_and_unique(self):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-4), 4)
        net = extract_net(patch)
        ids = net.tile_ids
        assert np.all(np.diff(ids) > 0)

    def test_requires_final_scale(self):
        with pytest.raises(ValueError, match="scale_exp"):
            extract_net(Patch.single_tile(HALF_KITE, scale_exp=-1))

    def test_window_override(self):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-3), 3)
        net = extract_net(patch, window=Square(-1.0, -1.0, 4.0))
        assert net.window == Square(-1.0, -1.0, 4.0)


class TestDeloneStatistics:
    def test_c1_matches_brute_force(self):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-5), 5)
        net = extract_net(patch)
        xy = net.xy
        brute = np.inf
        for i in range(len(xy)):
            d = np.linalg.norm(xy[i + 1:] - xy[i], axis=1)
            if len(d):
                brute = min(brute, float(d.min()))
        assert net.c1 == pytest.approx(brute, abs=0.0, rel=0.0)

    def test_c1_value_twice_dart_inradius(self):
        # adjacent dart points sit one dart inradius off each side of a
        # shared edge, and that is the closest approach
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-6), 6)
        net = extract_net(patch)
        assert net.c1 == pytest.approx(2.0 * SIN36 / PHI_FLOAT, abs=1e-9)

    def test_c1_stable_across_generations(self):
        values = []
        for gen in (6, 7):
            patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-gen), gen)
            values.append(extract_net(patch).c1)
        assert abs(values[0] - values[1]) < 1e-9

    def test_c2_within_covering_bound(self):
        patch = generate_patch_covering(Square(0.0, 0.0, 16.0))
        net = extract_net(patch)
        assert net.c2 <= COVERING_RADIUS_BOUND + net.c2_error_bound
        assert net.c2 > 0.9  # kite apex corners keep it near 1

    def test_single_point_c1_raises(self):
        net = extract_net(Patch.single_tile(HALF_KITE))
        with pytest.raises(ValueError):
            net.c1


class TestCounting:
    def synthetic(self):
        xy = np.array(
            [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.5, 0.5], [1.0, 1.0]]
        )
        kinds = np.array([HALF_KITE, HALF_DART, HALF_KITE, HALF_DART, HALF_KITE])
        ids = np.arange(5)
        return Net(xy, kinds, ids, Square(0.0, 0.0, 2.0))

    def test_half_open_membership(self):
        net = self.synthetic()
        assert count_in_square(net, Square(0.0, 0.0, 1.0)) == (1, 1)
        assert count_in_square(net, Square(1.0, 1.0, 1.0)) == (1, 0)
        assert count_in_square(net, Square(1.0, 0.0, 1.0)) == (0, 1)
        assert count_in_square(net, Square(0.0, 0.0, 2.0)) == (3, 2)

    def test_unit_translates_partition_window(self):
        patch = generate_patch_covering(Square(0.0, 0.0, 8.0))
        net = extract_net(patch)
        total = 0
        for a in range(8):
            for b in range(8):
                k, d = count_in_square(net, Square(float(a), float(b), 1.0))
                total += k + d
        k, d = count_in_square(net, Square(0.0, 0.0, 8.0))
        assert total == k + d

    def test_square_outside_window_rejected(self):
        net = self.synthetic()
        with pytest.raises(ValueError, match="window"):
            count_in_square(net, Square(1.5, 0.0, 1.0))

    def test_density_roughly_rho(self):
        patch = generate_patch_covering(Square(0.0, 0.0, 32.0))
        net = extract_net(patch)
        k, d = count_in_square(net, Square(0.0, 0.0, 32.0))
        assert (k + d) / 1024.0 == pytest.approx(0.7608, abs=0.02)


class TestSerialization:
    def test_roundtrip(self, tmp_path):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-4), 4)
        net = extract_net(patch)
        path = str(tmp_path / "net.txt")
        export_net(net, path)
        back = load_net(path)
        assert len(back) == len(net)
        assert np.array_equal(back.source_kinds, net.source_kinds)
        assert np.array_equal(back.tile_ids, net.tile_ids)
        assert np.allclose(back.xy, net.xy, atol=1e-9)
        # the window survives at the 12-significant-digit export precision
        assert np.allclose(tuple(back.window), tuple(net.window), rtol=1e-11, atol=1e-11)

    def test_header_reports_stats(self, tmp_path):
        patch = deflate_patch(Patch.single_tile(HALF_KITE, scale_exp=-4), 4)
        net = extract_net(patch)
        path = str(tmp_path / "net.txt")
        export_net(net, path)
        head = open(path).read().splitlines()[:5]
        assert head[0] == "# penrosenet net v1"
        assert head[1].startswith("# points ")
        assert head[2].startswith("# c1 ")
        assert head[3].startswith("# c2 ")

    def test_missing_window_rejected(self, tmp_path):
        path = str(tmp_path / "broken.txt")
        with open(path, "w") as fh:
            fh.write("0.0 0.0 kite 0\n")
        with pytest.raises(ValueError, match="window"):
            load_net(path)
