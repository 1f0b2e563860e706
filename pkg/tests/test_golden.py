"""Exact arithmetic in the golden field and the cyclotomic ring."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from penrosenet.golden import (
    CycloPoint,
    GoldenNum,
    INV_PHI,
    PHI,
    PHI_FLOAT,
    SIN36,
    SIN72,
    cross_s72,
    dot,
    embed,
    golden_compare,
    orientation,
    squared_length,
)

small = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
goldens = st.builds(GoldenNum, small, small)


class TestGoldenField:
    def test_phi_squared_is_phi_plus_one(self):
        assert PHI * PHI == PHI + 1

    def test_inverse_phi(self):
        assert INV_PHI == GoldenNum(-1, 1)
        assert INV_PHI * PHI == GoldenNum(1)

    def test_worked_square(self):
        assert (1 + PHI) * (1 + PHI) == GoldenNum(2, 3)

    def test_pow_negative(self):
        assert PHI**-1 == INV_PHI
        assert PHI**-3 * PHI**3 == GoldenNum(1)
        assert PHI**0 == GoldenNum(1)

    def test_norm_and_conjugate(self):
        x = GoldenNum(Fraction(3, 2), Fraction(-5, 7))
        assert x * x.conjugate() == GoldenNum(x.norm())
        assert PHI.conjugate() == GoldenNum(1) - PHI

    def test_sign_without_floats(self):
        assert GoldenNum(-8, 5).sign() == 1  # 5*phi = 8.09 > 8
        assert GoldenNum(8, -5).sign() == -1
        assert GoldenNum(13, -8).sign() == 1  # 8*phi = 12.94 < 13
        assert GoldenNum(-13, 8).sign() == -1
        assert GoldenNum(0).sign() == 0
        assert (PHI - PHI).sign() == 0

    def test_compare_tight_rationals(self):
        # consecutive Fibonacci ratios straddle phi: F(30)/F(29) below,
        # F(31)/F(30) above, both within 4e-12 of it
        assert golden_compare(PHI, GoldenNum(Fraction(832040, 514229))) > 0
        assert golden_compare(PHI, GoldenNum(Fraction(1346269, 832040))) < 0

    def test_float_embedding(self):
        assert abs(float(PHI) - PHI_FLOAT) < 1e-15
        assert abs(PHI_FLOAT - (1 + math.sqrt(5)) / 2) < 1e-15

    @given(goldens, goldens, goldens)
    @settings(max_examples=150, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a

    @given(goldens, goldens)
    @settings(max_examples=150, deadline=None)
    def test_order_consistent_with_floats(self, a, b):
        cmp = golden_compare(a, b)
        fa, fb = float(a), float(b)
        if abs(fa - fb) > 1e-9:
            assert cmp == (1 if fa > fb else -1)

    @given(goldens)
    @settings(max_examples=100, deadline=None)
    def test_multiplicative_inverse(self, a):
        if a.sign() != 0:
            assert a * a.inverse() == GoldenNum(1)

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            GoldenNum(0).inverse()


class TestCycloPoint:
    def test_zeta_five_is_one(self):
        z = CycloPoint.zeta(1)
        p = CycloPoint(1, 0, 0, 0)
        for _ in range(5):
            p = p * z
        assert p == CycloPoint(1, 0, 0, 0)

    def test_tenth_root_order(self):
        w = CycloPoint.tenth_root(1)
        p = CycloPoint(1, 0, 0, 0)
        seen = []
        for _ in range(10):
            p = p * w
            seen.append(p)
        assert seen[-1] == CycloPoint(1, 0, 0, 0)
        assert len(set(seen)) == 10

    def test_rotation_is_multiplication(self):
        p = CycloPoint(3, -2, 5, 7)
        z = CycloPoint.zeta(1)
        q = p
        for k in range(1, 6):
            q = q * z
            assert q == p.rotate(k)

    def test_tenth_root_rotates_embedding(self):
        p = CycloPoint(3, -2, 5, 7)
        x, y = embed(p)
        c, s = math.cos(math.pi / 5), math.sin(math.pi / 5)
        rx, ry = embed(p * CycloPoint.tenth_root(1))
        assert abs(rx - (c * x - s * y)) < 1e-12
        assert abs(ry - (s * x + c * y)) < 1e-12

    def test_rotation_preserves_length(self):
        p = CycloPoint(2, -1, 3, 0)
        l0 = squared_length(p)
        for k in range(10):
            assert squared_length(p.rotate(k)) == l0

    def test_phi_scaling(self):
        p = CycloPoint(4, -3, 2, 1)
        assert p.times_phi().times_inv_phi() == p
        # multiplying by phi = zeta + zeta^4 + 1? no: check against embedding
        x0, y0 = embed(p)
        x1, y1 = embed(p.times_phi())
        assert abs(x1 - PHI_FLOAT * x0) < 1e-12
        assert abs(y1 - PHI_FLOAT * y0) < 1e-12

    def test_embed_unit_vectors(self):
        x, y = embed(CycloPoint.zeta(1))
        assert abs(x - math.cos(2 * math.pi / 5)) < 1e-12
        assert abs(y - math.sin(2 * math.pi / 5)) < 1e-12
        x, y = embed(CycloPoint.tenth_root(1))
        assert abs(x - math.cos(math.pi / 5)) < 1e-12
        assert abs(y - math.sin(math.pi / 5)) < 1e-12

    def test_embed_scale_exp(self):
        p = CycloPoint(1, 1, 0, -2)
        x0, y0 = embed(p)
        x2, y2 = embed(p, scale_exp=2)
        assert abs(x2 - x0 / PHI_FLOAT**2) < 1e-12
        assert abs(y2 - y0 / PHI_FLOAT**2) < 1e-12

    def test_conj_mirrors_embedding(self):
        p = CycloPoint(3, 1, -4, 2)
        x, y = embed(p)
        cx, cy = embed(p.conj())
        assert abs(cx - x) < 1e-12
        assert abs(cy + y) < 1e-12

    def test_integer_coeffs_required(self):
        with pytest.raises(TypeError):
            CycloPoint(1.5, 0, 0, 0)


class TestPredicates:
    def test_dot_matches_floats(self):
        import itertools

        pts = [CycloPoint(a, b, c, d)
               for a, b, c, d in itertools.product((-2, 0, 1, 3), repeat=4)]
        for p in pts[:40]:
            for q in pts[40:80]:
                exact = float(dot(p, q))
                px, py = embed(p)
                qx, qy = embed(q)
                assert abs(exact - (px * qx + py * qy)) < 1e-9

    def test_cross_matches_floats(self):
        rngpts = [CycloPoint(1, 2, -1, 0), CycloPoint(0, -3, 2, 5),
                  CycloPoint(-4, 1, 1, 1), CycloPoint(2, 0, 0, -3)]
        for p in rngpts:
            for q in rngpts:
                px, py = embed(p)
                qx, qy = embed(q)
                want = px * qy - py * qx
                got = float(cross_s72(p, q)) * SIN72
                assert abs(want - got) < 1e-9

    def test_orientation_sign(self):
        a = CycloPoint(1, 0, 0, 0)
        b = CycloPoint.zeta(1)
        assert orientation(CycloPoint(0, 0, 0, 0), a, b) == 1
        assert orientation(CycloPoint(0, 0, 0, 0), b, a) == -1
        assert orientation(CycloPoint(0, 0, 0, 0), a, a + a) == 0

    def test_squared_length_golden(self):
        w = CycloPoint.tenth_root(1)
        one = CycloPoint(1, 0, 0, 0)
        diag = one + w  # length 2cos(18)... check via floats
        x, y = embed(diag)
        assert abs(float(squared_length(diag)) - (x * x + y * y)) < 1e-9

    def test_frozen_constants(self):
        assert abs(SIN72 - math.sin(math.radians(72))) < 1e-15
        assert abs(SIN36 - math.sin(math.radians(36))) < 1e-15
