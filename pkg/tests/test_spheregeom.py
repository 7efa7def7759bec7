import numpy as np
import pytest

from conftest import random_rotation
from lawson3.errors import AntipodalOrEqual, DegenerateVector, InvalidCircle
from lawson3.spheregeom import (
    GreatCircle,
    cross4,
    geodesic,
    halfturn,
    normalize,
    sphere_angle,
    vertex_angle,
)

E = np.eye(4)


class TestNormalize:
    def test_scaling(self):
        np.testing.assert_allclose(normalize([2, 0, 0, 0]), [1, 0, 0, 0])

    def test_diagonal(self):
        r = np.sqrt(2) / 2
        np.testing.assert_allclose(normalize([1, 1, 0, 0]), [r, r, 0, 0])

    def test_zero_vector(self):
        with pytest.raises(DegenerateVector):
            normalize([0, 0, 0, 0])

    def test_unit_invariant(self, rng):
        for _ in range(50):
            v = rng.normal(size=4)
            assert abs(np.linalg.norm(normalize(v)) - 1.0) < 1e-12


class TestGeodesic:
    def test_orthogonal_midpoint(self):
        r = np.sqrt(2) / 2
        got = geodesic([0, 0, 1, 0], [1, 0, 0, 0], 0.5)
        np.testing.assert_allclose(got, [r, 0, r, 0], atol=1e-15)

    def test_endpoints_exact(self, rng):
        p = normalize(rng.normal(size=4))
        q = normalize(rng.normal(size=4))
        assert np.array_equal(geodesic(p, q, 0.0), p)
        assert np.array_equal(geodesic(p, q, 1.0), q)

    def test_one_third_point(self):
        # independent evaluation of the interpolation formula at t = 1/3
        p = np.array([0.0, 0.0, 1.0, 0.0])
        q = np.array([1.0, 0.0, 0.0, 0.0])
        theta = np.pi / 2
        expected = (np.sin(2 * theta / 3) * p + np.sin(theta / 3) * q) / np.sin(theta)
        got = geodesic(p, q, 1 / 3)
        np.testing.assert_allclose(got, expected, atol=1e-15)
        np.testing.assert_allclose(got, [0.5, 0.0, np.sqrt(3) / 2, 0.0], atol=1e-15)

    def test_antipodal_rejected(self):
        p = np.array([1.0, 0, 0, 0])
        with pytest.raises(AntipodalOrEqual):
            geodesic(p, -p, 0.5)
        with pytest.raises(AntipodalOrEqual):
            geodesic(p, p, 0.5)

    def test_unit_norm_and_arc_length(self, rng):
        for _ in range(20):
            p = normalize(rng.normal(size=4))
            q = normalize(rng.normal(size=4))
            theta = sphere_angle(p, q)
            for t in rng.uniform(0, 1, size=5):
                g = geodesic(p, q, float(t))
                assert abs(np.linalg.norm(g) - 1.0) < 1e-12
                assert abs(sphere_angle(p, g) - t * theta) < 1e-10


class TestHalfturn:
    def test_coordinate_planes(self):
        c12 = GreatCircle(u=E[0], v=E[1])
        np.testing.assert_allclose(halfturn(c12), np.diag([1, 1, -1, -1]), atol=1e-15)
        c13 = GreatCircle(u=E[0], v=E[2])
        np.testing.assert_allclose(halfturn(c13), np.diag([1, -1, 1, -1]), atol=1e-15)

    def test_tilted_circle(self):
        u = np.array([1.0, 1.0, 0.0, 0.0]) / np.sqrt(2)
        c = GreatCircle(u=u, v=E[2])
        expected = np.array(
            [
                [0, 1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, -1],
            ],
            dtype=float,
        )
        np.testing.assert_allclose(halfturn(c), expected, atol=1e-15)

    def test_invalid_circle(self):
        bad = GreatCircle(u=E[0], v=E[0])
        with pytest.raises(InvalidCircle):
            halfturn(bad)

    def test_fixes_circle_and_is_involution(self, rng):
        for _ in range(10):
            c = GreatCircle.from_points(
                normalize(rng.normal(size=4)), normalize(rng.normal(size=4))
            )
            r = halfturn(c)
            for t in rng.uniform(0, 2 * np.pi, size=8):
                p = c.point(float(t))
                assert np.linalg.norm(r @ p - p) < 1e-10
            assert np.linalg.norm(r @ r - E) < 1e-10
            assert abs(np.linalg.det(r) - 1.0) < 1e-10
            eig = np.sort(np.linalg.eigvalsh((r + r.T) / 2))
            np.testing.assert_allclose(eig, [-1, -1, 1, 1], atol=1e-10)


class TestVertexAngle:
    def test_orthogonal_tangents(self):
        assert abs(vertex_angle(E[2], E[0], E[1]) - np.pi / 2) < 1e-12

    def test_quad_corner_angles_21(self):
        # corner angles of the fundamental quadrilateral at (m, k) = (2, 1)
        from lawson3.symmetry import LawsonParams, canonical_vertices

        P, Q = canonical_vertices(LawsonParams(2, 1))
        assert abs(vertex_angle(P[0], Q[0], Q[1]) - np.pi / 3) < 1e-12
        assert abs(vertex_angle(Q[0], P[0], P[1]) - np.pi / 2) < 1e-12

    def test_antipodal_rejected(self):
        with pytest.raises(AntipodalOrEqual):
            vertex_angle(E[0], -E[0], E[1])

    def test_symmetry_and_rotation_invariance(self, rng):
        for _ in range(20):
            apex = normalize(rng.normal(size=4))
            a = normalize(rng.normal(size=4))
            b = normalize(rng.normal(size=4))
            ang = vertex_angle(apex, a, b)
            assert abs(ang - vertex_angle(apex, b, a)) < 1e-12
            rot = random_rotation(rng)
            assert abs(ang - vertex_angle(rot @ apex, rot @ a, rot @ b)) < 1e-9


class TestCross4:
    def test_orthogonality(self, rng):
        for _ in range(20):
            x, y, z = rng.normal(size=(3, 4))
            w = cross4(x, y, z)
            for v in (x, y, z):
                assert abs(np.dot(w, v)) < 1e-10

    def test_coordinate_value(self):
        np.testing.assert_allclose(cross4(E[0], E[1], E[2]), E[3], atol=1e-15)
