import numpy as np
import pytest

from lawson3.config import DEFAULT_TOLS
from lawson3.spheregeom import geodesic, halfturn
from lawson3.symmetry import (
    Group,
    LawsonParams,
    canonical_vertices,
    gamma,
    lawson_group,
)
from lawson3.tiling import (
    TileIndex,
    all_tiles,
    angular_coords,
    locate_tile,
    quadrilateral,
    tile_center,
    tile_contains,
    tile_orbits,
)


class TestAngularCoords:
    def test_pure_first_block(self):
        a, b, r = angular_coords([1, 0, 0, 0])
        assert a == 0.0 and b is None and abs(r - 1.0) < 1e-15

    def test_pure_second_block(self):
        s = np.sqrt(2) / 2
        a, b, r = angular_coords([0, 0, s, s])
        assert a is None and abs(b - np.pi / 4) < 1e-15 and abs(r) < 1e-15

    def test_mixed(self):
        a, b, r = angular_coords([0.5, 0, np.sqrt(3) / 2, 0])
        assert a == 0.0 and b == 0.0 and abs(r - 0.5) < 1e-15

    def test_reconstruction(self, rng):
        for _ in range(30):
            p = rng.normal(size=4)
            p /= np.linalg.norm(p)
            a, b, r = angular_coords(p)
            if a is None or b is None:
                continue
            s = np.sqrt(1 - r * r)
            rebuilt = [r * np.cos(a), r * np.sin(a), s * np.cos(b), s * np.sin(b)]
            np.testing.assert_allclose(rebuilt, p, atol=1e-9)


class TestTileContains:
    def test_edge_of_tile(self):
        params = LawsonParams(1, 1)
        P, Q = canonical_vertices(params)
        idx = TileIndex(params, 0, 0)
        for t in np.linspace(0, 1, 9):
            assert tile_contains(idx, geodesic(P[0], Q[0], float(t)), 1e-9)

    def test_q2_outside_for_21(self):
        params = LawsonParams(2, 1)
        _, Q = canonical_vertices(params)
        np.testing.assert_allclose(Q[2], [-0.5, np.sqrt(3) / 2, 0, 0], atol=1e-15)
        # alpha = 2 pi / 3 exceeds the tile's alpha range [0, pi/3]
        assert not tile_contains(TileIndex(params, 0, 0), Q[2], 1e-9)

    def test_center_contained_strictly(self):
        for m, k in [(1, 1), (3, 2)]:
            params = LawsonParams(m, k)
            for idx in all_tiles(params):
                c = tile_center(idx)
                assert tile_contains(idx, c, 0.0)
                assert tile_contains(idx, c, -DEFAULT_TOLS.interior_margin)


class TestTileCenter:
    def test_11_value(self):
        c = tile_center(TileIndex(LawsonParams(1, 1), 0, 0))
        np.testing.assert_allclose(c, [0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_angular_position(self):
        params = LawsonParams(3, 2)
        for idx in all_tiles(params):
            a, b, _ = angular_coords(tile_center(idx))
            phi = np.pi / (params.m + 1)
            theta = np.pi / (params.k + 1)
            assert abs((a - (idx.l + 0.5) * phi) % (2 * np.pi)) < 1e-12
            assert abs((b - (idx.j + 0.5) * theta) % (2 * np.pi)) < 1e-12


class TestQuadrilateral:
    def test_11_corner_order(self):
        quad = quadrilateral(LawsonParams(1, 1), (0, 0))
        e = np.eye(4)
        np.testing.assert_allclose(quad.vertices[0], e[2], atol=1e-15)
        np.testing.assert_allclose(quad.vertices[1], e[0], atol=1e-15)
        np.testing.assert_allclose(quad.vertices[2], e[3], atol=1e-15)
        np.testing.assert_allclose(quad.vertices[3], e[1], atol=1e-15)

    @pytest.mark.parametrize("m,k", [(1, 1), (2, 1), (4, 3), (6, 6)])
    def test_edges_and_angles(self, m, k):
        params = LawsonParams(m, k)
        quad = quadrilateral(params, (0, 0))
        np.testing.assert_allclose(quad.edge_lengths(), np.pi / 2, atol=1e-12)
        angles = quad.corner_angles()
        assert abs(angles[0] - np.pi / (params.m + 1)) < 1e-10
        assert abs(angles[2] - np.pi / (params.m + 1)) < 1e-10
        assert abs(angles[1] - np.pi / (params.k + 1)) < 1e-10
        assert abs(angles[3] - np.pi / (params.k + 1)) < 1e-10


class TestTileOrbits:
    @pytest.mark.parametrize("m,k,orbit", [(1, 1, 8), (2, 1, 12)])
    def test_two_orbits(self, m, k, orbit):
        params = LawsonParams(m, k)
        group = lawson_group(params)
        orbits = tile_orbits(group, params)
        assert sorted(len(o) for o in orbits) == [orbit, orbit]
        assert sum(len(o) for o in orbits) == params.tile_count

    def test_identity_only(self):
        params = LawsonParams(2, 1)
        trivial = Group(
            elements=np.eye(4)[None, :, :], words=[()], generators=np.zeros((0, 4, 4))
        )
        orbits = tile_orbits(trivial, params)
        assert len(orbits) == params.tile_count
        assert all(len(o) == 1 for o in orbits)

    def test_generator_maps_tile_across_its_circle(self):
        params = LawsonParams(3, 2)
        for (j, l) in [(0, 0), (1, 2), (2, 3)]:
            turn = halfturn(gamma(params, j, l))
            image = turn @ tile_center(TileIndex(params, j, l))
            target = locate_tile(params, image)
            assert (target.j, target.l) == (
                (j - 1) % (2 * params.k + 2),
                (l - 1) % (2 * params.m + 2),
            )
            # the image tile shares the arc P_j Q_l, which lies on the circle
            P, Q = canonical_vertices(params)
            for t in np.linspace(0.1, 0.9, 5):
                p = geodesic(P[j], Q[l], float(t))
                assert tile_contains(target, p, 1e-9)
                assert tile_contains(TileIndex(params, j, l), p, 1e-9)


class TestCoverage:
    def test_random_points_covered(self, rng):
        params = LawsonParams(2, 2)
        tiles = all_tiles(params)
        pts = rng.normal(size=(300, 4))
        pts /= np.linalg.norm(pts, axis=1)[:, None]
        for p in pts:
            hits = [t for t in tiles if tile_contains(t, p, DEFAULT_TOLS.wall)]
            assert len(hits) >= 1
            strict = [
                t for t in tiles if tile_contains(t, p, -DEFAULT_TOLS.interior_margin)
            ]
            if strict:
                assert len(hits) == 1
