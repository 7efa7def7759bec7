"""Both kernel backends must agree on areas and gradients."""

import numpy as np
import pytest

from lawson3 import _kernels_py
from lawson3 import kernels

try:
    from lawson3 import _kernels

    BACKENDS = [("cython", _kernels), ("python", _kernels_py)]
except ImportError:
    BACKENDS = [("python", _kernels_py)]


def _random_mesh(rng, nv=200, nt=360):
    verts = rng.normal(size=(nv, 4))
    verts /= np.linalg.norm(verts, axis=1)[:, None]
    tris = rng.integers(0, nv, size=(nt, 3)).astype(np.int32)
    keep = (tris[:, 0] != tris[:, 1]) & (tris[:, 1] != tris[:, 2]) & (tris[:, 0] != tris[:, 2])
    return np.ascontiguousarray(verts), np.ascontiguousarray(tris[keep])


def _heron(a, b, c):
    la = np.linalg.norm(b - c)
    lb = np.linalg.norm(a - c)
    lc = np.linalg.norm(a - b)
    s = (la + lb + lc) / 2
    return np.sqrt(max(s * (s - la) * (s - lb) * (s - lc), 0.0))


@pytest.mark.parametrize("name,impl", BACKENDS)
def test_single_triangle_against_heron(name, impl):
    verts = np.ascontiguousarray(np.eye(4)[:3][:, [2, 0, 1, 3]], dtype=float)
    verts = np.ascontiguousarray(
        np.array([[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=float)
    )
    tris = np.array([[0, 1, 2]], dtype=np.int32)
    got = impl.total_area(verts, tris)
    assert abs(got - np.sqrt(3) / 2) < 1e-15
    assert abs(got - _heron(*verts)) < 1e-12


@pytest.mark.parametrize("name,impl", BACKENDS)
def test_area_matches_heron_sum(name, impl, rng):
    verts, tris = _random_mesh(rng)
    expected = sum(_heron(verts[i], verts[j], verts[k]) for i, j, k in tris)
    assert abs(impl.total_area(verts, tris) - expected) < 1e-10


def test_backends_agree(rng):
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend unavailable")
    verts, tris = _random_mesh(rng)
    a_c = _kernels.total_area(verts, tris)
    a_p = _kernels_py.total_area(verts, tris)
    assert abs(a_c - a_p) < 1e-12
    g_c = np.zeros_like(verts)
    g_p = np.zeros_like(verts)
    ac = _kernels.area_and_gradient(verts, tris, g_c)
    ap = _kernels_py.area_and_gradient(verts, tris, g_p)
    assert abs(ac - ap) < 1e-12
    np.testing.assert_allclose(g_c, g_p, atol=1e-12)


@pytest.mark.parametrize("name,impl", BACKENDS)
def test_degenerate_triangle_is_harmless(name, impl):
    verts = np.ascontiguousarray(
        np.array([[1, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=float)
    )
    tris = np.array([[0, 1, 2]], dtype=np.int32)
    assert impl.total_area(verts, tris) == 0.0
    grad = np.zeros_like(verts)
    assert impl.area_and_gradient(verts, tris, grad) == 0.0
    assert np.all(np.isfinite(grad))


def test_selector_handles_lists():
    area = kernels.total_area(
        [[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]], [[0, 1, 2]]
    )
    assert abs(area - np.sqrt(3) / 2) < 1e-15
    a, g = kernels.area_and_gradient(
        [[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]], [[0, 1, 2]]
    )
    assert abs(a - np.sqrt(3) / 2) < 1e-15
    assert g.shape == (3, 4)
