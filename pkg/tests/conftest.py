import numpy as np
import pytest

from lawson3.pipeline import build_surface
from lawson3.symmetry import LawsonParams

_BUILD_CACHE = {}


def cached_build(m, k, n, refinements, **kwargs):
    """Session-wide cache of pipeline builds keyed by configuration."""
    key = (m, k, n, refinements, tuple(sorted(kwargs.items())))
    if key not in _BUILD_CACHE:
        _BUILD_CACHE[key] = build_surface(
            LawsonParams(m=m, k=k), n=n, refinements=refinements, **kwargs
        )
    return _BUILD_CACHE[key]


@pytest.fixture(scope="session")
def built_11_small():
    """Clifford-torus build at modest resolution, shared across tests."""
    return cached_build(1, 1, 8, 1)


@pytest.fixture(scope="session")
def built_21_small():
    return cached_build(2, 1, 8, 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_rotation(rng):
    """Haar-ish random element of SO(4) via QR of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.normal(size=(4, 4)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
