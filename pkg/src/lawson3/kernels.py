"""Backend selection for the hot mesh kernels.

Prefers the compiled Cython extension and falls back to the vectorized
numpy implementation when the extension is missing or when the environment
variable LAWSON3_PURE_PYTHON=1 is set.  `BACKEND` records which one is live;
benchmarks/bench_kernels.py compares the two.
"""

import os

import numpy as np

if os.environ.get("LAWSON3_PURE_PYTHON", "") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"


def _as_verts(verts) -> np.ndarray:
    return np.ascontiguousarray(verts, dtype=np.float64)


def _as_tris(tris) -> np.ndarray:
    return np.ascontiguousarray(tris, dtype=np.int32)


def total_area(verts, tris) -> float:
    return float(_impl.total_area(_as_verts(verts), _as_tris(tris)))


def area_and_gradient(verts, tris):
    """Return (total area, raw per-vertex gradient) for a triangle soup."""
    v = _as_verts(verts)
    grad = np.zeros_like(v)
    area = _impl.area_and_gradient(v, _as_tris(tris), grad)
    return float(area), grad
