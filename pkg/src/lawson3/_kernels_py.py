"""Pure numpy twin of the compiled mesh kernels.

Used when the Cython extension is unavailable (or forced via the
LAWSON3_PURE_PYTHON environment variable).  Same contracts as _kernels.pyx.
"""

import numpy as np

AREA_FLOOR = 1e-150


def _corner_frames(verts, tris):
    a = verts[tris[:, 0]]
    b = verts[tris[:, 1]]
    c = verts[tris[:, 2]]
    u = b - a
    v = c - a
    uu = np.einsum("ij,ij->i", u, u)
    vv = np.einsum("ij,ij->i", v, v)
    uv = np.einsum("ij,ij->i", u, v)
    disc = np.maximum(uu * vv - uv * uv, 0.0)
    return u, v, uu, vv, uv, disc


def total_area(verts, tris):
    """Sum of chordal (Euclidean) triangle areas in 4-space."""
    if len(tris) == 0:
        return 0.0
    _, _, _, _, _, disc = _corner_frames(verts, tris)
    return float(0.5 * np.sqrt(disc).sum())


def area_and_gradient(verts, tris, grad):
    """Total area plus the per-vertex area gradient, accumulated into grad."""
    if len(tris) == 0:
        return 0.0
    u, v, uu, vv, uv, disc = _corner_frames(verts, tris)
    areas = 0.5 * np.sqrt(disc)
    coef = np.where(areas > AREA_FLOOR, 0.25 / np.maximum(areas, AREA_FLOOR), 0.0)
    gb = coef[:, None] * (vv[:, None] * u - uv[:, None] * v)
    gc = coef[:, None] * (uu[:, None] * v - uv[:, None] * u)
    ga = -gb - gc
    n = len(verts)
    for d in range(4):
        grad[:, d] += np.bincount(tris[:, 0], weights=ga[:, d], minlength=n)
        grad[:, d] += np.bincount(tris[:, 1], weights=gb[:, d], minlength=n)
        grad[:, d] += np.bincount(tris[:, 2], weights=gc[:, d], minlength=n)
    return float(areas.sum())
