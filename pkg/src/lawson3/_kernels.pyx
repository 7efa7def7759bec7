# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mesh kernels: chordal triangle areas and their vertex gradients.

These two loops dominate the Plateau solver's runtime; the pure numpy
twin lives in _kernels_py.py and must stay behaviorally identical.
"""

from libc.math cimport sqrt

DEF AREA_FLOOR = 1e-150


def total_area(const double[:, ::1] verts, const int[:, ::1] tris):
    """Sum of chordal (Euclidean) triangle areas in 4-space."""
    cdef Py_ssize_t t, d, ia, ib, ic
    cdef double u[4]
    cdef double v[4]
    cdef double uu, vv, uv, disc, total
    total = 0.0
    for t in range(tris.shape[0]):
        ia = tris[t, 0]
        ib = tris[t, 1]
        ic = tris[t, 2]
        uu = 0.0
        vv = 0.0
        uv = 0.0
        for d in range(4):
            u[d] = verts[ib, d] - verts[ia, d]
            v[d] = verts[ic, d] - verts[ia, d]
            uu += u[d] * u[d]
            vv += v[d] * v[d]
            uv += u[d] * v[d]
        disc = uu * vv - uv * uv
        if disc > 0.0:
            total += 0.5 * sqrt(disc)
    return total


def area_and_gradient(const double[:, ::1] verts, const int[:, ::1] tris,
                      double[:, ::1] grad):
    """Total area plus the per-vertex area gradient, accumulated into grad.

    grad must be zero-initialized with the same shape as verts.  Triangles
    with (numerically) zero area contribute no gradient.
    """
    cdef Py_ssize_t t, d, ia, ib, ic
    cdef double u[4]
    cdef double v[4]
    cdef double gb, gc
    cdef double uu, vv, uv, disc, a, coef, total
    total = 0.0
    for t in range(tris.shape[0]):
        ia = tris[t, 0]
        ib = tris[t, 1]
        ic = tris[t, 2]
        uu = 0.0
        vv = 0.0
        uv = 0.0
        for d in range(4):
            u[d] = verts[ib, d] - verts[ia, d]
            v[d] = verts[ic, d] - verts[ia, d]
            uu += u[d] * u[d]
            vv += v[d] * v[d]
            uv += u[d] * v[d]
        disc = uu * vv - uv * uv
        if disc <= 0.0:
            continue
        a = 0.5 * sqrt(disc)
        total += a
        if a <= AREA_FLOOR:
            continue
        coef = 0.25 / a
        for d in range(4):
            gb = coef * (vv * u[d] - uv * v[d])
            gc = coef * (uu * v[d] - uv * u[d])
            grad[ib, d] += gb
            grad[ic, d] += gc
            grad[ia, d] -= gb + gc
    return total
