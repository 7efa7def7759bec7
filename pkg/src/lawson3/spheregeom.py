"""Primitive geometry of the unit 3-sphere.

Points are plain numpy arrays of shape (4,), rotations are (4, 4) arrays,
and great circles are orthonormal spanning pairs.  Everything here is a pure
function of its inputs; angles are computed with atan2 for stability near
0 and pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS, Tolerances
from .errors import AntipodalOrEqual, DegenerateVector, InvalidCircle, NotOrthogonal


def normalize(p, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    """Scale a raw 4-vector to unit length, preserving direction."""
    p = np.asarray(p, dtype=float)
    n = float(np.linalg.norm(p))
    if n <= tols.degenerate:
        raise DegenerateVector(f"cannot normalize vector of norm {n:.3e}")
    return p / n


def sphere_angle(p, q) -> float:
    """Angle in [0, pi] between two unit 4-vectors."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    d = float(np.dot(p, q))
    rej = q - d * p
    return float(np.arctan2(np.linalg.norm(rej), d))


def geodesic(p, q, t: float, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    """Point at parameter t in [0, 1] on the minor great-circle arc from p to q.

    Endpoints are reproduced exactly at t = 0 and t = 1.  Raises
    AntipodalOrEqual when p and q do not span a unique minor arc.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    d = float(np.dot(p, q))
    if abs(d) >= 1.0 - tols.degenerate:
        raise AntipodalOrEqual(f"points are equal or antipodal (dot = {d:.12f})")
    if t == 0.0:
        return p.copy()
    if t == 1.0:
        return q.copy()
    theta = sphere_angle(p, q)
    s = np.sin(theta)
    return (np.sin((1.0 - t) * theta) * p + np.sin(t * theta) * q) / s


def vertex_angle(apex, a, b, tols: Tolerances = DEFAULT_TOLS) -> float:
    """Angle at `apex` between the geodesic arcs apex->a and apex->b."""
    apex = np.asarray(apex, dtype=float)
    ta = _arc_tangent(apex, a, tols)
    tb = _arc_tangent(apex, b, tols)
    d = float(np.dot(ta, tb))
    rej = tb - d * ta
    return float(np.arctan2(np.linalg.norm(rej), d))


def _arc_tangent(apex, other, tols: Tolerances) -> np.ndarray:
    other = np.asarray(other, dtype=float)
    d = float(np.dot(apex, other))
    if abs(d) >= 1.0 - tols.degenerate:
        raise AntipodalOrEqual("arc endpoint equals or opposes the apex")
    t = other - d * apex
    return t / np.linalg.norm(t)


@dataclass(frozen=True)
class GreatCircle:
    """A great circle of S^3, stored as an orthonormal spanning pair.

    The represented circle is {cos(t) u + sin(t) v}.  Construction applies
    Gram-Schmidt, so any two independent unit-sphere points define a circle.
    """

    u: np.ndarray
    v: np.ndarray

    @classmethod
    def from_points(cls, p, q, tols: Tolerances = DEFAULT_TOLS) -> "GreatCircle":
        u = normalize(p, tols)
        q = np.asarray(q, dtype=float)
        w = q - np.dot(q, u) * u
        n = float(np.linalg.norm(w))
        if n <= tols.degenerate:
            raise DegenerateVector("spanning points are collinear")
        return cls(u=u, v=w / n)

    def point(self, t: float) -> np.ndarray:
        return np.cos(t) * self.u + np.sin(t) * self.v

    def contains(self, p, tol: float = 1e-10) -> bool:
        p = np.asarray(p, dtype=float)
        proj = np.dot(p, self.u) * self.u + np.dot(p, self.v) * self.v
        return bool(np.linalg.norm(p - proj) <= tol and abs(np.linalg.norm(p) - 1.0) <= tol)

    def tangent_at(self, p, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
        """Unit tangent of the circle at a point p of the circle."""
        p = np.asarray(p, dtype=float)
        t = np.dot(p, self.v) * self.u - np.dot(p, self.u) * self.v
        n = float(np.linalg.norm(t))
        if n <= tols.degenerate:
            raise DegenerateVector("point is not on the circle")
        return t / n


def check_circle(c: GreatCircle, tols: Tolerances = DEFAULT_TOLS) -> None:
    defect = max(
        abs(float(np.dot(c.u, c.u)) - 1.0),
        abs(float(np.dot(c.v, c.v)) - 1.0),
        abs(float(np.dot(c.u, c.v))),
    )
    if defect > tols.unit * 10:
        raise InvalidCircle(f"spanning pair orthonormality defect {defect:.3e}")


def halfturn(c: GreatCircle, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    """Rotation by pi about a great circle: 2P - I with P the projection
    onto span(u, v).  Fixes the circle pointwise; an involution in SO(4)."""
    check_circle(c, tols)
    proj = np.outer(c.u, c.u) + np.outer(c.v, c.v)
    return 2.0 * proj - np.eye(4)


def is_rotation(m, tols: Tolerances = DEFAULT_TOLS) -> bool:
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        return False
    defect = float(np.linalg.norm(m.T @ m - np.eye(4)))
    return defect <= tols.orth and abs(float(np.linalg.det(m)) - 1.0) <= tols.orth


def check_rotation(m, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if not is_rotation(m, tols):
        raise NotOrthogonal("matrix is not special orthogonal within tolerance")
    return m


def rotate_points(rotation: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Apply a rotation to an (N, 4) array of row vectors."""
    return points @ np.asarray(rotation, dtype=float).T


def cross4(x, y, z) -> np.ndarray:
    """Generalized cross product: the 4-vector w orthogonal to x, y and z,
    oriented so that (x, y, z, w) is a positively oriented frame.

    Accepts stacked (..., 4) inputs.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    x0, x1, x2, x3 = (x[..., i] for i in range(4))
    y0, y1, y2, y3 = (y[..., i] for i in range(4))
    z0, z1, z2, z3 = (z[..., i] for i in range(4))
    m01 = y0 * z1 - y1 * z0
    m02 = y0 * z2 - y2 * z0
    m03 = y0 * z3 - y3 * z0
    m12 = y1 * z2 - y2 * z1
    m13 = y1 * z3 - y3 * z1
    m23 = y2 * z3 - y3 * z2
    out = np.empty(np.broadcast(x0, y0, z0).shape + (4,))
    out[..., 0] = -(x1 * m23 - x2 * m13 + x3 * m12)
    out[..., 1] = x0 * m23 - x2 * m03 + x3 * m02
    out[..., 2] = -(x0 * m13 - x1 * m03 + x3 * m01)
    out[..., 3] = x0 * m12 - x1 * m02 + x2 * m01
    return out
