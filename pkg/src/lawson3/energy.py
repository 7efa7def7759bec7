"""Discrete area, mean curvature and Willmore energy for meshes in the
3-sphere.

The squared-mean-curvature energy of a surface in the unit sphere splits as
area plus the integral of the intrinsic (in-sphere) mean curvature squared;
the code mirrors that decomposition.  The intrinsic mean curvature comes
from the cotangent Laplacian of the coordinate functions: its value at a
vertex is the gradient of total area there, the component along the sphere
normal (the position vector) is discarded, and the remainder is read off
along the surface normal and divided by twice the vertex mixed area
(barycentric thirds, which are always positive).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroMixedArea
from .plateau import TriMesh, vertex_normals
from .symmetry import LawsonParams

MIXED_AREA_FLOOR = 1e-300


def cot_laplacian_coords(verts: np.ndarray, tris: np.ndarray) -> np.ndarray:
    """Cotangent Laplacian applied to the coordinate functions.

    Returns the per-vertex 4-vector  L_i = 1/2 sum_j (cot a_ij + cot b_ij)
    (x_i - x_j)  over neighbors j, which is also the exact gradient of total
    chordal area at vertex i.
    """
    verts = np.asarray(verts, dtype=float)
    out = np.zeros_like(verts)
    nv = len(verts)
    corners = np.asarray(tris)
    for c in range(3):
        i = corners[:, (c + 1) % 3]
        j = corners[:, (c + 2) % 3]
        o = corners[:, c]
        u = verts[i] - verts[o]
        v = verts[j] - verts[o]
        uv = np.einsum("ij,ij->i", u, v)
        uu = np.einsum("ij,ij->i", u, u)
        vv = np.einsum("ij,ij->i", v, v)
        twice_area = np.sqrt(np.maximum(uu * vv - uv * uv, 0.0))
        cot = np.where(twice_area > MIXED_AREA_FLOOR, uv / np.maximum(twice_area, MIXED_AREA_FLOOR), 0.0)
        w = 0.5 * cot
        diff = verts[i] - verts[j]
        for d in range(4):
            out[:, d] += np.bincount(i, w * diff[:, d], minlength=nv)
            out[:, d] -= np.bincount(j, w * diff[:, d], minlength=nv)
    return out


def triangle_areas(verts: np.ndarray, tris: np.ndarray) -> np.ndarray:
    a = verts[tris[:, 0]]
    b = verts[tris[:, 1]]
    c = verts[tris[:, 2]]
    u = b - a
    v = c - a
    uu = np.einsum("ij,ij->i", u, u)
    vv = np.einsum("ij,ij->i", v, v)
    uv = np.einsum("ij,ij->i", u, v)
    return 0.5 * np.sqrt(np.maximum(uu * vv - uv * uv, 0.0))


def mixed_areas(verts: np.ndarray, tris: np.ndarray) -> np.ndarray:
    """Barycentric-thirds vertex areas; raises ZeroMixedArea on degenerate
    vertex stars."""
    areas = triangle_areas(verts, tris)
    out = np.zeros(len(verts))
    for c in range(3):
        out += np.bincount(tris[:, c], areas / 3.0, minlength=len(verts))
    if float(out.min()) <= MIXED_AREA_FLOOR:
        bad = int(np.argmin(out))
        raise ZeroMixedArea(f"vertex {bad} has no usable incident triangle area")
    return out


def mean_curvature(mesh: TriMesh) -> np.ndarray:
    """Per-vertex intrinsic (in-sphere) mean curvature of a closed mesh.

    The sign follows the triangle winding through the vertex normals;
    magnitudes are orientation-independent.
    """
    verts = np.asarray(mesh.vertices, dtype=float)
    tris = np.asarray(mesh.triangles)
    lap = cot_laplacian_coords(verts, tris)
    lap_tan = lap - np.einsum("ij,ij->i", lap, verts)[:, None] * verts
    normals, ok = vertex_normals(verts, tris)
    signed = np.einsum("ij,ij->i", lap_tan, normals)
    areas = mixed_areas(verts, tris)
    h = signed / (2.0 * areas)
    h[~ok] = 0.0
    return h


@dataclass
class EnergyReport:
    area: float
    willmore: float
    sup_mean_curvature: float
    upper_bound: float | None = None
    bound_satisfied: bool | None = None

    def to_json(self) -> dict:
        return {
            "area": self.area,
            "willmore": self.willmore,
            "sup_mean_curvature": self.sup_mean_curvature,
            "upper_bound": self.upper_bound,
            "bound_satisfied": self.bound_satisfied,
        }


def area_upper_bound(params: LawsonParams) -> float:
    """The strict area bound 4*pi*(min(m, k) + 1)."""
    return 4.0 * np.pi * (min(params.m, params.k) + 1)


def willmore_energy(mesh: TriMesh, params: LawsonParams | None = None) -> EnergyReport:
    """Area plus the lumped integral of squared intrinsic mean curvature."""
    h = mean_curvature(mesh)
    areas = mixed_areas(mesh.vertices, mesh.triangles)
    total_area = float(areas.sum())
    willmore = total_area + float((h * h * areas).sum())
    bound = area_upper_bound(params) if params is not None else None
    return EnergyReport(
        area=total_area,
        willmore=willmore,
        sup_mean_curvature=float(np.abs(h).max()),
        upper_bound=bound,
        bound_satisfied=None if bound is None else bool(total_area < bound),
    )


@dataclass
class ComparisonReport:
    params_a: LawsonParams
    params_b: LawsonParams
    area_a: float
    area_b: float
    error_bar: float
    verdict: str  # "greater" | "less" | "equal" | "inconclusive"

    def to_json(self) -> dict:
        return {
            "a": {"m": self.params_a.m, "k": self.params_a.k, "area": self.area_a},
            "b": {"m": self.params_b.m, "k": self.params_b.k, "area": self.area_b},
            "error_bar": self.error_bar,
            "verdict": self.verdict,
        }


def compare_lawson(
    params_a: LawsonParams,
    params_b: LawsonParams,
    areas_a,
    areas_b,
) -> ComparisonReport:
    """Order two solved surface areas with an honest error bar.

    areas_* are the converged areas per refinement level (coarse to fine).
    The bar is the sum of the two last-level jumps; a gap inside the bar is
    reported as inconclusive rather than ordered.
    """
    areas_a = [float(x) for x in areas_a]
    areas_b = [float(x) for x in areas_b]
    a, b = areas_a[-1], areas_b[-1]
    bar_a = abs(areas_a[-1] - areas_a[-2]) if len(areas_a) >= 2 else float("inf")
    bar_b = abs(areas_b[-1] - areas_b[-2]) if len(areas_b) >= 2 else float("inf")
    bar = bar_a + bar_b
    if a == b:
        verdict = "equal"
    elif abs(a - b) <= bar:
        verdict = "inconclusive"
    else:
        verdict = "greater" if a > b else "less"
    return ComparisonReport(
        params_a=params_a,
        params_b=params_b,
        area_a=a,
        area_b=b,
        error_bar=bar,
        verdict=verdict,
    )
