"""Discrete Plateau solver: least-area triangulated disks in the 3-sphere.

The disk is discretized with vertices constrained to the unit sphere and a
fixed boundary sampled on the geodesic edges of the target quadrilateral.
The functional is the chordal (Euclidean 4-space) triangle area, whose
gradient is exact and which converges to spherical area under refinement.

Descent moves each free vertex along the component of the constraint-
projected area gradient normal to the current surface.  Descending the raw
tangential gradient instead lets vertices slide inside the surface and
collapse triangles (the area of an inscribed mesh keeps dropping as the
effective triangulation coarsens), so the gradient never converges; the
normal restriction removes exactly that reparametrization channel while
remaining a descent direction, and its fixed points are the meshes with
vanishing discrete mean curvature.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .config import DEFAULT_TOLS, Tolerances
from .errors import DegenerateVector, LineSearchStalled
from .spheregeom import cross4, geodesic, halfturn, GreatCircle
from .tiling import Quad, TileIndex, tile_contains

logger = logging.getLogger("lawson3.plateau")

BoundaryParams = dict[int, list[tuple[int, float]]]


@dataclass
class TriMesh:
    """Triangulated surface patch with unit-norm vertices.

    boundary marks fixed vertices; boundary_param optionally records, per
    boundary vertex, the quad edges it lies on with arc parameters.
    """

    vertices: np.ndarray  # (n, 4) float64
    triangles: np.ndarray  # (t, 3) int32
    boundary: np.ndarray  # (n,) bool
    boundary_param: BoundaryParams | None = None

    def copy(self) -> "TriMesh":
        return TriMesh(
            vertices=self.vertices.copy(),
            triangles=self.triangles.copy(),
            boundary=self.boundary.copy(),
            boundary_param=None
            if self.boundary_param is None
            else {i: list(v) for i, v in self.boundary_param.items()},
        )


@dataclass
class SolverOptions:
    grad_tol: float = 1e-6
    max_iters: int = 50000
    step_init: float = 1.0
    shrink: float = 0.5
    armijo: float = 1e-4
    min_step: float = 1e-14
    step_cap: float = 100.0
    log_every: int = 100


@dataclass
class SolveResult:
    """Minimization outcome; `converged` distinguishes the gradient test
    from the iteration cap."""

    mesh: TriMesh
    converged: bool
    iterations: int
    area: float
    grad_sup: float
    area_history: np.ndarray = field(repr=False, default=None)


def coons_initial_mesh(quad: Quad, n: int) -> TriMesh:
    """Transfinite interpolation of the four geodesic edges on an
    (n+1) x (n+1) grid, each point normalized to the sphere.

    Grid rows follow edge 0 (corner 0 to corner 1); the boundary rows and
    columns lie exactly on the geodesic edges.
    """
    if n < 1:
        raise ValueError("grid resolution n must be >= 1")
    a, b = quad.corner(0), quad.corner(1)
    c, d = quad.corner(2), quad.corner(3)
    n1 = n + 1
    verts = np.zeros((n1 * n1, 4))
    bnd = np.zeros(n1 * n1, dtype=bool)
    bparam: BoundaryParams = {}

    def vid(i: int, j: int) -> int:
        return i * n1 + j

    bottom = [quad.edge_point(0, i / n) for i in range(n1)]  # a -> b
    top = [geodesic(d, c, i / n) for i in range(n1)]  # d -> c, same s direction
    left = [geodesic(a, d, j / n) for j in range(n1)]  # a -> d
    right = [quad.edge_point(1, j / n) for j in range(n1)]  # b -> c
    for i in range(n1):
        s = i / n
        for j in range(n1):
            t = j / n
            blend = (
                (1 - t) * bottom[i]
                + t * top[i]
                + (1 - s) * left[j]
                + s * right[j]
                - ((1 - s) * (1 - t) * a + s * (1 - t) * b + s * t * c + (1 - s) * t * d)
            )
            norm = float(np.linalg.norm(blend))
            if norm <= DEFAULT_TOLS.degenerate:
                raise DegenerateVector("transfinite blend passed near the origin")
            verts[vid(i, j)] = blend / norm

    # boundary rows are the exact edge samples (the blend reduces to them,
    # but reassigning avoids accumulating roundoff)
    for i in range(n1):
        verts[vid(i, 0)] = bottom[i]
        verts[vid(i, n)] = top[i]
        bnd[vid(i, 0)] = bnd[vid(i, n)] = True
        bparam.setdefault(vid(i, 0), []).append((0, i / n))
        bparam.setdefault(vid(i, n), []).append((2, 1 - i / n))  # edge 2 runs c -> d
    for j in range(n1):
        verts[vid(0, j)] = left[j]
        verts[vid(n, j)] = right[j]
        bnd[vid(0, j)] = bnd[vid(n, j)] = True
        bparam.setdefault(vid(0, j), []).append((3, 1 - j / n))  # edge 3 runs d -> a
        bparam.setdefault(vid(n, j), []).append((1, j / n))

    tris = []
    for i in range(n):
        for j in range(n):
            tris.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            tris.append((vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)))
    return TriMesh(
        vertices=verts,
        triangles=np.array(tris, dtype=np.int32),
        boundary=bnd,
        boundary_param=bparam,
    )


def area(mesh: TriMesh) -> float:
    """Total chordal triangle area of the mesh."""
    return kernels.total_area(mesh.vertices, mesh.triangles)


def area_gradient(mesh: TriMesh) -> np.ndarray:
    """Per-vertex first variation of area, projected to the sphere tangent
    space at each vertex; boundary vertices get exactly zero."""
    _, grad = kernels.area_and_gradient(mesh.vertices, mesh.triangles)
    return _project_tangent(grad, mesh.vertices, mesh.boundary)


def _project_tangent(grad: np.ndarray, verts: np.ndarray, boundary: np.ndarray) -> np.ndarray:
    g = grad - np.einsum("ij,ij->i", grad, verts)[:, None] * verts
    g[boundary] = 0.0
    return g


def vertex_normals(verts: np.ndarray, tris: np.ndarray):
    """Per-vertex unit surface normals inside the sphere tangent space.

    Triangle normals come from the generalized cross product of the triangle
    centroid direction with the two edge vectors, so consistently wound
    triangles produce consistently oriented normals.  Returns (normals, ok)
    where ok flags vertices with a usable normal.
    """
    a = verts[tris[:, 0]]
    b = verts[tris[:, 1]]
    c = verts[tris[:, 2]]
    tri_n = cross4((a + b + c) / 3.0, b - a, c - a)
    normals = np.zeros_like(verts)
    nv = len(verts)
    for d in range(4):
        for corner in range(3):
            normals[:, d] += np.bincount(tris[:, corner], tri_n[:, d], minlength=nv)
    normals -= np.einsum("ij,ij->i", normals, verts)[:, None] * verts
    norms = np.linalg.norm(normals, axis=1)
    ok = norms > 1e-12
    normals[ok] /= norms[ok, None]
    normals[~ok] = 0.0
    return normals, ok


def _descent_direction(mesh_verts, tris, boundary, raw_grad):
    g = _project_tangent(raw_grad, mesh_verts, boundary)
    normals, ok = vertex_normals(mesh_verts, tris)
    d = np.einsum("ij,ij->i", g, normals)[:, None] * normals
    d[~ok] = g[~ok]  # no usable normal: fall back to the full gradient
    d[boundary] = 0.0
    return d


def _renormalized_step(verts, direction, alpha, boundary):
    out = verts - alpha * direction
    out /= np.linalg.norm(out, axis=1)[:, None]
    out[boundary] = verts[boundary]
    return out


def backtrack(area_fn, verts, direction, current_area, dir_sq, opts: SolverOptions,
              boundary, step_init: float | None = None):
    """Armijo backtracking along -direction; returns (alpha, new verts, new area).

    Raises LineSearchStalled when no sufficient-decrease step of at least
    opts.min_step exists.
    """
    alpha = opts.step_init if step_init is None else step_init
    while True:
        cand = _renormalized_step(verts, direction, alpha, boundary)
        cand_area = area_fn(cand)
        if cand_area <= current_area - opts.armijo * alpha * dir_sq:
            return alpha, cand, cand_area
        alpha *= opts.shrink
        if alpha < opts.min_step:
            raise LineSearchStalled(
                f"no sufficient-decrease step >= {opts.min_step:g} "
                f"(area {current_area:.12g})"
            )


def minimize(mesh: TriMesh, opts: SolverOptions | None = None) -> SolveResult:
    """Projected-descent minimization of the mesh area with fixed boundary.

    Accepted steps are monotone non-increasing in area (Armijo certificate);
    vertices are renormalized to the sphere after every trial step.  Stops
    when the sup-norm of the projected gradient drops below grad_tol, or at
    max_iters, and reports which.
    """
    opts = opts or SolverOptions()
    verts = mesh.vertices.copy()
    tris = np.ascontiguousarray(mesh.triangles, dtype=np.int32)
    bnd = mesh.boundary

    def area_of(v):
        return kernels.total_area(v, tris)

    current_area, raw = kernels.area_and_gradient(verts, tris)
    direction = _descent_direction(verts, tris, bnd, raw)
    history = [current_area]
    step_init = opts.step_init
    iterations = 0
    converged = False
    while iterations < opts.max_iters:
        grad_sup = float(np.sqrt((direction * direction).sum(axis=1)).max())
        if grad_sup < opts.grad_tol:
            converged = True
            break
        dir_sq = float((direction * direction).sum())
        alpha, verts, current_area = backtrack(
            area_of, verts, direction, current_area, dir_sq, opts, bnd, step_init
        )
        # warm-start the next line search from twice the accepted step
        step_init = min(2.0 * alpha, opts.step_cap)
        current_area, raw = kernels.area_and_gradient(verts, tris)
        direction = _descent_direction(verts, tris, bnd, raw)
        history.append(current_area)
        iterations += 1
        if iterations % opts.log_every == 0:
            logger.info("iter=%d area=%.17g gradsup=%.6g", iterations, current_area, grad_sup)
    else:
        grad_sup = float(np.sqrt((direction * direction).sum(axis=1)).max())

    out = TriMesh(
        vertices=verts,
        triangles=tris,
        boundary=bnd.copy(),
        boundary_param=mesh.boundary_param,
    )
    return SolveResult(
        mesh=out,
        converged=converged,
        iterations=iterations,
        area=current_area,
        grad_sup=grad_sup,
        area_history=np.array(history),
    )


def boundary_edge_set(mesh: TriMesh) -> set[tuple[int, int]]:
    """Undirected edges incident to exactly one triangle."""
    counts: Counter = Counter()
    for tri in mesh.triangles:
        i, j, k = int(tri[0]), int(tri[1]), int(tri[2])
        for e in ((i, j), (j, k), (k, i)):
            counts[(min(e), max(e))] += 1
    return {e for e, c in counts.items() if c == 1}


def refine(mesh: TriMesh) -> TriMesh:
    """One 1-to-4 subdivision with spherical edge midpoints.

    Midpoints of boundary edges stay on the exact geodesic edge (the
    spherical midpoint of two points of a great-circle arc lies on the arc)
    and inherit averaged arc parameters.
    """
    verts = list(mesh.vertices)
    bnd = list(mesh.boundary)
    bparam = {i: list(v) for i, v in (mesh.boundary_param or {}).items()}
    on_boundary = boundary_edge_set(mesh)
    midpoint: dict[tuple[int, int], int] = {}

    def edge_mid(i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key in midpoint:
            return midpoint[key]
        verts.append(geodesic(mesh.vertices[i], mesh.vertices[j], 0.5))
        new = len(verts) - 1
        is_b = key in on_boundary and bool(mesh.boundary[i] and mesh.boundary[j])
        bnd.append(is_b)
        if is_b and mesh.boundary_param is not None:
            shared = _shared_edge_params(bparam.get(i, []), bparam.get(j, []))
            if shared is not None:
                bparam[new] = [shared]
        midpoint[key] = new
        return new

    new_tris = []
    for tri in mesh.triangles:
        i, j, k = int(tri[0]), int(tri[1]), int(tri[2])
        a, b, c = edge_mid(i, j), edge_mid(j, k), edge_mid(k, i)
        new_tris += [(i, a, c), (a, j, b), (c, b, k), (a, b, c)]

    return TriMesh(
        vertices=np.array(verts),
        triangles=np.array(new_tris, dtype=np.int32),
        boundary=np.array(bnd, dtype=bool),
        boundary_param=bparam if mesh.boundary_param is not None else None,
    )


def _shared_edge_params(pi, pj):
    for ei, ti in pi:
        for ej, tj in pj:
            if ei == ej:
                return (ei, 0.5 * (ti + tj))
    return None


def containment_check(mesh: TriMesh, idx: TileIndex, tols: Tolerances = DEFAULT_TOLS) -> bool:
    """Whether every mesh vertex lies in the given tile (with the standard
    containment slack)."""
    return all(tile_contains(idx, v, tols.containment, tols) for v in mesh.vertices)


def mirror_defect(mesh: TriMesh, quad: Quad) -> float:
    """Diagnostic for the inherited boundary symmetry of the least-area disk.

    The halfturn about the circle through the two diagonal arc midpoints of
    the quad swaps opposite corners and should map the converged disk to
    itself; the defect is the largest nearest-vertex mismatch under that
    halfturn.  Recorded, never enforced.
    """
    from scipy.spatial import cKDTree

    mid_p = geodesic(quad.corner(0), quad.corner(2), 0.5)
    mid_q = geodesic(quad.corner(1), quad.corner(3), 0.5)
    turn = halfturn(GreatCircle(u=mid_p, v=mid_q))
    image = mesh.vertices @ turn.T
    dist, _ = cKDTree(mesh.vertices).query(image)
    return float(dist.max())
