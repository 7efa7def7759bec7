"""Assembling the closed surface from the orbit of the fundamental disk.

Each group element is applied to the converged disk; coincident boundary
vertices of the copies are then identified by union-find over near-pairs,
with merged clusters snapped to their normalized centroid.  The welded
complex is checked for closedness, given a consistent orientation when one
exists, and its Euler characteristic and genus are computed exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .config import DEFAULT_TOLS, Tolerances
from .errors import Disconnected, NotClosed, NotOrientable, OddEuler, WeldAmbiguous
from .plateau import TriMesh
from .symmetry import Group


@dataclass
class ClosedMesh(TriMesh):
    closed: bool = False
    orientable: bool = False
    component_count: int = 0


def orbit_mesh(group: Group, disk: TriMesh) -> list[TriMesh]:
    """One transformed copy of the disk per group element, in element order."""
    copies = []
    for g in group.elements:
        copies.append(
            TriMesh(
                vertices=disk.vertices @ g.T,
                triangles=disk.triangles.copy(),
                boundary=disk.boundary.copy(),
            )
        )
    return copies


def _undirected_edge_counts(tris: np.ndarray) -> Counter:
    counts: Counter = Counter()
    for tri in tris:
        i, j, k = int(tri[0]), int(tri[1]), int(tri[2])
        for e in ((i, j), (j, k), (k, i)):
            counts[(min(e), max(e))] += 1
    return counts


def weld(copies: list[TriMesh], weld_tol: float, tols: Tolerances = DEFAULT_TOLS) -> ClosedMesh:
    """Identify coincident boundary vertices across disk copies.

    Only boundary-flagged vertices are merge candidates, so interior vertices
    are never touched.  Merged clusters snap to the normalized centroid of
    their members, which keeps the unit-norm invariant and symmetrizes the
    floating-point noise.  Raises WeldAmbiguous if a vertex sees two merge
    candidates that are not themselves coincident, and NotClosed if the result
    has any edge with other than two incident triangles.
    """
    all_v = np.vstack([c.vertices for c in copies])
    all_b = np.concatenate([c.boundary for c in copies])
    offsets = np.cumsum([0] + [len(c.vertices) for c in copies[:-1]])
    all_t = np.vstack([c.triangles + off for c, off in zip(copies, offsets)]).astype(np.int64)

    n = len(all_v)
    parent = np.arange(n)

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return int(a)

    bidx = np.flatnonzero(all_b)
    if weld_tol > 0 and len(bidx):
        tree = cKDTree(all_v[bidx])
        neighbor_lists = tree.query_ball_point(all_v[bidx], weld_tol)
        for local_i, neigh in enumerate(neighbor_lists):
            others = [j for j in neigh if j != local_i]
            for a in range(len(others)):
                for b in range(a + 1, len(others)):
                    gap = np.linalg.norm(all_v[bidx[others[a]]] - all_v[bidx[others[b]]])
                    if gap > weld_tol / 10.0:
                        raise WeldAmbiguous(
                            f"vertex has merge candidates {gap:.3e} apart "
                            f"(weld_tol = {weld_tol:g})"
                        )
            for j in others:
                ra, rb = find(bidx[local_i]), find(bidx[j])
                if ra != rb:
                    parent[ra] = rb

    roots = np.array([find(i) for i in range(n)])
    uniq, new_index = np.unique(roots, return_inverse=True)
    merged = np.zeros((len(uniq), 4))
    counts = np.zeros(len(uniq))
    np.add.at(merged, new_index, all_v)
    np.add.at(counts, new_index, 1.0)
    merged /= counts[:, None]
    merged /= np.linalg.norm(merged, axis=1)[:, None]

    new_tris = new_index[all_t].astype(np.int32)
    new_bnd = np.zeros(len(uniq), dtype=bool)
    np.logical_or.at(new_bnd, new_index, all_b)

    edge_counts = _undirected_edge_counts(new_tris)
    closed = all(c == 2 for c in edge_counts.values())
    oriented_tris, orientable, components = _orient(new_tris, edge_counts)
    mesh = ClosedMesh(
        vertices=merged,
        triangles=oriented_tris if orientable else new_tris,
        boundary=new_bnd,
        closed=closed,
        orientable=orientable,
        component_count=components,
    )
    if not closed:
        bad = sum(1 for c in edge_counts.values() if c != 2)
        raise NotClosed(f"welded mesh has {bad} non-interior edges")
    return mesh


def _orient(tris: np.ndarray, edge_counts: Counter):
    """BFS orientation propagation with parity-conflict detection.

    Returns (possibly flipped triangle array, orientable flag, number of
    edge-connected components).
    """
    m = len(tris)
    incident: dict[tuple[int, int], list[int]] = {}
    for t in range(m):
        i, j, k = (int(x) for x in tris[t])
        for e in ((i, j), (j, k), (k, i)):
            incident.setdefault((min(e), max(e)), []).append(t)

    directed: list[dict[tuple[int, int], bool]] = []
    for t in range(m):
        i, j, k = (int(x) for x in tris[t])
        directed.append({(min(a, b), max(a, b)): a < b for (a, b) in ((i, j), (j, k), (k, i))})

    flip = np.zeros(m, dtype=bool)
    seen = np.zeros(m, dtype=bool)
    orientable = True
    components = 0
    for seed in range(m):
        if seen[seed]:
            continue
        components += 1
        seen[seed] = True
        queue = [seed]
        while queue:
            t = queue.pop()
            for e, forward in directed[t].items():
                for other in incident[e]:
                    if other == t:
                        continue
                    # consistent orientation traverses a shared edge in
                    # opposite directions, accounting for pending flips
                    want_flip = (directed[other][e] == forward) != bool(flip[t])
                    if not seen[other]:
                        seen[other] = True
                        flip[other] = want_flip
                        queue.append(other)
                    elif flip[other] != want_flip:
                        orientable = False
    out = tris.copy()
    if orientable and flip.any():
        out[flip] = out[flip][:, [0, 2, 1]]
    return out, orientable, components


def euler_characteristic(mesh: TriMesh) -> int:
    """V - E + F of the complex, exact integer arithmetic."""
    edges = set()
    for tri in mesh.triangles:
        i, j, k = int(tri[0]), int(tri[1]), int(tri[2])
        for e in ((i, j), (j, k), (k, i)):
            edges.add((min(e), max(e)))
    return len(mesh.vertices) - len(edges) + len(mesh.triangles)


def genus(mesh: ClosedMesh) -> int:
    """Genus (2 - chi)/2 of a closed, orientable, connected mesh."""
    if not mesh.closed:
        raise NotClosed("genus needs a closed mesh")
    if not mesh.orientable:
        raise NotOrientable("genus needs an orientable mesh")
    if mesh.component_count != 1:
        raise Disconnected(f"mesh has {mesh.component_count} components")
    chi = euler_characteristic(mesh)
    if chi % 2 != 0:
        raise OddEuler(f"Euler characteristic {chi} is odd")
    return (2 - chi) // 2
