"""Analytic test meshes with known curvature, used as oracles.

All builders return (vertices, triangles) with consistently wound triangles
and unit-norm vertices in 4-space.
"""

import numpy as np

from lawson3.plateau import TriMesh

# consistently wound icosahedron (outward normals)
_PHI = (1.0 + np.sqrt(5.0)) / 2.0
_ICO_VERTS = np.array(
    [
        (-1, _PHI, 0), (1, _PHI, 0), (-1, -_PHI, 0), (1, -_PHI, 0),
        (0, -1, _PHI), (0, 1, _PHI), (0, -1, -_PHI), (0, 1, -_PHI),
        (_PHI, 0, -1), (_PHI, 0, 1), (-_PHI, 0, -1), (-_PHI, 0, 1),
    ],
    dtype=float,
)
_ICO_FACES = np.array(
    [
        (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
        (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
        (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
        (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
    ],
    dtype=np.int32,
)


def icosphere_directions(subdivisions: int):
    """Unit directions in R^3 from a subdivided icosahedron."""
    verts = [v / np.linalg.norm(v) for v in _ICO_VERTS]
    faces = [tuple(f) for f in _ICO_FACES]
    for _ in range(subdivisions):
        cache = {}

        def mid(i, j):
            key = (min(i, j), max(i, j))
            if key not in cache:
                p = verts[i] + verts[j]
                verts.append(p / np.linalg.norm(p))
                cache[key] = len(verts) - 1
            return cache[key]

        new_faces = []
        for (a, b, c) in faces:
            ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
            new_faces += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        faces = new_faces
    return np.array(verts), np.array(faces, dtype=np.int32)


def geodesic_sphere_mesh(radius: float, subdivisions: int = 4) -> TriMesh:
    """Geodesic sphere of intrinsic radius `radius` about (0,0,0,1) in S^3.

    Intrinsic mean curvature magnitude is cot(radius); area 4 pi sin(radius)^2.
    """
    dirs, faces = icosphere_directions(subdivisions)
    verts = np.zeros((len(dirs), 4))
    verts[:, :3] = np.sin(radius) * dirs
    verts[:, 3] = np.cos(radius)
    return TriMesh(
        vertices=verts,
        triangles=faces,
        boundary=np.zeros(len(verts), dtype=bool),
    )


def clifford_torus_mesh(n: int) -> TriMesh:
    """Structured n x n product-grid mesh of the minimal torus in S^3."""
    i = np.arange(n)
    alpha = 2 * np.pi * i / n
    beta = 2 * np.pi * i / n
    A, B = np.meshgrid(alpha, beta, indexing="ij")
    verts = np.stack(
        [np.cos(A), np.sin(A), np.cos(B), np.sin(B)], axis=-1
    ).reshape(-1, 4) / np.sqrt(2.0)

    def vid(a, b):
        return (a % n) * n + (b % n)

    tris = []
    for a in range(n):
        for b in range(n):
            tris.append((vid(a, b), vid(a + 1, b), vid(a + 1, b + 1)))
            tris.append((vid(a, b), vid(a + 1, b + 1), vid(a, b + 1)))
    return TriMesh(
        vertices=verts,
        triangles=np.array(tris, dtype=np.int32),
        boundary=np.zeros(len(verts), dtype=bool),
    )


def great_sphere_mesh(subdivisions: int = 4) -> TriMesh:
    """A totally geodesic 2-sphere (radius pi/2 geodesic sphere): H = 0,
    area 4 pi."""
    return geodesic_sphere_mesh(np.pi / 2.0, subdivisions)
