"""Tetrahedral tiling of the 3-sphere by spherical joins of vertex-ring arcs.

A tile is the join of one arc of the P ring with one arc of the Q ring.  In
the block-angular coordinates

    p = (r cos(alpha), r sin(alpha), sqrt(1-r^2) cos(beta), sqrt(1-r^2) sin(beta))

a tile is exactly an axis-aligned box in (alpha, beta), which makes
membership a two-comparison test; the triangular cap walls of the tiles never
need to be built explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS, Tolerances
from .errors import TileLocationAmbiguous
from .spheregeom import geodesic, normalize, sphere_angle, vertex_angle
from .symmetry import Group, LawsonParams, canonical_vertices

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class TileIndex:
    """Tile label (j, l); j counts P-ring arcs mod 2k+2, l counts Q-ring
    arcs mod 2m+2."""

    params: LawsonParams
    j: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % (2 * self.params.k + 2))
        object.__setattr__(self, "l", self.l % (2 * self.params.m + 2))


@dataclass(frozen=True)
class Quad:
    """Geodesic quadrilateral P_j Q_l P_{j+1} Q_{l+1} with orthogonal
    consecutive vertices (all edges have length pi/2)."""

    vertices: tuple  # 4 unit 4-vectors, in cyclic order

    def corner(self, i: int) -> np.ndarray:
        return self.vertices[i % 4]

    def edge(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Endpoints of edge i: corner i to corner i+1."""
        return self.vertices[i % 4], self.vertices[(i + 1) % 4]

    def edge_point(self, i: int, t: float) -> np.ndarray:
        a, b = self.edge(i)
        return geodesic(a, b, t)

    def edge_lengths(self) -> np.ndarray:
        return np.array(
            [sphere_angle(self.vertices[i], self.vertices[(i + 1) % 4]) for i in range(4)]
        )

    def corner_angles(self) -> np.ndarray:
        return np.array(
            [
                vertex_angle(
                    self.vertices[i],
                    self.vertices[(i - 1) % 4],
                    self.vertices[(i + 1) % 4],
                )
                for i in range(4)
            ]
        )


def quadrilateral(params: LawsonParams, idx: TileIndex | tuple[int, int]) -> Quad:
    """The boundary quadrilateral of tile (j, l)."""
    j, l = (idx.j, idx.l) if isinstance(idx, TileIndex) else idx
    P, Q = canonical_vertices(params)
    nP, nQ = len(P), len(Q)
    return Quad(
        vertices=(
            P[j % nP],
            Q[l % nQ],
            P[(j + 1) % nP],
            Q[(l + 1) % nQ],
        )
    )


def angular_coords(p, tols: Tolerances = DEFAULT_TOLS):
    """Decompose a unit point into (alpha, beta, r).

    alpha is the phase of the (x0, x1) block (None when that block vanishes),
    beta the phase of the (x2, x3) block (None when r is 1), and r the norm
    of the (x0, x1) block.
    """
    p = np.asarray(p, dtype=float)
    r = float(np.hypot(p[0], p[1]))
    s = float(np.hypot(p[2], p[3]))
    alpha = float(np.arctan2(p[1], p[0])) if r > tols.degenerate else None
    beta = float(np.arctan2(p[3], p[2])) if s > tols.degenerate else None
    return alpha, beta, r


def _in_arc(angle: float, lo: float, hi: float, tol: float) -> bool:
    """Membership of an angle in the circular interval [lo, hi] inflated by
    tol (negative tol shrinks the interval, i.e. tests strict interiority)."""
    w = (angle - lo) % TWO_PI
    if tol >= 0.0:
        return w <= (hi - lo) + tol or w >= TWO_PI - tol
    return -tol <= w <= (hi - lo) + tol


def tile_contains(idx: TileIndex, p, tol: float, tols: Tolerances = DEFAULT_TOLS) -> bool:
    """Whether a unit point lies in tile idx, with angular slack tol.

    An undefined angle (point on a core circle) imposes no constraint in
    that factor.
    """
    m, k = idx.params.m, idx.params.k
    alpha, beta, _ = angular_coords(p, tols)
    phi = np.pi / (m + 1)
    theta = np.pi / (k + 1)
    if alpha is not None and not _in_arc(alpha, idx.l * phi, (idx.l + 1) * phi, tol):
        return False
    if beta is not None and not _in_arc(beta, idx.j * theta, (idx.j + 1) * theta, tol):
        return False
    return True


def tile_center(idx: TileIndex) -> np.ndarray:
    """Canonical strictly-interior sample: the normalized sum of the two
    spherical arc midpoints."""
    quad = quadrilateral(idx.params, idx)
    mid_p = geodesic(quad.corner(0), quad.corner(2), 0.5)
    mid_q = geodesic(quad.corner(1), quad.corner(3), 0.5)
    return normalize(mid_p + mid_q)


def all_tiles(params: LawsonParams) -> list[TileIndex]:
    return [
        TileIndex(params, j, l)
        for j in range(2 * params.k + 2)
        for l in range(2 * params.m + 2)
    ]


def locate_tile(params: LawsonParams, p, tols: Tolerances = DEFAULT_TOLS) -> TileIndex:
    """The unique tile containing p at wall tolerance; raises
    TileLocationAmbiguous when p sits on a wall (0 or >= 2 hits)."""
    hits = [t for t in all_tiles(params) if tile_contains(t, p, tols.wall, tols)]
    if len(hits) != 1:
        raise TileLocationAmbiguous(
            f"point matched {len(hits)} tiles at wall tolerance {tols.wall:g}"
        )
    return hits[0]


def tile_orbits(
    group: Group, params: LawsonParams, tols: Tolerances = DEFAULT_TOLS
) -> list[list[TileIndex]]:
    """Partition of all 4(m+1)(k+1) tiles into orbits of the group action.

    Each group element moves a tile's center into exactly one tile, which
    identifies the image tile; ambiguity signals a tolerance failure.
    """
    tiles = all_tiles(params)
    pos = {(t.j, t.l): i for i, t in enumerate(tiles)}
    centers = np.array([tile_center(t) for t in tiles])

    parent = list(range(len(tiles)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in group.elements:
        images = centers @ g.T
        for i, q in enumerate(images):
            target = locate_tile(params, q, tols)
            ra, rb = find(i), find(pos[(target.j, target.l)])
            if ra != rb:
                parent[ra] = rb

    buckets: dict[int, list[TileIndex]] = {}
    for i, t in enumerate(tiles):
        buckets.setdefault(find(i), []).append(t)
    return sorted(buckets.values(), key=lambda orbit: (orbit[0].j, orbit[0].l))
