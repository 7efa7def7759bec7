"""Mesh file formats.

Two exports are provided:

* OBJ: vertices stereographically projected to 3-space from the pole
  (0, 0, 0, -1), via (x, y, z) = (x0, x1, x2) / (1 + x3); faces 1-indexed.
  Vertices too close to the pole are refused.
* raw: line-oriented text keeping full 4D coordinates, `v4 x0 x1 x2 x3`
  and `f i j k` (0-indexed), with shortest round-trip decimal formatting so
  a load reproduces the vertex array bit for bit.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import DegenerateVector
from .plateau import TriMesh

STEREO_POLE = np.array([0.0, 0.0, 0.0, -1.0])
POLE_GUARD = 1e-6


def stereographic(verts: np.ndarray) -> np.ndarray:
    """Project (N, 4) sphere points to 3-space from STEREO_POLE."""
    verts = np.asarray(verts, dtype=float)
    dist = np.linalg.norm(verts - STEREO_POLE, axis=1)
    if float(dist.min()) < POLE_GUARD:
        raise DegenerateVector(
            f"vertex within {POLE_GUARD:g} of the projection pole {STEREO_POLE.tolist()}"
        )
    return verts[:, :3] / (1.0 + verts[:, 3])[:, None]


def export_obj(mesh: TriMesh, path) -> None:
    pts = stereographic(mesh.vertices)
    lines = [
        "# stereographic projection from pole (0, 0, 0, -1); "
        "(x, y, z) = (x0, x1, x2) / (1 + x3)"
    ]
    for p in pts:
        lines.append(f"v {float(p[0])!r} {float(p[1])!r} {float(p[2])!r}")
    for t in mesh.triangles:
        lines.append(f"f {int(t[0]) + 1} {int(t[1]) + 1} {int(t[2]) + 1}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def export_raw(mesh: TriMesh, path) -> None:
    lines = []
    for v in mesh.vertices:
        lines.append(
            f"v4 {float(v[0])!r} {float(v[1])!r} {float(v[2])!r} {float(v[3])!r}"
        )
    for t in mesh.triangles:
        lines.append(f"f {int(t[0])} {int(t[1])} {int(t[2])}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_raw(path):
    """Read a raw export back as (vertices, triangles)."""
    verts = []
    tris = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v4":
            verts.append([float(x) for x in parts[1:5]])
        elif parts[0] == "f":
            tris.append([int(x) for x in parts[1:4]])
    return np.array(verts, dtype=float), np.array(tris, dtype=np.int32)
