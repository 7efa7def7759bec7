"""End-to-end construction: tiling -> Plateau disk -> orbit -> welded surface.

The solver runs a coarse-to-fine cascade: solve on the initial grid, then
alternate subdivision and re-solution.  Each level's converged area is kept
so downstream comparisons can quote a refinement error bar.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import assembly, energy, orbifold, plateau, symmetry, tiling
from .config import DEFAULT_TOLS, Tolerances
from .kernels import BACKEND
from .plateau import SolverOptions


@dataclass
class BuildResult:
    params: symmetry.LawsonParams
    group: symmetry.Group
    disk: plateau.TriMesh
    welded: assembly.ClosedMesh
    level_areas: list[float]
    level_iterations: list[int]
    level_converged: list[bool]
    grad_sup: float
    mirror_defect: float
    contained: bool
    genus: int
    euler: int
    energy_report: energy.EnergyReport
    chi_o: object = field(default=None)

    @property
    def disk_area(self) -> float:
        return self.level_areas[-1]

    @property
    def welded_area(self) -> float:
        return self.params.group_order * self.disk_area

    def welded_level_areas(self) -> list[float]:
        return [self.params.group_order * a for a in self.level_areas]


def solve_fundamental_disk(
    params: symmetry.LawsonParams,
    n: int = 16,
    refinements: int = 2,
    opts: SolverOptions | None = None,
):
    """Coons seed plus cascade of (solve, refine) passes on tile (0, 0).

    Returns (disk, level_areas, level_iterations, level_converged, grad_sup).
    """
    quad = tiling.quadrilateral(params, (0, 0))
    mesh = plateau.coons_initial_mesh(quad, n)
    areas: list[float] = []
    iters: list[int] = []
    converged: list[bool] = []
    result = None
    for level in range(refinements + 1):
        result = plateau.minimize(mesh, opts)
        areas.append(result.area)
        iters.append(result.iterations)
        converged.append(result.converged)
        mesh = result.mesh
        if level < refinements:
            mesh = plateau.refine(mesh)
    return mesh, areas, iters, converged, result.grad_sup


def build_surface(
    params: symmetry.LawsonParams,
    n: int = 16,
    refinements: int = 2,
    opts: SolverOptions | None = None,
    tols: Tolerances = DEFAULT_TOLS,
) -> BuildResult:
    group = symmetry.lawson_group(params, tols)
    disk, areas, iters, conv, grad_sup = solve_fundamental_disk(
        params, n=n, refinements=refinements, opts=opts
    )
    quad = tiling.quadrilateral(params, (0, 0))
    defect = plateau.mirror_defect(disk, quad)
    contained = plateau.containment_check(disk, tiling.TileIndex(params, 0, 0), tols)
    copies = assembly.orbit_mesh(group, disk)
    welded = assembly.weld(copies, tols.weld, tols)
    g = assembly.genus(welded)
    chi = assembly.euler_characteristic(welded)
    report = energy.willmore_energy(welded, params)
    return BuildResult(
        params=params,
        group=group,
        disk=disk,
        welded=welded,
        level_areas=areas,
        level_iterations=iters,
        level_converged=conv,
        grad_sup=grad_sup,
        mirror_defect=defect,
        contained=contained,
        genus=g,
        euler=chi,
        energy_report=report,
        chi_o=orbifold.lawson_chi_o(params),
    )


def build_report(result: BuildResult, config: dict) -> dict:
    """Deterministic JSON-ready report for a finished build."""
    params = result.params
    return {
        "schema": 1,
        "backend": BACKEND,
        "config": dict(sorted(config.items())),
        "params": {"m": params.m, "k": params.k},
        "group_order": result.group.order,
        "tile_count": params.tile_count,
        "genus": result.genus,
        "euler_characteristic": result.euler,
        "closed": result.welded.closed,
        "orientable": result.welded.orientable,
        "components": result.welded.component_count,
        "welded_vertices": int(len(result.welded.vertices)),
        "welded_triangles": int(len(result.welded.triangles)),
        "area": result.energy_report.area,
        "willmore": result.energy_report.willmore,
        "sup_mean_curvature": result.energy_report.sup_mean_curvature,
        "area_upper_bound": result.energy_report.upper_bound,
        "bound_satisfied": result.energy_report.bound_satisfied,
        "chi_o": str(result.chi_o),
        "disk": {
            "level_areas": result.level_areas,
            "level_iterations": result.level_iterations,
            "level_converged": result.level_converged,
            "grad_sup": result.grad_sup,
            "mirror_defect": result.mirror_defect,
            "contained_in_tile": result.contained,
        },
        "stereographic_pole": [0.0, 0.0, 0.0, -1.0],
    }
