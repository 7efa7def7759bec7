"""Central floating-point policy.

Every tolerance used by the geometry, group generation, tiling, solver and
welding code lives in one frozen record, so the numerical assumptions of the
whole pipeline can be audited (and tightened) in a single place.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: unit-norm defect allowed after any normalization
    unit: float = 1e-12
    #: orthogonality / determinant defect (Frobenius) for 4x4 rotations
    orth: float = 1e-10
    #: vectors shorter than this cannot be normalized; dot products closer
    #: than 1 - degenerate to +-1 count as equal/antipodal
    degenerate: float = 1e-9
    #: Frobenius distance below which two group elements are identified
    group_dedup: float = 1e-8
    #: angular slack at tile walls for membership tests
    wall: float = 1e-9
    #: minimum angular margin for a point to count as strictly interior
    interior_margin: float = 1e-6
    #: vertex identification distance when welding disk copies
    weld: float = 1e-6
    #: slack for the converged-disk tile containment check
    containment: float = 1e-7
    #: boundary vertices must sit on their quad edge this tightly
    boundary_fit: float = 1e-10


DEFAULT_TOLS = Tolerances()
