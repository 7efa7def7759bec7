"""Exact orbifold Euler numbers and the exclusion certificates.

Everything here is integer or rational arithmetic (fractions.Fraction), since
the arguments are integrality obstructions: a symmetric embedded surface of
the right genus must contain every halfturn fixed circle, because otherwise
the orbifold Euler number of its quotient would have to be an integer (when
the surface avoids the quadrilateral's vertices and edges) or a quarter
integer plus 1/(m+1) (when it contains some circles but, for k = 1, not the
ones crossing over), and (1 - mk)/((m+1)(k+1)) is neither.

The quotient of the surface by its halfturn group is a disk with four mirror
edges of weight 1/2 and four corners of weights 1/(2(m+1)), 1/(2(k+1)),
1/(2(m+1)), 1/(2(k+1)); the same value also arises as chi / group order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParams
from .spheregeom import GreatCircle
from .symmetry import LawsonParams, canonical_vertices, gamma, generator_circles

#: Exact rational type used throughout (always reduced, positive denominator).
Rational = Fraction

ORTHO_TOL = 1e-9


@dataclass(frozen=True)
class WeightedComplex:
    """Cell counts with orbifold weights.

    faces count with unit weight; edges and vertices are (count, weight)
    pairs with weights given exactly as Fractions.
    """

    faces: int
    edges: tuple[tuple[int, Fraction], ...] = ()
    vertices: tuple[tuple[int, Fraction], ...] = ()


def chi_o_local(complex_: WeightedComplex) -> Fraction:
    """Weighted alternating sum over faces, edges and vertices."""
    total = Fraction(complex_.faces)
    for count, weight in complex_.edges:
        total -= count * Fraction(weight)
    for count, weight in complex_.vertices:
        total += count * Fraction(weight)
    return total


def chi_o_global(chi: int, order: int) -> Fraction:
    """chi / order: multiplicativity under orbifold coverings."""
    if order < 1:
        raise InvalidParams(f"group order must be >= 1, got {order}")
    return Fraction(chi, order)


def lawson_quotient_complex(params: LawsonParams) -> WeightedComplex:
    """The mirrored-disk quotient of the surface by its halfturn group."""
    m, k = params.m, params.k
    return WeightedComplex(
        faces=1,
        edges=((4, Fraction(1, 2)),),
        vertices=(
            (2, Fraction(1, 2 * (m + 1))),
            (2, Fraction(1, 2 * (k + 1))),
        ),
    )


def lawson_chi_o(params: LawsonParams) -> Fraction:
    """(1 - mk)/((m+1)(k+1)), cross-checked against both computations."""
    m, k = params.m, params.k
    value = Fraction(1 - m * k, (m + 1) * (k + 1))
    local = chi_o_local(lawson_quotient_complex(params))
    glob = chi_o_global(2 - 2 * m * k, params.group_order)
    assert value == local == glob, (value, local, glob)
    return value


@dataclass(frozen=True)
class Verdict:
    excluded: bool
    witness: dict = field(default_factory=dict)

    @property
    def admissible(self) -> bool:
        return not self.excluded


def exclude_interior_only(params: LawsonParams) -> Verdict:
    """Integer obstruction for a surface meeting the quadrilateral only at
    interior points of its edges.

    Such crossings are orthogonal, so they come in an even number per edge
    and every quotient cell has integer or half-integer weight summing to an
    integer z; the covering identity then demands order * z = 2 - 2*genus,
    impossible because 0 < 2*genus - 2 < order.
    """
    m, k = params.m, params.k
    if m * k < 2:
        raise InvalidParams("the interior-only exclusion needs genus m*k >= 2")
    order = params.group_order
    target = 2 - 2 * m * k
    exact = Fraction(target, order)
    is_integer = exact.denominator == 1
    lo = exact.numerator // exact.denominator
    witness = {
        "equation": f"{order}*z = {target}",
        "exact_solution": str(exact),
        "nearest_integers": [lo, lo + 1],
        "gap_to_nearest": str(min(exact - lo, lo + 1 - exact)),
        "strict_inequalities": f"{order} > {2 * m * k - 2} > 0",
        "inequalities_hold": order > 2 * m * k - 2 > 0,
    }
    return Verdict(excluded=not is_integer, witness=witness)


def exclude_partial_circles(params: LawsonParams) -> Verdict:
    """Quarter-integer obstruction for k = 1 when one circle row is present
    and the crossing row is not.

    The quotient complex then has orbifold Euler number a/2 + 1/4 + 1/(m+1)
    for some integer a, and the covering identity reduces to
    (2a + 3)(m + 1) = 0, which no integer a satisfies.
    """
    m, k = params.m, params.k
    if k != 1 or m < 2:
        raise InvalidParams("the partial-circles exclusion applies to m > k = 1")
    order = params.group_order  # 4(m+1)
    target = 2 - 2 * m
    # order * (a/2 + 1/4 + 1/(m+1)) = target, solved exactly for a
    solved_a = (Fraction(target, order) - Fraction(1, 4) - Fraction(1, m + 1)) * 2
    is_integer = solved_a.denominator == 1
    witness = {
        "chi_o_form": f"a/2 + 1/4 + 1/{m + 1}",
        "equation": f"{order}*(a/2 + 1/4 + 1/{m + 1}) = {target}",
        "reduces_to": f"(2a + 3)*{m + 1} = 0",
        "solved_a": str(solved_a),
    }
    assert solved_a == Fraction(-3, 2)
    return Verdict(excluded=not is_integer, witness=witness)


@dataclass(frozen=True)
class IntersectionPattern:
    """Combinatorial record of how a symmetric surface meets the fixed-circle
    skeleton: all circles, none (interior-only crossings), some circles, or a
    quadrilateral vertex."""

    kind: str  # "contains_all" | "interior_only" | "partial" | "vertex"
    circles: frozenset = frozenset()  # (j, l) pairs, for kind == "partial"
    vertex: tuple | None = None  # ("P"|"Q", index), for kind == "vertex"

    @classmethod
    def contains_all(cls):
        return cls(kind="contains_all")

    @classmethod
    def interior_only(cls):
        return cls(kind="interior_only")

    @classmethod
    def partial(cls, circles):
        circles = frozenset((int(j), int(l)) for j, l in circles)
        if not circles:
            raise InvalidParams("a partial pattern needs at least one circle")
        return cls(kind="partial", circles=circles)

    @classmethod
    def vertex_touching(cls, ring: str, index: int):
        if ring not in ("P", "Q"):
            raise InvalidParams("vertex ring must be 'P' or 'Q'")
        return cls(kind="vertex", vertex=(ring, int(index)))


def incident_circles(params: LawsonParams, ring: str, index: int) -> list[tuple[int, int]]:
    """Generator circles through a ring vertex: a P vertex lies on every
    circle of its j-row, a Q vertex on every circle of its l-column."""
    m, k = params.m, params.k
    if ring == "P":
        j = index % (k + 1)
        return [(j, l) for l in range(m + 1)]
    l = index % (m + 1)
    return [(j, l) for j in range(k + 1)]


def vertex_touch_forces_edge(
    params: LawsonParams, pattern: IntersectionPattern
) -> IntersectionPattern:
    """Normalize a vertex-touching pattern into one containing an incident
    circle.

    At a quadrilateral vertex the tangent planes of the surface and of the
    constructed minimal surface intersect nontrivially, so the surface cannot
    be orthogonal to every circle through that vertex; symmetry then forces
    it to contain one.  Other patterns are fixed points.
    """
    if pattern.kind != "vertex":
        return pattern
    ring, index = pattern.vertex
    return IntersectionPattern.partial([incident_circles(params, ring, index)[0]])


def circles_meet_nonorthogonally(
    params: LawsonParams, a: tuple[int, int], b: tuple[int, int]
) -> bool:
    """Whether two distinct generator circles intersect at a non-right angle.

    Circles sharing a P vertex (same j) or a Q vertex (same l) intersect
    there; the meeting angle is measured between actual circle tangents.
    Circles sharing neither ring vertex are disjoint.
    """
    (ja, la), (jb, lb) = a, b
    if a == b:
        return False
    if ja == jb:
        point = canonical_vertices(params)[0][ja]
    elif la == lb:
        point = canonical_vertices(params)[1][la]
    else:
        return False
    ca: GreatCircle = gamma(params, *a)
    cb: GreatCircle = gamma(params, *b)
    dot = abs(float(ca.tangent_at(point) @ cb.tangent_at(point)))
    return dot > ORTHO_TOL


@dataclass(frozen=True)
class PropagationResult:
    forces_all: bool
    reason: str
    reached: tuple = ()
    contradiction: str | None = None


def propagate_circles(
    params: LawsonParams, pattern: IntersectionPattern
) -> PropagationResult:
    """Close a partial pattern under the tangency-propagation rule.

    A surface symmetric about a circle it intersects non-orthogonally must
    contain it; spreading from the given circles through all non-orthogonal
    intersections either reaches every circle directly, or (for k = 1, where
    the two circle rows only ever meet at right angles) leaves a row whose
    absence is excluded by the quarter-integer obstruction.
    """
    if params.genus < 2:
        raise InvalidParams("propagation analysis needs genus m*k >= 2")
    if pattern.kind != "partial" or not pattern.circles:
        raise InvalidParams("propagation needs a pattern containing >= 1 circle")
    every = generator_circles(params)
    reached = set(pattern.circles)
    frontier = list(reached)
    while frontier:
        cur = frontier.pop()
        for other in every:
            if other not in reached and circles_meet_nonorthogonally(params, cur, other):
                reached.add(other)
                frontier.append(other)
    if reached == set(every):
        return PropagationResult(
            forces_all=True,
            reason="non-orthogonal intersections propagate containment to all circles",
            reached=tuple(sorted(reached)),
        )
    if params.k == 1:
        alt = exclude_partial_circles(params)
        if alt.excluded:
            return PropagationResult(
                forces_all=True,
                reason=(
                    "rows only meet at right angles for k = 1; a pattern missing "
                    "the crossing row is excluded by the quarter-integer "
                    "obstruction, so containment still spreads to all circles"
                ),
                reached=tuple(sorted(reached)),
            )
    return PropagationResult(
        forces_all=False,
        reason="propagation stalled",
        reached=tuple(sorted(reached)),
        contradiction=f"unreached circles: {sorted(set(every) - reached)}",
    )


@dataclass(frozen=True)
class ClassificationReport:
    params: LawsonParams
    chi_o: Fraction
    entries: dict
    conclusion: str


def classify(params: LawsonParams) -> ClassificationReport:
    """Decide every intersection pattern for a symmetric surface of genus
    mk >= 2: all non-containing patterns are excluded, so the surface must
    contain the whole fixed-circle skeleton."""
    if params.genus < 2:
        raise InvalidParams("classification needs genus m*k >= 2")

    interior = exclude_interior_only(params)
    entries: dict = {
        "interior_only": {
            "verdict": "excluded",
            "rule": "integer-obstruction",
            **interior.witness,
        }
    }

    normalized = vertex_touch_forces_edge(params, IntersectionPattern.vertex_touching("P", 0))
    entries["vertex_touching"] = {
        "verdict": "normalized",
        "rule": "vertex-forces-incident-edge",
        "example": {
            "vertex": ["P", 0],
            "becomes_partial_with": sorted(normalized.circles),
        },
    }

    seeds = [IntersectionPattern.partial([(0, 0)]), normalized]
    prop = None
    for seed in seeds:
        prop = propagate_circles(params, seed)
        if not prop.forces_all:
            break
    entries["partial_circles"] = {
        "verdict": "forces_all" if prop.forces_all else "contradiction",
        "rule": "tangency-propagation"
        + ("" if params.k > 1 else " + quarter-integer-obstruction"),
        "reason": prop.reason,
    }
    if params.k == 1:
        entries["partial_circles"]["quarter_integer_witness"] = exclude_partial_circles(
            params
        ).witness

    all_good = interior.excluded and prop is not None and prop.forces_all
    return ClassificationReport(
        params=params,
        chi_o=lawson_chi_o(params),
        entries=entries,
        conclusion="contains_all_circles" if all_good else "undecided",
    )
