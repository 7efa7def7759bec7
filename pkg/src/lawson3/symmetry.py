"""Halfturn symmetry groups of the Lawson surfaces.

Builds the canonical vertex rings on the two orthogonal core circles, the
great circles joining them, the halfturn generators about those circles, and
the finite rotation group they generate (breadth-first closure with floating
point dedup).

The surface also admits larger symmetry groups, of orders 4(m+1)(k+1) in
SO(4) and 8(m+1)(k+1) in O(4) (with an extra order-4 element when m = k);
those include reflections and are intentionally not constructed here, since
all checks in this package need only the halfturn subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .config import DEFAULT_TOLS, Tolerances
from .errors import InvalidParams, NotOrthogonal, OrderOverflow
from .spheregeom import GreatCircle, halfturn, is_rotation


@dataclass(frozen=True)
class LawsonParams:
    """Parameter pair (m, k) with m >= k >= 1; the surface has genus m*k.

    The constructor swaps the arguments into canonical order.
    """

    m: int
    k: int

    def __post_init__(self):
        m, k = int(self.m), int(self.k)
        if m < k:
            m, k = k, m
        if k < 1:
            raise InvalidParams(f"need m >= k >= 1, got ({self.m}, {self.k})")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)

    @property
    def genus(self) -> int:
        return self.m * self.k

    @property
    def group_order(self) -> int:
        return 2 * (self.m + 1) * (self.k + 1)

    @property
    def tile_count(self) -> int:
        return 4 * (self.m + 1) * (self.k + 1)


def canonical_vertices(params: LawsonParams):
    """Vertex rings (P, Q) on the two orthogonal core great circles.

    P has 2k+2 points in the (x2, x3) coordinate plane at angular spacing
    pi/(k+1); Q has 2m+2 points in the (x0, x1) plane at spacing pi/(m+1).
    Returned as arrays of shape (2k+2, 4) and (2m+2, 4).
    """
    m, k = params.m, params.k
    jj = np.arange(2 * k + 2) * np.pi / (k + 1)
    ll = np.arange(2 * m + 2) * np.pi / (m + 1)
    P = np.zeros((2 * k + 2, 4))
    P[:, 2] = np.cos(jj)
    P[:, 3] = np.sin(jj)
    Q = np.zeros((2 * m + 2, 4))
    Q[:, 0] = np.cos(ll)
    Q[:, 1] = np.sin(ll)
    return P, Q


def gamma(params: LawsonParams, j: int, l: int) -> GreatCircle:
    """Great circle through P_j and Q_l (an orthogonal pair by construction)."""
    P, Q = canonical_vertices(params)
    return GreatCircle(u=P[j % len(P)], v=Q[l % len(Q)])


def generator_circles(params: LawsonParams) -> list[tuple[int, int]]:
    """Index pairs (j, l) of the generator circles, 0 <= j <= k, 0 <= l <= m.

    These index all distinct circles: the circle through P_j and Q_l only
    depends on j mod k+1 and l mod m+1.
    """
    return [(j, l) for j in range(params.k + 1) for l in range(params.m + 1)]


def generators(params: LawsonParams, tols: Tolerances = DEFAULT_TOLS) -> np.ndarray:
    """The (k+1)(m+1) halfturn generators, as an (n, 4, 4) array."""
    return np.array(
        [halfturn(gamma(params, j, l), tols) for (j, l) in generator_circles(params)]
    )


@dataclass
class Group:
    """A finite subgroup of SO(4), closed under composition up to dedup_tol.

    `words[i]` is a shortest product of generator indices reproducing
    `elements[i]`; the identity has the empty word.
    """

    elements: np.ndarray  # (n, 4, 4)
    words: list[tuple[int, ...]]
    generators: np.ndarray  # (g, 4, 4)
    dedup_tol: float = field(default=DEFAULT_TOLS.group_dedup)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, matrix: np.ndarray) -> int:
        """Index of the element matching `matrix` within dedup_tol, or -1."""
        d = np.linalg.norm(self.elements - matrix[None, :, :], axis=(1, 2))
        i = int(np.argmin(d))
        return i if d[i] < self.dedup_tol else -1

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "dedup_tol": self.dedup_tol,
            "generators": [g.reshape(16).tolist() for g in self.generators],
            "elements": [
                {"matrix": e.reshape(16).tolist(), "word": list(w)}
                for e, w in zip(self.elements, self.words)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Group":
        return cls(
            elements=np.array([e["matrix"] for e in data["elements"]]).reshape(-1, 4, 4),
            words=[tuple(e["word"]) for e in data["elements"]],
            generators=np.array(data["generators"]).reshape(-1, 4, 4),
            dedup_tol=float(data["dedup_tol"]),
        )


def generate_group(
    gens,
    dedup_tol: float = DEFAULT_TOLS.group_dedup,
    max_order: int = 2048,
    tols: Tolerances = DEFAULT_TOLS,
) -> Group:
    """Breadth-first closure of a set of rotations under composition.

    Elements are deduplicated by Frobenius distance; at desk scale the true
    elements are separated by distances >= 0.1, so dedup_tol = 1e-8 is safe
    and a closure that keeps growing signals a tolerance failure, trapped by
    OrderOverflow once max_order is exceeded.
    """
    gens = np.asarray(gens, dtype=float)
    if gens.ndim != 3 or gens.shape[1:] != (4, 4) or len(gens) == 0:
        raise NotOrthogonal("need a nonempty list of 4x4 generators")
    for g in gens:
        if not is_rotation(g, tols):
            raise NotOrthogonal("generator is not special orthogonal")

    elements = [np.eye(4)]
    words: list[tuple[int, ...]] = [()]
    flat = np.empty((max_order + 1, 16))  # flattened elements, first n rows live
    flat[0] = np.eye(4).reshape(16)
    n = 1
    frontier = [0]
    while frontier:
        next_frontier = []
        for idx in frontier:
            base = elements[idx]
            for gi, g in enumerate(gens):
                cand = base @ g
                d = np.linalg.norm(flat[:n] - cand.reshape(1, 16), axis=1)
                if d.min() < dedup_tol:
                    continue
                if n >= max_order:
                    raise OrderOverflow(
                        f"closure exceeded max_order = {max_order}; "
                        "check dedup_tol and the generators"
                    )
                elements.append(cand)
                words.append(words[idx] + (gi,))
                flat[n] = cand.reshape(16)
                n += 1
                next_frontier.append(n - 1)
        frontier = next_frontier
    return Group(
        elements=np.array(elements),
        words=words,
        generators=gens,
        dedup_tol=dedup_tol,
    )


def lawson_group(params: LawsonParams, tols: Tolerances = DEFAULT_TOLS) -> Group:
    """The halfturn group for (m, k), of order 2(m+1)(k+1)."""
    return generate_group(
        generators(params, tols),
        dedup_tol=tols.group_dedup,
        max_order=16 * (params.m + 1) * (params.k + 1),
        tols=tols,
    )


def is_invariant(mesh, group: Group, tol: float) -> bool:
    """True iff every group element maps the mesh vertex set to itself.

    Matching is nearest-neighbor within `tol`, and the induced index map must
    be a permutation.  `mesh` is anything with a `.vertices` (N, 4) array.
    """
    verts = np.asarray(mesh.vertices, dtype=float)
    tree = cKDTree(verts)
    for g in group.elements:
        image = verts @ g.T
        dist, idx = tree.query(image)
        if float(dist.max()) > tol:
            return False
        if len(np.unique(idx)) != len(verts):
            return False
    return True
