"""Polytopes of affine maps and their vertex maps.

An affine map f(x) = A x + b from a full-dimensional polytope P in R^m
to a full-dimensional polytope Q in R^n lies in the mapping polytope
exactly when u . (A v + b) <= c for every vertex v of P and every facet
u . y <= c of Q.  Each such condition is linear in the entries of
(A, b), so the mapping polytope is itself a polytope in R^{nm+n}.

Flattening convention (fixed; documented for JSON round-trips): the
coordinates are b_1 .. b_n followed by A in row-major order, i.e.
A_{1,1} .. A_{1,m}, A_{2,1} .. A_{n,m}.

Vertexhood of an individual map is decided by the active-set rank
certificate: f is a vertex iff its tight constraints span R^{nm+n}.
This is the exact polyhedral form of the perturbation criterion (a
point of a polytope admits a line segment through it inside the
polytope iff its active constraints do not span).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import dd
from .linalg import Mat, Vec, add, dot, mat, rank, rref, vec, zero_vec
from .polytope import Polytope, VRep, from_points, standard

__all__ = [
    "AffineMap",
    "HomPolytope",
    "build_hom",
    "enumerate_vertex_maps",
    "is_vertex_map",
    "map_rank",
    "rank_histogram",
    "image_polytope",
    "eval_center",
    "restrict_to_subcrosspolytope",
    "cube_simplex_realization",
]


@dataclass(frozen=True)
class AffineMap:
    """f(x) = matrix . x + offset, mapping R^source_dim to R^target_dim."""

    matrix: Mat   # target_dim x source_dim
    offset: Vec   # target_dim

    def __post_init__(self):
        if any(len(row) != self.source_dim for row in self.matrix):
            raise ValueError("ragged matrix")
        if len(self.matrix) != len(self.offset):
            raise ValueError("matrix and offset of different target dimension")

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def target_dim(self) -> int:
        return len(self.offset)

    def evaluate(self, x) -> Vec:
        x = vec(x)
        return add(tuple(dot(row, x) for row in self.matrix), self.offset)


def map_rank(f: AffineMap) -> int:
    """Rank of the linear part = dimension of the image of a full-dim source."""
    return rank(f.matrix)


def eval_center(f: AffineMap) -> Vec:
    """Image of the origin, i.e. the translation part b."""
    return f.offset


def flatten_map(f: AffineMap) -> Vec:
    flat = list(f.offset)
    for row in f.matrix:
        flat.extend(row)
    return tuple(flat)


def unflatten_map(coords, m: int, n: int) -> AffineMap:
    coords = vec(coords)
    if len(coords) != n * m + n:
        raise ValueError("flattened map of wrong length")
    b = coords[:n]
    rows = tuple(coords[n + j * m: n + (j + 1) * m] for j in range(n))
    return AffineMap(rows, b)


@dataclass(frozen=True)
class HomPolytope:
    """Inequality system of all affine maps source -> target.

    One row per (source vertex, target facet) pair, in that nesting
    order; `pairs[k]` records the (vertex index, facet index) behind
    row k.  The feasible set lives in R^{nm+n} with the flattening
    convention above.
    """

    source: Polytope
    target: Polytope
    rows: tuple[tuple[Vec, Fraction], ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def source_dim(self) -> int:
        return self.source.ambient_dim

    @property
    def target_dim(self) -> int:
        return self.target.ambient_dim

    @property
    def ambient_dim(self) -> int:
        m, n = self.source_dim, self.target_dim
        return n * m + n

    def as_polytope(self) -> Polytope:
        from .polytope import from_inequalities

        return from_inequalities(self.rows, (), self.ambient_dim)


def _hom_row(v: Vec, u: Vec, c: Fraction, m: int, n: int) -> tuple[Vec, Fraction]:
    normal = list(u) + [Fraction(0)] * (n * m)
    for j in range(n):
        uj = u[j]
        if uj:
            base = n + j * m
            for i in range(m):
                normal[base + i] = uj * v[i]
    return tuple(normal), c


def build_hom(P: Polytope, Q: Polytope) -> HomPolytope:
    """Inequality system of Hom(P, Q) for full-dimensional P and Q.

    Feasible-set dimension nm+n is certified on the spot: the constant
    map onto the vertex centroid of Q satisfies every row strictly.
    """
    m, n = P.ambient_dim, Q.ambient_dim
    if P.dim != m:
        raise ValueError("source polytope must be full-dimensional")
    if Q.dim != n:
        raise ValueError("target polytope must be full-dimensional")
    facets = Q.hrep.inequalities
    rows = []
    pairs = []
    for vi, v in enumerate(P.vertices):
        for fi, (u, c) in enumerate(facets):
            rows.append(_hom_row(v, u, c, m, n))
            pairs.append((vi, fi))
    centroid = tuple(
        sum(v[j] for v in Q.vertices) / len(Q.vertices) for j in range(n))
    if not all(dot(u, centroid) < c for u, c in facets):
        raise ValueError("target centroid not strictly interior; bad facet system")
    return HomPolytope(P, Q, tuple(rows), tuple(pairs))


def structured_row_order(H: HomPolytope) -> list[int]:
    """Row insertion order for double description.

    The groups belonging to an affinely independent set of source
    vertices go first: the map evaluating an affine map at m+1 affinely
    independent points is a linear isomorphism, so after those groups
    the intermediate feasible set is a product of copies of the target
    and stays small.  Violation-count insertion heuristics were measured
    to blow up on the larger of these systems; this order does not.
    """
    chosen: set[int] = set()
    work: list[list] = []
    for vi, v in enumerate(H.source.vertices):
        cand = work + [[Fraction(x) for x in v] + [Fraction(1)]]
        red, pivots = rref(cand)
        if len(pivots) > len(work):
            chosen.add(vi)
            work = red
            if len(chosen) == H.source_dim + 1:
                break
    return sorted(range(len(H.rows)),
                  key=lambda k: (H.pairs[k][0] not in chosen, H.pairs[k]))


def enumerate_vertex_maps(H: HomPolytope) -> tuple[AffineMap, ...]:
    """All vertex maps, in canonical (lexicographic flattened) order."""
    m, n = H.source_dim, H.target_dim
    rows = [H.rows[k] for k in structured_row_order(H)]
    verts = dd.polytope_vertices(rows, H.ambient_dim, order="given")
    return tuple(unflatten_map(w, m, n) for w in verts)


def maps_into(f: AffineMap, P: Polytope, Q: Polytope) -> bool:
    return all(Q.contains(f.evaluate(v)) for v in P.vertices)


def is_vertex_map(f: AffineMap, P: Polytope, Q: Polytope,
                  hom: HomPolytope | None = None) -> bool:
    """Active-set rank certificate for vertexhood of f in Hom(P, Q)."""
    if hom is None:
        hom = build_hom(P, Q)
    if not maps_into(f, P, Q):
        raise ValueError("map does not send the source into the target")
    flat = flatten_map(f)
    active = [normal for normal, c in hom.rows if dot(normal, flat) == c]
    return rank(mat(active)) == hom.ambient_dim


def rank_histogram(maps) -> dict[int, int]:
    """Map rank k to the number of maps of that rank."""
    hist = Counter(map_rank(f) for f in maps)
    return dict(sorted(hist.items()))


def image_polytope(f: AffineMap, P: Polytope) -> Polytope:
    """conv(f(vert P)), carried with canonical representations."""
    return from_points([f.evaluate(v) for v in P.vertices], f.target_dim)


def restrict_to_subcrosspolytope(f: AffineMap, indices) -> AffineMap:
    """Precompose with the axis embedding of a sub-crosspolytope.

    `indices` are 0-based source axes; the embedding sends the k-th
    basis vector to the axis indices[k] and fixes the origin, so the
    restriction keeps the columns of A at those axes.
    """
    idx = sorted(set(indices))
    if not idx:
        raise ValueError("need a nonempty axis subset")
    if idx[0] < 0 or idx[-1] >= f.source_dim:
        raise ValueError("axis index out of range")
    rows = tuple(tuple(row[i] for i in idx) for row in f.matrix)
    return AffineMap(rows, f.offset)


def cube_simplex_realization(m: int, n: int) -> VRep:
    """Explicit vertex model of the cube-to-simplex mapping polytope.

    In R^{n+nm}, with e_i the simplex directions and e_{ik} the m extra
    directions attached to each of them, the points are 0, 2e_i,
    e_i +- e_{ik}, and (e_i + e_j) + (e_{ik} - e_{jk}) for i != j.
    There are (n+1)(mn+1) of them.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    d = n + n * m
    zero = zero_vec(d)

    def e(pos):
        return tuple(Fraction(1) if t == pos else Fraction(0) for t in range(d))

    def eik(i, k):
        return e(n + i * m + k)

    pts = {zero}
    for i in range(n):
        pts.add(add(e(i), e(i)))
        for k in range(m):
            pts.add(add(e(i), eik(i, k)))
            pts.add(tuple(a - b for a, b in zip(e(i), eik(i, k))))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(m):
                p = [Fraction(0)] * d
                p[i] += 1
                p[j] += 1
                p[n + i * m + k] += 1
                p[n + j * m + k] -= 1
                pts.add(tuple(p))
    assert len(pts) == (n + 1) * (m * n + 1)
    return VRep(tuple(sorted(pts)))
