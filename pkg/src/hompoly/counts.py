"""Closed-form vertex counts, bounds, and brute-force tuple enumerations.

The counting functions evaluate the exact vertex-count formulas for the
mapping polytopes between cubes, simplices, and crosspolytopes, with a
per-rank term breakdown; enumeration cross-checks are optional and go
through the hom construction.

`simplex_tuples(n)` is the combinatorial core: ordered (n+1)-tuples of
cube vertices whose convex hull is a full-dimensional simplex with the
origin strictly inside.  `beta(n)` counts their orbits under the signed
permutation group; the action is free, so the orbit count also equals
the tuple count divided by 2^n n! (both are computed and compared).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

from .errors import SizeGuardError
from .groups import enumerate_group, orbit_count

TUPLE_GUARD = 5


@lru_cache(maxsize=None)
def stirling2(m: int, n: int) -> int:
    """Number of partitions of m labeled objects into n nonempty blocks."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    if m == n:
        return 1
    if n == 0 or n > m:
        return 0
    return n * stirling2(m - 1, n) + stirling2(m - 1, n - 1)


def surjections(m: int, n: int) -> int:
    """Number of surjective maps {1..m} -> {1..n}."""
    return factorial(n) * stirling2(m, n)


def surjections_inclusion_exclusion(m: int, n: int) -> int:
    """Independent route to the surjection count, for cross-checking."""
    return sum((-1) ** (n - j) * comb(n, j) * j**m for j in range(n + 1))


def sigma(m: int, n: int) -> int:
    """Maps {1..m} -> {+-1..+-n} whose absolute values cover {1..n}."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return 2**m * surjections(m, n)


# -- centered simplex tuples in the cube -----------------------------------


def cube_vertices(n: int) -> list[tuple[int, ...]]:
    return [tuple(s) for s in product((-1, 1), repeat=n)]


def _int_det(rows: list[list[int]]) -> int:
    """Determinant of a small integer matrix, fraction-free."""
    a = [row[:] for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        for i in range(c + 1, n):
            f = a[i][c]
            for j in range(c + 1, n):
                a[i][j] = (p * a[i][j] - f * a[c][j]) // prev
            a[i][c] = 0
        prev = p
    return sign * a[-1][-1]


def origin_strictly_inside(points) -> bool:
    """Is 0 interior to the full-dimensional simplex spanned by the points?

    points is an (n+1)-tuple of integer points in R^n.  Exact: solves
    the barycentric system by Cramer determinants and demands that all
    coordinates are strictly positive.
    """
    n = len(points) - 1
    m_rows = [[points[j][r] for j in range(n + 1)] for r in range(n)]
    m_rows.append([1] * (n + 1))
    det = _int_det(m_rows)
    if det == 0:
        return False
    for i in range(n + 1):
        replaced = [row[:] for row in m_rows]
        for r in range(n):
            replaced[r][i] = 0
        replaced[n][i] = 1
        di = _int_det(replaced)
        if di == 0 or (di > 0) != (det > 0):
            return False
    return True


def _valid_subsets(n: int, require_first=None):
    """(n+1)-subsets of cube vertices spanning a centered simplex.

    With require_first, only subsets containing that vertex are visited
    (the symmetry group is transitive on cube vertices, so counts for
    the full set follow by scaling).
    """
    verts = cube_vertices(n)
    if require_first is None:
        yield from (s for s in combinations(verts, n + 1) if origin_strictly_inside(s))
    else:
        rest = [v for v in verts if v != require_first]
        for s in combinations(rest, n):
            cand = (require_first,) + s
            if origin_strictly_inside(cand):
                yield cand


def simplex_tuples(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All ordered (n+1)-tuples of cube vertices whose hull is a
    full-dimensional simplex containing the origin strictly inside."""
    if n > 4:
        raise SizeGuardError(
            "full ordered tuple set guarded to n <= 4; "
            "use reduced_simplex_tuples / simplex_tuple_count for n = 5")
    if n < 1:
        raise ValueError("need n >= 1")
    out = []
    for subset in _valid_subsets(n):
        out.extend(permutations(subset))
    return out


def reduced_simplex_tuples(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """The tuples whose first entry is the all-minus-ones vertex.

    One per full-group orbit representative family: the group is
    transitive on cube vertices, so the full tuple count is 2^n times
    the reduced count, and full-group orbits correspond to orbits of
    the first-vertex stabilizer (coordinate permutations) on this set.
    """
    if n > TUPLE_GUARD:
        raise SizeGuardError(f"tuple enumeration guarded to n <= {TUPLE_GUARD}")
    if n < 1:
        raise ValueError("need n >= 1")
    anchor = (-1,) * n
    out = []
    for subset in _valid_subsets(n, require_first=anchor):
        for rest in permutations(subset[1:]):
            out.append((anchor,) + rest)
    return out


def simplex_tuple_count(n: int) -> int:
    """|{ordered centered simplex tuples}| via the transitivity reduction."""
    return 2**n * len(reduced_simplex_tuples(n))


def beta(n: int) -> int:
    """Orbit count of the signed permutation group on the centered
    simplex tuples; the action is free, so this equals the tuple count
    divided by the group order (checked)."""
    if n > TUPLE_GUARD:
        raise SizeGuardError(f"beta guarded to n <= {TUPLE_GUARD}")
    if n < 1:
        raise ValueError("need n >= 1")
    group_order = 2**n * factorial(n)
    if n <= 4:
        tuples = simplex_tuples(n)
        orbits, free = orbit_count(tuples, enumerate_group(n))
        total = len(tuples)
    else:
        # fix the first entry, count orbits of the stabilizer (plain
        # coordinate permutations) on the reduced set
        reduced = reduced_simplex_tuples(n)
        stab = [g for g in _permutation_subgroup(n)]
        orbits, free = orbit_count(reduced, stab)
        total = 2**n * len(reduced)
    if total and not free:
        raise ValueError("orbit sizes are not all equal to the group order")
    if orbits * group_order != total:
        raise ValueError("orbit count disagrees with tuple count / group order")
    return orbits


def _permutation_subgroup(n: int):
    from .groups import SignedPermutation

    return [SignedPermutation(p, (1,) * n) for p in permutations(range(n))]


# -- count reports ----------------------------------------------------------


@dataclass
class CountReport:
    """Closed-form count with optional enumeration cross-check."""

    family: str
    m: int
    n: int
    closed_form: int
    terms: dict[str, int] = field(default_factory=dict)
    enumerated: int | None = None

    @property
    def agreement(self) -> bool | None:
        if self.enumerated is None:
            return None
        return self.enumerated == self.closed_form


def _enumerated_count(source_kind: str, m: int, target_kind: str, n: int) -> int:
    from .homs import build_hom, enumerate_vertex_maps
    from .polytope import standard

    H = build_hom(standard(source_kind, m), standard(target_kind, n))
    return len(enumerate_vertex_maps(H))


def count_box_simplex(m: int, n: int, enumerate_maps: bool = False) -> CountReport:
    """Vertex count of the cube-to-simplex mapping polytope: (n+1)(mn+1)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    terms = {"rank-0": n + 1, "rank-1": (n + 1) * m * n}
    report = CountReport("box-simplex", m, n, (n + 1) * (m * n + 1), terms)
    if enumerate_maps:
        report.enumerated = _enumerated_count("cube", m, "simplex", n)
    return report


def _diamond_rank_counts(m: int, n_cap: int, high_rank_table) -> dict[int, int]:
    """#(rank-k vertex maps from the m-crosspolytope onto a k-simplex)."""
    counts = {}
    for k in range(0, n_cap + 1):
        if k == 0:
            counts[k] = 1
        elif k == 1:
            counts[k] = 2**m
        elif k == 2:
            counts[k] = 0
        elif k == 3:
            counts[k] = sigma(m, 3) if m >= 3 else 0
        else:
            if high_rank_table is None or k not in high_rank_table:
                raise ValueError(
                    f"rank-{k} vertex count required; supply high_rank_table[{k}] "
                    f"from an enumeration run")
            counts[k] = high_rank_table[k]
    return counts


def count_diamond_simplex(m: int, n: int, high_rank_table: dict[int, int] | None = None,
                          enumerate_maps: bool = False) -> CountReport:
    """Vertex count of the crosspolytope-to-simplex mapping polytope."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    per_rank = _diamond_rank_counts(m, min(m, n), high_rank_table)
    terms = {f"rank-{k}": comb(n + 1, k + 1) * c for k, c in per_rank.items()}
    report = CountReport("diamond-simplex", m, n, sum(terms.values()), terms)
    if enumerate_maps:
        report.enumerated = _enumerated_count("crosspolytope", m, "simplex", n)
    return report


def count_diamond_diamond(m: int, n: int, high_rank_table: dict[int, int] | None = None,
                          enumerate_maps: bool = False) -> CountReport:
    """Vertex count of the crosspolytope-to-crosspolytope mapping polytope.

    Maps whose center image is interior contribute 2^m n^m (they send
    vertices to vertices, antipodally); the rest land in proper faces
    and reduce to the crosspolytope-to-simplex counts.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    per_rank = _diamond_rank_counts(m, min(m, n - 1), high_rank_table)
    terms = {"center-interior": 2**m * n**m}
    for k, c in per_rank.items():
        terms[f"rank-{k}"] = 2 ** (k + 1) * comb(n, k + 1) * c
    report = CountReport("diamond-diamond", m, n, sum(terms.values()), terms)
    if enumerate_maps:
        report.enumerated = _enumerated_count("crosspolytope", m, "crosspolytope", n)
    return report


def bound_box_diamond(m: int, n: int) -> int:
    """Lower bound for the cube-to-crosspolytope vertex count:
    2n + 2mn(2n-1) + 2mn(m-1)(n-1)."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    return 2 * n + 2 * m * n * (2 * n - 1) + 2 * m * n * (m - 1) * (n - 1)


def intersection_bound(n: int) -> int:
    """Upper bound for the vertex count of an intersection of two
    n-simplices: C(2n+2, n+2)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return comb(2 * n + 2, n + 2)


def rank_k_sandwich(m: int, k: int) -> tuple[int, int]:
    """Lower and upper bounds for the rank-k vertex-map count from the
    m-crosspolytope onto a k-simplex."""
    lo = sigma(m, k) * beta(k)
    hi = (2**k * factorial(m) // factorial(m - k)) * intersection_bound(k) ** (m - k) * beta(k)
    return lo, hi
