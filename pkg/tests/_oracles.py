"""Independent brute-force oracles used to cross-check the fast paths."""

from fractions import Fraction
from itertools import combinations

from hompoly.linalg import dot, mat, rank, solve, vec


def brute_force_vertices(ineqs, eqs, dim):
    """Vertex set by exhaustive basis enumeration.

    Solves every square subsystem (all equations plus a complementary
    subset of inequalities turned into equalities) and keeps the unique
    solutions that are feasible.  Exponential; only for small systems.
    """
    ineqs = [(vec(n), Fraction(c)) for n, c in ineqs]
    eqs = [(vec(n), Fraction(c)) for n, c in eqs]
    eq_normals = [n for n, _ in eqs]
    eq_rank = rank(mat(eq_normals)) if eq_normals else 0
    k = dim - eq_rank
    found = set()
    for subset in combinations(range(len(ineqs)), k):
        rows = eq_normals + [ineqs[i][0] for i in subset]
        rhs = [c for _, c in eqs] + [ineqs[i][1] for i in subset]
        sol = solve(mat(rows), vec(rhs))
        if sol is None or not sol.unique:
            continue
        x = sol.particular
        if all(dot(n, x) <= c for n, c in ineqs):
            found.add(x)
    return sorted(found)


def brute_force_extreme_points(points):
    """Extreme points of a finite set: p is extreme iff it is not in the
    hull of the others, decided by exact LP-free barycentric search over
    small support sets (works because the sets here are tiny)."""
    points = [vec(p) for p in points]
    out = []
    for i, p in enumerate(points):
        others = [q for j, q in enumerate(points) if j != i]
        if not _in_hull(p, others):
            out.append(p)
    return sorted(set(out))


def _in_hull(p, points):
    # exact: p in conv(points) iff some subset of <= dim+1 points contains it
    # (Caratheodory); we search all subsets because inputs are tiny.
    n = len(p)
    for k in range(1, min(len(points), n + 1) + 1):
        for subset in combinations(points, k):
            rows = [list(col) for col in zip(*subset)] + [[1] * k]
            rhs = list(p) + [1]
            sol = solve(mat(rows), vec(rhs))
            if sol is None:
                continue
            lam = sol.particular
            if sol.unique and all(x >= 0 for x in lam):
                return True
    return False
