"""Exact rational vectors, matrices, and elimination.

Scalars are `fractions.Fraction`, which already maintains the canonical
form (lowest terms, positive denominator, zero as 0/1).  Vectors are
tuples of Fractions and matrices are tuples of row tuples, so every
value is immutable and hashable and every operation is a pure function.
Nothing in the computation path touches floating point; approximate
values exist only in CLI pretty-printing.

Rank is computed by fraction-free (Bareiss) elimination on an
integer-cleared copy of the matrix, which keeps intermediate entries
small even for the dimension-16 inequality systems produced elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

Rat = Fraction
Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def normalize(numerator, denominator=1) -> Fraction:
    """Canonical rational p/q: gcd(|p|, q) = 1, q > 0, zero is 0/1."""
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numerator, denominator)


def vec(values) -> Vec:
    return tuple(Fraction(x) for x in values)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def dot(u: Vec, v: Vec) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(u: Vec, c) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def mat(rows) -> Mat:
    return tuple(vec(r) for r in rows)


def identity(n: int) -> Mat:
    return tuple(unit_vec(n, i) for i in range(n))


def transpose(M: Mat) -> Mat:
    return tuple(zip(*M)) if M else ()


def mat_vec(M: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in M)


def primitive(v: Vec, orient: bool = False) -> Vec:
    """Scale to coprime integer entries.

    Only positive scalings are applied, so inequality directions are
    preserved.  With `orient` the sign is also fixed so the first
    nonzero entry is positive (for equations, where both signs describe
    the same hyperplane).
    """
    if is_zero(v):
        return zero_vec(len(v))
    m = 1
    for x in v:
        m = lcm(m, x.denominator)
    ints = [int(x * m) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    if orient:
        lead = next(a for a in ints if a)
        if lead < 0:
            ints = [-a for a in ints]
    return tuple(Fraction(a) for a in ints)


def _integer_rows(rows) -> list[list[int]]:
    # clear denominators row-wise; preserves the row space
    out = []
    for row in rows:
        m = 1
        for x in row:
            m = lcm(m, x.denominator)
        out.append([int(x * m) for x in row])
    return out


def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination (destructive)."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n_rows):
            ri = rows[i]
            f = ri[c]
            if f:
                for j in range(c + 1, n_cols):
                    ri[j] = (p * ri[j] - f * rows[r][j]) // prev
                ri[c] = 0
            elif prev != p:
                # Bareiss divides every handled row by the previous pivot
                for j in range(c + 1, n_cols):
                    ri[j] = (p * ri[j]) // prev
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rank(M) -> int:
    """Exact matrix rank (fraction-free elimination)."""
    rows = [r for r in _integer_rows(M) if any(r)]
    return int_rank(rows)


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns the nonzero rows and the pivot column indices.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(work)
    n_cols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        work[r] = [x / p for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return work[:r], pivots


@dataclass(frozen=True)
class LinearSolution:
    """Solution set of M x = rhs: a particular point plus a nullspace basis."""

    particular: Vec
    nullspace: tuple[Vec, ...]

    @property
    def unique(self) -> bool:
        return not self.nullspace


def solve(M: Mat, rhs: Vec):
    """Exact solution classification for M x = rhs.

    Returns None when inconsistent, otherwise a LinearSolution whose
    nullspace is empty exactly when the solution is unique.
    """
    if len(rhs) != len(M):
        raise ValueError("rhs length does not match row count")
    if not M:
        return LinearSolution((), ())
    n_cols = len(M[0])
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    red, pivots = rref(aug)
    if n_cols in pivots:
        return None
    particular = [ZERO] * n_cols
    for row, c in zip(red, pivots):
        particular[c] = row[-1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return LinearSolution(tuple(particular), tuple(basis))


def nullspace(M: Mat) -> tuple[Vec, ...]:
    """Basis of {x : M x = 0} (standard free-column construction)."""
    if not M:
        return ()
    n_cols = len(M[0])
    red, pivots = rref(M)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)


@dataclass(frozen=True)
class AffineHull:
    """Affine hull of a point set.

    `basis` spans the hull's direction space (rows in reduced echelon
    form), and `equations` are (normal, offset) pairs with
    normal . x = offset cutting out the hull; dim = len(basis).
    """

    basepoint: Vec
    basis: tuple[Vec, ...]
    equations: tuple[tuple[Vec, Fraction], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def affine_hull(points) -> AffineHull:
    """Affine hull of a nonempty list of points of common dimension."""
    pts = [vec(p) for p in points]
    if not pts:
        raise ValueError("affine hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points of mixed dimension")
    p0 = pts[0]
    diffs = [sub(p, p0) for p in pts[1:]]
    diffs = [d for d in diffs if not is_zero(d)]
    if diffs:
        red, _ = rref(diffs)
        basis = tuple(tuple(row) for row in red)
    else:
        basis = ()
    normals = nullspace(basis) if basis else tuple(unit_vec(n, i) for i in range(n))
    equations = []
    for raw in normals:
        normal = primitive(raw, orient=True)
        equations.append((normal, dot(normal, p0)))
    return AffineHull(p0, basis, tuple(equations))
