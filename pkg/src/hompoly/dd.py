"""Double description kernel over exact integer arithmetic.

Vertex enumeration runs on the homogenization cone of the polytope: a
point x satisfying a . x <= b corresponds to the ray (1, x), and the
inequality to the linear functional (b, -a) applied to homogeneous
coordinates.  The kernel maintains the extreme rays of the cone cut out
by the functionals processed so far, inserting one functional at a
time.

Representation choices, all in service of exactness and speed:

- Rays are primitive integer vectors (gcd 1).  New rays are positive
  integer combinations of an adjacent (positive, negative) pair, so no
  rational arithmetic happens in the loop.
- Active constraint sets are bitmasks over the row indices.  Two rays
  are adjacent iff no third extreme ray's active set contains the
  intersection of theirs (the standard combinatorial test, exact when
  the maintained set is precisely the extreme rays); a popcount filter
  and per-constraint ray lists keep the test cheap.
- Functionals are inserted in order of ascending number of currently
  violated rays, recomputed each round from cached evaluation values;
  ties break by input position, so runs are deterministic.

The kernel requires a pointed cone, which is automatic for the
homogenization of a bounded (possibly lower-dimensional or empty)
polytope.  A rank-deficient input system means the cone contains a
line, i.e. the feasible set is unbounded or an affine subspace; that is
reported as UnboundedPolytopeError.
"""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from math import gcd

from .errors import UnboundedPolytopeError
from .linalg import Vec, rref

__all__ = ["cone_extreme_rays", "polytope_vertices"]

log = logging.getLogger(__name__)


class _Ray:
    __slots__ = ("coords", "mask", "vals", "alive")

    def __init__(self, coords, mask, vals):
        self.coords = coords
        self.mask = mask
        self.vals = vals
        self.alive = True


def _reduce(coords: list[int]) -> list[int]:
    g = 0
    for a in coords:
        g = gcd(g, a)
    if g > 1:
        coords = [a // g for a in coords]
    return coords


def _independent_rows(rows: list[tuple[int, ...]], dim: int) -> list[int]:
    """Indices of the first dim linearly independent rows, greedily."""
    chosen: list[int] = []
    work: list[list[Fraction]] = []
    for i, row in enumerate(rows):
        cand = work + [[Fraction(x) for x in row]]
        red, pivots = rref(cand)
        if len(pivots) > len(work):
            chosen.append(i)
            work = red
            if len(chosen) == dim:
                break
    return chosen


def cone_extreme_rays(rows: list[tuple[int, ...]],
                      order: str = "mincutoff") -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {y : r . y >= 0 for all r in rows}.

    Rays come back as primitive integer tuples in no particular order.
    Raises UnboundedPolytopeError when the rows do not have full column
    rank (the cone then contains a line).

    `order` picks the insertion heuristic: "mincutoff" inserts the row
    violated by the fewest current rays, "maxcutoff" the most, "given"
    keeps the input order.  All are deterministic.
    """
    rows = [row for row in rows if any(row)]
    if not rows:
        raise UnboundedPolytopeError("no constraints: feasible cone is all of space")
    dim = len(rows[0])
    n_rows = len(rows)

    basis_idx = _independent_rows(rows, dim)
    if len(basis_idx) < dim:
        raise UnboundedPolytopeError("constraint rows do not span; cone contains a line")

    # Initial simplicial cone from the basis rows; its extreme rays are
    # the (sign-corrected) columns of the inverse of the basis matrix.
    basis = [rows[i] for i in basis_idx]
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(dim)]
           for i, row in enumerate(basis)]
    red, pivots = rref(aug)
    inv_cols: list[list[Fraction]] = [[red[i][dim + j] for i in range(dim)] for j in range(dim)]

    remaining = [i for i in range(n_rows) if i not in set(basis_idx)]
    rays: list[_Ray] = []
    for j in range(dim):
        col = inv_cols[j]
        m = 1
        for x in col:
            m = m * x.denominator // gcd(m, x.denominator)
        coords = _reduce([int(x * m) for x in col])
        mask = 0
        for i, bi in enumerate(basis_idx):
            if i != j:
                mask |= 1 << bi
        vals = [0] * n_rows
        for i in remaining:
            row = rows[i]
            vals[i] = sum(r * c for r, c in zip(row, coords))
        rays.append(_Ray(tuple(coords), mask, vals))

    counts = [0] * n_rows
    for ray in rays:
        for i in remaining:
            if ray.vals[i] < 0:
                counts[i] += 1

    act_lists: dict[int, list[_Ray]] = {i: [] for i in range(n_rows)}
    for ray in rays:
        m = ray.mask
        while m:
            b = m & -m
            act_lists[b.bit_length() - 1].append(ray)
            m ^= b

    need = dim - 2  # active-set size needed for a 2-face
    dead_entries = 0
    live_entries = dim * (dim - 1)

    def adjacent(u: _Ray, w: _Ray, s: int) -> bool:
        if s:
            best = None
            m = s
            while m:
                b = m & -m
                lst = act_lists[b.bit_length() - 1]
                if best is None or len(lst) < len(best):
                    best = lst
                m ^= b
            scan = best
        else:
            scan = rays
        for r in scan:
            if r.alive and r is not u and r is not w and (r.mask & s) == s:
                return False
        return True

    trace = log.isEnabledFor(logging.DEBUG)
    step = 0
    while remaining:
        if order == "mincutoff":
            j = min(remaining, key=lambda i: (counts[i], i))
        elif order == "maxcutoff":
            j = min(remaining, key=lambda i: (-counts[i], i))
        elif order == "given":
            j = remaining[0]
        else:
            raise ValueError(f"unknown insertion order {order!r}")
        remaining.remove(j)
        rem = remaining
        step += 1
        t_step = time.perf_counter() if trace else 0.0

        pos: list[_Ray] = []
        neg: list[_Ray] = []
        for ray in rays:
            v = ray.vals[j]
            if v > 0:
                pos.append(ray)
            elif v < 0:
                neg.append(ray)
            else:
                ray.mask |= 1 << j
                act_lists[j].append(ray)
                live_entries += 1

        newborn: list[_Ray] = []
        bit_j = 1 << j
        for w in neg:
            wv = w.vals[j]
            w_mask = w.mask
            w_coords = w.coords
            w_vals = w.vals
            # cheap popcount prefilter in a single C-level pass
            cands = [u for u in pos if (u.mask & w_mask).bit_count() >= need]
            for u in cands:
                s = u.mask & w_mask
                if not adjacent(u, w, s):
                    continue
                uv = u.vals[j]
                u_coords = u.coords
                coords = [uv * wc - wv * uc for wc, uc in zip(w_coords, u_coords)]
                g = 0
                for a in coords:
                    g = gcd(g, a)
                u_vals = u.vals
                if g > 1:
                    coords = [a // g for a in coords]
                    vals = [0] * n_rows
                    for i in rem:
                        vals[i] = (uv * w_vals[i] - wv * u_vals[i]) // g
                else:
                    vals = [0] * n_rows
                    for i in rem:
                        vals[i] = uv * w_vals[i] - wv * u_vals[i]
                newborn.append(_Ray(tuple(coords), s | bit_j, vals))

        for w in neg:
            w.alive = False
            dead_entries += w.mask.bit_count()
            for i in rem:
                if w.vals[i] < 0:
                    counts[i] -= 1

        for ray in newborn:
            for i in rem:
                if ray.vals[i] < 0:
                    counts[i] += 1
            m = ray.mask
            while m:
                b = m & -m
                act_lists[b.bit_length() - 1].append(ray)
                live_entries += 1
                m ^= b

        rays = [r for r in rays if r.alive] + newborn
        if trace:
            log.debug("insert %d/%d row %d: rays %d (+%d -%d) %.2fs",
                      step, step + len(remaining), j, len(rays), len(newborn),
                      len(neg), time.perf_counter() - t_step)
        if not rays:
            return []

        if dead_entries > live_entries:
            act_lists = {i: [] for i in range(n_rows)}
            live_entries = 0
            for ray in rays:
                m = ray.mask
                while m:
                    b = m & -m
                    act_lists[b.bit_length() - 1].append(ray)
                    live_entries += 1
                    m ^= b
            dead_entries = 0

    return [r.coords for r in rays]


def polytope_vertices(ineqs, dim: int, order: str = "mincutoff") -> list[Vec]:
    """Vertices of {x in R^dim : normal . x <= offset for all inequalities}.

    Inequalities are (normal, offset) pairs with integer-valued rational
    entries accepted.  Returns the lexicographically sorted vertex list;
    raises UnboundedPolytopeError if the feasible set has a recession
    direction.  An empty feasible set yields an empty list.
    """
    rows: list[tuple[int, ...]] = []
    for normal, offset in ineqs:
        row = [offset] + [-x for x in normal]
        m = 1
        for x in row:
            f = Fraction(x)
            m = m * f.denominator // gcd(m, f.denominator)
        ints = [int(Fraction(x) * m) for x in row]
        if not any(ints[1:]):
            if ints[0] < 0:
                return []  # 0 <= negative: infeasible
            continue
        rows.append(tuple(_reduce(ints)))
    rows.append(tuple([1] + [0] * dim))

    if dim == 0:
        return [()]

    rays = cone_extreme_rays(rows, order=order)
    vertices: list[Vec] = []
    for ray in rays:
        t = ray[0]
        if t <= 0:
            raise UnboundedPolytopeError("feasible set has a recession direction")
        vertices.append(tuple(Fraction(c, t) for c in ray[1:]))
    vertices.sort()
    return vertices
