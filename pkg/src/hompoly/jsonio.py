"""Canonical JSON forms for every value that crosses the CLI boundary.

Rationals serialize as the canonical string "p/q", or "p" alone when
the denominator is 1.  All object keys are emitted sorted and vertex /
inequality lists are in canonical order, so identical inputs always
produce byte-identical JSON.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .counts import CountReport
from .homs import AffineMap, HomPolytope, map_rank
from .linalg import Vec
from .polytope import HRep, Polytope, VRep
from .verify import VerificationResult


def rat_to_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def str_to_rat(s: str) -> Fraction:
    return Fraction(s)


def vec_to_json(v: Vec) -> list[str]:
    return [rat_to_str(x) for x in v]


def json_to_vec(data) -> Vec:
    return tuple(Fraction(x) for x in data)


def _rows_to_json(rows):
    return [{"normal": vec_to_json(n), "offset": rat_to_str(c)} for n, c in rows]


def _rows_from_json(data):
    return [(json_to_vec(r["normal"]), Fraction(r["offset"])) for r in data]


def polytope_to_json(P: Polytope, include_vertices: bool = True,
                     include_hrep: bool = True) -> dict:
    out: dict = {"ambient_dim": P.ambient_dim}
    if include_vertices:
        out["vertices"] = [vec_to_json(v) for v in P.vertices]
    if include_hrep:
        h = P.hrep
        out["inequalities"] = _rows_to_json(h.inequalities)
        out["equations"] = _rows_to_json(h.equations)
    return out


def polytope_from_json(data: dict) -> Polytope:
    ambient = data["ambient_dim"]
    vrep = None
    hrep = None
    if "vertices" in data:
        vrep = VRep(tuple(sorted(json_to_vec(v) for v in data["vertices"])))
    if "inequalities" in data or "equations" in data:
        from .polytope import _canonical_hrep

        hrep = _canonical_hrep(_rows_from_json(data.get("inequalities", [])),
                               _rows_from_json(data.get("equations", [])))
    return Polytope(ambient, vrep=vrep, hrep=hrep)


def map_to_json(f: AffineMap, is_vertex: bool | None = None) -> dict:
    out = {
        "A": [vec_to_json(row) for row in f.matrix],
        "b": vec_to_json(f.offset),
        "rank": map_rank(f),
    }
    if is_vertex is not None:
        out["is_vertex"] = is_vertex
    return out


def map_from_json(data: dict) -> AffineMap:
    return AffineMap(tuple(json_to_vec(r) for r in data["A"]),
                     json_to_vec(data["b"]))


def hom_to_json(H: HomPolytope, source_desc: dict, target_desc: dict) -> dict:
    from .homs import structured_row_order

    return {
        "source": source_desc,
        "target": target_desc,
        "source_dim": H.source_dim,
        "target_dim": H.target_dim,
        "ambient_dim": H.ambient_dim,
        "coordinate_convention": "b first, then A row-major",
        "inequalities": _rows_to_json(H.rows),
        "pairs": [list(p) for p in H.pairs],
        "insertion_order": structured_row_order(H),
    }


def count_report_to_json(r: CountReport) -> dict:
    out = {
        "family": r.family,
        "m": r.m,
        "n": r.n,
        "closed_form": r.closed_form,
        "terms": dict(sorted(r.terms.items())),
    }
    if r.enumerated is not None:
        out["enumerated"] = r.enumerated
        out["agreement"] = r.agreement
    return out


def result_to_json(r: VerificationResult, include_timing: bool = False) -> dict:
    out: dict = {
        "claim": r.claim_id,
        "parameters": r.parameters,
        "status": r.status,
    }
    if r.witness is not None:
        out["witness"] = r.witness
    if include_timing:
        out["elapsed_seconds"] = round(r.elapsed, 3)
    return out


def table_to_json(rows) -> list[dict]:
    return [
        {
            "n": r.n,
            "perturbed_count": r.perturbed_count,
            "random_count": r.random_count,
            "bound": r.bound,
            "percent_display": r.percent,
        }
        for r in rows
    ]


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
