"""Command-line interface.

Subcommands: construct, vertices, count, beta, sigma, table, verify,
dual, intersect.  Every subcommand takes --json for machine-readable
output carrying exactly the same numbers as the text form; identical
command lines produce byte-identical JSON.  Exit codes: 0 success (all
verifications passed), 1 verification failure, 2 usage or input error.

Heavy enumerations are gated: anything whose inequality system exceeds
the guard needs --allow-large, as does beta at its largest supported
argument.  --threads (or HOMPOLY_THREADS) controls worker processes for
suite runs; results are independent of the thread count.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import counts as counts_mod
from . import experiments, jsonio, verify
from .errors import SizeGuardError, UnboundedPolytopeError
from .homs import build_hom, rank_histogram, unflatten_map
from .polytope import Polytope, intersect, polar_dual, standard

LARGE_DIM_GUARD = 16
LARGE_ROWS_GUARD = 96

STANDARD_KINDS = ("simplex", "cube", "crosspolytope")


def parse_polytope_spec(spec: str) -> tuple[dict, Polytope]:
    """Parse "simplex:3", "cube:2", "crosspolytope:4", or "file:PATH"."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"bad polytope spec {spec!r}; expected kind:arg")
    if kind in STANDARD_KINDS:
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad dimension in spec {spec!r}") from None
        return {"kind": kind, "n": n}, standard(kind, n)
    if kind == "file":
        with open(arg) as fh:
            data = json.load(fh)
        return {"kind": "file", "path": arg}, jsonio.polytope_from_json(data)
    raise ValueError(f"unknown polytope kind {kind!r}")


def _emit(args, payload, text_lines):
    if args.json:
        sys.stdout.write(jsonio.dumps_canonical(payload))
    else:
        for line in text_lines:
            print(line)


def _write_out(args, payload) -> bool:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(jsonio.dumps_canonical(payload))
        return True
    return False


def cmd_construct(args) -> int:
    src_desc, P = parse_polytope_spec(args.source)
    tgt_desc, Q = parse_polytope_spec(args.target)
    H = build_hom(P, Q)
    payload = jsonio.hom_to_json(H, src_desc, tgt_desc)
    wrote = _write_out(args, payload)
    summary = {
        "ambient_dim": H.ambient_dim,
        "inequalities": len(H.rows),
    }
    if args.json and not wrote:
        sys.stdout.write(jsonio.dumps_canonical(payload))
    else:
        _emit(args, summary,
              [f"dimension {H.ambient_dim}", f"inequalities {len(H.rows)}"])
    return 0


def _check_large(args, dim: int, rows: int):
    if (dim >= LARGE_DIM_GUARD or rows >= LARGE_ROWS_GUARD) and not args.allow_large:
        raise SizeGuardError(
            f"system of {rows} inequalities in dimension {dim} is a long "
            f"exact-arithmetic run; pass --allow-large to proceed")


def cmd_vertices(args) -> int:
    from . import dd

    with open(args.hom) as fh:
        data = json.load(fh)
    rows = [(jsonio.json_to_vec(r["normal"]), Fraction(r["offset"]))
            for r in data["inequalities"]]
    m, n = data["source_dim"], data["target_dim"]
    ambient = data["ambient_dim"]
    _check_large(args, ambient, len(rows))
    if "insertion_order" in data:
        ordered = [rows[k] for k in data["insertion_order"]]
        verts = dd.polytope_vertices(ordered, ambient, order="given")
    else:
        verts = dd.polytope_vertices(rows, ambient)
    maps = [unflatten_map(w, m, n) for w in verts]
    payload: dict = {"count": len(maps)}
    lines = [f"vertex maps: {len(maps)}"]
    if args.ranks:
        hist = rank_histogram(maps)
        payload["rank_histogram"] = {str(k): v for k, v in hist.items()}
        lines.append("rank histogram: " + ", ".join(f"{k}: {v}" for k, v in hist.items()))
    if args.out:
        maps_payload = [jsonio.map_to_json(f) for f in maps]
        with open(args.out, "w") as fh:
            fh.write(jsonio.dumps_canonical(maps_payload))
        lines.append(f"wrote {len(maps)} maps to {args.out}")
    _emit(args, payload, lines)
    return 0


def cmd_count(args) -> int:
    family = args.family
    if family == "intersection-bound":
        value = counts_mod.intersection_bound(args.m)
        _emit(args, {"family": family, "n": args.m, "bound": value}, [str(value)])
        return 0
    if args.n is None:
        raise ValueError(f"family {family!r} needs both m and n")
    if family == "box-diamond-bound":
        value = counts_mod.bound_box_diamond(args.m, args.n)
        _emit(args, {"family": family, "m": args.m, "n": args.n, "lower_bound": value},
              [str(value)])
        return 0
    builders = {
        "box-simplex": counts_mod.count_box_simplex,
        "diamond-simplex": counts_mod.count_diamond_simplex,
        "diamond-diamond": counts_mod.count_diamond_diamond,
    }
    if family not in builders:
        raise ValueError(f"unknown count family {family!r}")
    kwargs = {"enumerate_maps": args.enumerate}
    report = builders[family](args.m, args.n, **kwargs)
    payload = jsonio.count_report_to_json(report)
    lines = [f"{family}({args.m},{args.n}) closed form: {report.closed_form}"]
    for key, val in sorted(report.terms.items()):
        lines.append(f"  {key}: {val}")
    if report.enumerated is not None:
        lines.append(f"enumerated: {report.enumerated} "
                     f"({'agrees' if report.agreement else 'DISAGREES'})")
        if not report.agreement:
            _emit(args, payload, lines)
            return 1
    _emit(args, payload, lines)
    return 0


def cmd_beta(args) -> int:
    if args.n >= 5 and not args.allow_large:
        raise SizeGuardError("beta(5) is a long run; pass --allow-large")
    value = counts_mod.beta(args.n)
    _emit(args, {"n": args.n, "beta": value}, [str(value)])
    return 0


def cmd_sigma(args) -> int:
    value = counts_mod.sigma(args.m, args.n)
    _emit(args, {"m": args.m, "n": args.n, "sigma": value}, [str(value)])
    return 0


def cmd_table(args) -> int:
    eps = Fraction(args.eps)
    rows = experiments.reproduce_table(args.n_min, args.n_max, args.seed, eps=eps)
    payload = jsonio.table_to_json(rows)
    lines = [f"{'n':>3} {'perturbed':>10} {'random':>8} {'bound':>10} {'pct':>8}"]
    for r in rows:
        lines.append(f"{r.n:>3} {r.perturbed_count:>10} {r.random_count:>8} "
                     f"{r.bound:>10} {r.percent:>7.4g}%")
    lines.append("pct is display-only; all comparisons are exact")
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    if args.list:
        payload = sorted(verify.CLAIMS)
        _emit(args, payload, payload)
        return 0
    if args.claim:
        params = {}
        for kv in args.param:
            key, sep, val = kv.partition("=")
            if not sep:
                raise ValueError(f"bad --param {kv!r}; expected key=value")
            try:
                params[key] = int(val)
            except ValueError:
                params[key] = val
        results = [verify.run_claim(args.claim, params)]
    else:
        results = verify.run_suite(args.suite, threads=args.threads)
    payload = [jsonio.result_to_json(r, include_timing=args.timings) for r in results]
    lines = []
    for r in results:
        mark = "pass" if r.passed else "FAIL"
        lines.append(f"[{mark}] {r.claim_id} {r.parameters}")
        if not r.passed:
            lines.append(f"       witness: {r.witness}")
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} claims passed")
    _emit(args, payload, lines)
    return 1 if n_fail else 0


def cmd_dual(args) -> int:
    _, P = parse_polytope_spec(args.polytope)
    D = polar_dual(P)
    payload = jsonio.polytope_to_json(D)
    if not _write_out(args, payload) and args.json:
        sys.stdout.write(jsonio.dumps_canonical(payload))
    else:
        _emit(args, {"vertices": D.n_vertices, "facets": D.n_facets},
              [f"dual has {D.n_vertices} vertices, {D.n_facets} facets"])
    return 0


def cmd_intersect(args) -> int:
    _, P = parse_polytope_spec(args.first)
    _, Q = parse_polytope_spec(args.second)
    K = intersect(P, Q)
    payload = jsonio.polytope_to_json(K, include_hrep=not K.is_empty)
    if _write_out(args, payload):
        print(f"intersection: {K.n_vertices} vertices, dim {K.dim}")
    elif args.json:
        sys.stdout.write(jsonio.dumps_canonical(payload))
    else:
        print(f"intersection: {K.n_vertices} vertices, dim {K.dim}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hompoly",
        description="Exact construction and enumeration of polytopes of affine maps")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    default_threads = int(os.environ.get("HOMPOLY_THREADS", os.cpu_count() or 1))

    p = sub.add_parser("construct", help="build a mapping polytope inequality system")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--out", help="write hom JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("vertices", help="enumerate vertex maps of a hom JSON file")
    p.add_argument("hom")
    p.add_argument("--ranks", action="store_true", help="print the rank histogram")
    p.add_argument("--out", help="write maps JSON here")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("count", help="closed-form counts and bounds")
    p.add_argument("family", choices=["box-simplex", "diamond-simplex",
                                      "diamond-diamond", "box-diamond-bound",
                                      "intersection-bound"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--enumerate", action="store_true",
                   help="cross-check against an enumeration run")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("beta", help="orbit count of centered simplex tuples")
    p.add_argument("n", type=int)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("sigma", help="signed surjection count")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("table", help="simplex intersection experiment table")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--eps", default="1/1000", help="perturbation size (rational)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification claims")
    p.add_argument("--claim", help="single claim id")
    p.add_argument("--param", action="append", default=[],
                   help="claim parameter key=value (repeatable)")
    p.add_argument("--suite", choices=["core", "extended"], default="core")
    p.add_argument("--list", action="store_true", help="list registered claims")
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--timings", action="store_true",
                   help="include elapsed seconds in JSON output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dual", help="polar dual of a polytope")
    p.add_argument("polytope")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("intersect", help="intersection of two polytopes")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_intersect)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, UnboundedPolytopeError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
