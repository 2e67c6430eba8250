"""Command-line front end.

Every subcommand reads files in the plain text formats documented in the
README, computes exactly, and emits a versioned JSON report (or --text).
Identical invocations produce byte-identical output: all orderings are
deterministic and any sampling is driven by --seed.

Exit codes: 0 success, 2 malformed input or precondition failure, 3 a
configured work budget refused the computation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from random import Random

from . import chain_complex as cc
from . import fitting as fit
from . import graphs as gr
from .arrangement import cone, load_arrangement, rank, rank_deficit
from .connectivity import connectivity
from .errors import BudgetError, InputError, NotHypersolvableError
from .gaussian import parse_gaussian
from .hypersolvable import is_supersolvable, search_composition_series
from .orlik_solomon import kernel_rank, poincare_polynomial, quadratic_os_dims

SCHEMA = 1


def _matrix_json(P: cc.PresentationMatrix) -> dict:
    entries = []
    for i, row in enumerate(P.entries):
        for j, poly in enumerate(row):
            if not poly.is_zero():
                entries.append({"row": i, "col": j, "terms": poly.to_json()})
    return {
        "variables": list(P.variables),
        "rows": P.n_generators,
        "cols": P.n_relations,
        "entries": entries,
    }


def _complex_json(Y: cc.MinimalChainComplex) -> dict:
    boundaries = []
    for q in range(1, Y.dim + 1):
        mat = Y.boundary(q)
        entries = []
        for i, row in enumerate(mat):
            for j, poly in enumerate(row):
                if not poly.is_zero():
                    entries.append({"row": i, "col": j, "terms": poly.to_json()})
        boundaries.append(
            {"degree": q, "rows": Y.rank(q - 1), "cols": Y.rank(q), "entries": entries}
        )
    return {
        "variables": list(Y.variables),
        "ranks": list(Y.ranks),
        "boundaries": boundaries,
    }


def _emit(report: dict, as_text: bool) -> None:
    report = {"schema": SCHEMA, **report}
    if as_text:
        for key, value in report.items():
            print(f"{key}: {value}")
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


def _load_central(path: str) -> tuple:
    arr = load_arrangement(path)
    coned = False
    if not arr.central:
        arr = cone(arr)
        coned = True
    return arr, coned


def _file_hash(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _series_fields(search) -> dict:
    if search.series is None:
        return {
            "hypersolvable": False,
            "certificate": [list(s) for s in search.frontier],
        }
    s = search.series
    return {
        "hypersolvable": True,
        "length": s.length,
        "exponents": list(s.exponents),
        "fibered_flags": list(s.fibered_flags),
        "series": [list(step) for step in s.steps],
    }


def cmd_analyze(args) -> dict:
    arr, coned = _load_central(args.file)
    report = {
        "input": {
            "path": args.file,
            "sha256": _file_hash(args.file),
            "hyperplanes": len(arr),
            "dim": arr.ambient_dim,
            "rank": rank(arr),
            "rank_deficit": rank_deficit(arr),
            "coned": coned,
        }
    }
    search = search_composition_series(arr, budget=args.budget)
    report.update(_series_fields(search))
    p_poly = poincare_polynomial(arr)
    report["poincare"] = p_poly.to_list()
    if search.series is None:
        report["supersolvable"] = False
        return report
    conn = connectivity(arr, budget=args.budget)
    supers, _ = is_supersolvable(arr, budget=args.budget)
    report["supersolvable"] = supers
    report["poincare_bar"] = conn.pbar_poly.to_list()
    report["p"] = "infinity" if conn.p is None else conn.p
    report["aspherical"] = conn.aspherical
    report["c_next"] = conn.c_next
    return report


def cmd_hypersolv(args) -> dict:
    arr, coned = _load_central(args.file)
    search = search_composition_series(arr, budget=args.budget)
    report = {"coned": coned}
    report.update(_series_fields(search))
    if search.series is not None:
        supers, _ = is_supersolvable(arr, budget=args.budget)
        report["supersolvable"] = supers
    else:
        report["supersolvable"] = False
    return report


def cmd_osalg(args) -> dict:
    arr, coned = _load_central(args.file)
    degree = args.degree
    quad = quadratic_os_dims(arr, degree)
    poin = poincare_polynomial(arr)
    kernels = [quad[q] - poin[q] for q in range(len(quad.dims))]
    return {
        "coned": coned,
        "degree": degree,
        "poincare": poin.to_list(),
        "quadratic": list(quad.dims),
        "kernel_ranks": kernels,
    }


def cmd_connectivity(args) -> dict:
    arr, coned = _load_central(args.file)
    conn = connectivity(arr, budget=args.budget)
    return {
        "coned": coned,
        "p": "infinity" if conn.p is None else conn.p,
        "aspherical": conn.aspherical,
        "c_next": conn.c_next,
        "poincare": conn.p_poly.to_list(),
        "poincare_bar": conn.pbar_poly.to_list(),
        "exponents": list(conn.series.exponents),
    }


def _build_model(spec: str) -> cc.MinimalChainComplex:
    """Parse 'torus:3,wedge:2' into a product complex with x1.. naming."""
    blocks = []
    used = 0
    for part in spec.split(","):
        part = part.strip()
        if ":" not in part:
            raise InputError(f"bad model block {part!r}; want kind:size")
        kind, _, num = part.partition(":")
        try:
            size = int(num)
        except ValueError as exc:
            raise InputError(f"bad model size in {part!r}") from exc
        names = tuple(f"x{used + i + 1}" for i in range(size))
        used += size
        if kind == "torus":
            blocks.append(cc.torus_complex(size, names))
        elif kind == "wedge":
            blocks.append(cc.wedge_complex(size, names))
        else:
            raise InputError(f"unknown model kind {kind!r}")
    if not blocks:
        raise InputError("empty model")
    model = blocks[0]
    for other in blocks[1:]:
        model = cc.kunneth_product(model, other)
    return model


def cmd_chain(args) -> dict:
    Y = _build_model(args.model)
    report = {"model": args.model}
    report.update(_complex_json(Y))
    if args.p is not None:
        pres = cc.skeleton_presentation(Y, args.p)
        report["presentation"] = _matrix_json(pres)
        res = cc.pi_p_resolution(Y, args.p)
        report["resolution_ranks"] = list(res.ranks)
        report["resolution_length"] = res.length
    return report


def _parse_point(text: str, nvars: int):
    coords = [parse_gaussian(tok) for tok in text.split(",")]
    if len(coords) != nvars:
        raise InputError(f"point needs {nvars} coordinates, got {len(coords)}")
    if any(not c for c in coords):
        raise InputError("torus points must have nonzero coordinates")
    return tuple(coords)


def cmd_fitting(args) -> dict:
    Y = _build_model(args.model)
    pres = cc.skeleton_presentation(Y, args.p)
    report = {
        "model": args.model,
        "p": args.p,
        "n_generators": pres.n_generators,
        "n_relations": pres.n_relations,
    }
    ideal = fit.fitting_ideal(pres, args.k)
    report["k"] = args.k
    report["generators"] = [g.to_json() for g in ideal.generators]
    points = [_parse_point(p, len(pres.variables)) for p in args.point or []]
    rng = Random(args.seed)
    for _ in range(args.points or 0):
        points.append(fit.random_torus_point(rng, len(pres.variables)))
    evaluated = []
    for t in points:
        evaluated.append(
            {
                "point": [str(c) for c in t],
                "member": fit.variety_membership(ideal, t),
                "coker_dim": fit.coker_dim_at(pres, t),
            }
        )
    report["points"] = evaluated
    if args.hilbert is not None:
        hf = fit.hilbert_function(pres, args.hilbert)
        report["hilbert"] = {
            "values": list(hf.values),
            "non_nilpotent": hf.positive_at_bound,
        }
    return report


def cmd_graph(args) -> dict:
    G = gr.load_graph(args.file)
    if args.action == "chromatic":
        return {
            "vertices": G.num_vertices,
            "edges": G.num_edges,
            "chromatic": gr.chromatic_polynomial(G).to_list(),
            "poincare": gr.poincare_from_chromatic(G).to_list(),
        }
    if args.action == "pi2":
        rep = gr.triangle_free_report(G)
        out = {
            "vertices": G.num_vertices,
            "edges": G.num_edges,
            "triangle_free": True,
            "pi1_rank": rep.pi1_rank,
            "betti2": rep.betti2,
            "exponents": list(rep.exponents),
            "four_cycles": [[i + 1 for i in cyc] for cyc in rep.four_cycles.cycles],
            "pi2_zero": rep.pi2_zero,
            "coinvariants_rank": rep.coinvariants_rank,
            "model": rep.model,
        }
        if rep.presentation is not None:
            out["presentation"] = _matrix_json(rep.presentation)
        return out
    # analyze
    arr = gr.graphic_arrangement(G)
    series = gr.hypersolvable_graph_series(G, budget=args.budget)
    out = {
        "vertices": G.num_vertices,
        "edges": G.num_edges,
        "triangle_free": gr.is_triangle_free(G),
        "chordal": gr.is_chordal(G),
        "chromatic": gr.chromatic_polynomial(G).to_list(),
        "poincare": gr.poincare_from_chromatic(G).to_list(),
        "hypersolvable": series is not None,
    }
    vertex_order = gr.supersolvable_series(G)
    out["supersolvable"] = vertex_order is not None
    if vertex_order is not None:
        out["vertex_order"] = list(vertex_order)
    if series is not None:
        out["length"] = series.length
        out["exponents"] = list(series.exponents)
    supers, _ = is_supersolvable(arr, budget=args.budget)
    if supers != out["supersolvable"]:
        raise RuntimeError("graph and arrangement supersolvability disagree")
    return out


def cmd_hattori(args) -> dict:
    rep = cc.hattori_model(args.n, args.l)
    out = {
        "n": rep.n,
        "skeleton": rep.skeleton,
        "aspherical": rep.aspherical,
        "vanishing_degrees": list(rep.vanishing_range),
    }
    if rep.presentation is not None:
        out["presentation"] = _matrix_json(rep.presentation)
        out["resolution_ranks"] = list(rep.resolution.ranks)
        out["resolution_length"] = rep.resolution.length
        out["pi_free"] = rep.free
        if rep.free:
            out["free_rank"] = rep.free_rank
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyparr",
        description="exact homotopy invariants of hyperplane arrangement complements",
    )
    parser.add_argument("--json", action="store_true", help="JSON output (default)")
    parser.add_argument("--text", action="store_true", help="plain text output")
    parser.add_argument("--seed", type=int, default=0, help="seed for any sampling")
    parser.add_argument("--budget", type=int, default=500_000,
                        help="node budget for series searches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an arrangement file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("hypersolv", help="composition series search")
    p.add_argument("file")
    p.set_defaults(func=cmd_hypersolv)

    p = sub.add_parser("osalg", help="graded dimensions, both algebras")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=5)
    p.set_defaults(func=cmd_osalg)

    p = sub.add_parser("connectivity", help="order of fundamental-group connectivity")
    p.add_argument("file")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("chain", help="minimal chain model, e.g. --model torus:3,wedge:2")
    p.add_argument("--model", required=True)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("fitting", help="Fitting ideal and torus-point tests")
    p.add_argument("--model", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--point", action="append",
                   help="comma-separated exact coordinates, e.g. 1,1,1,5,7")
    p.add_argument("--points", type=int, default=0, help="number of random points")
    p.add_argument("--hilbert", type=int, default=None,
                   help="graded dimensions of the filtration up to this degree")
    p.set_defaults(func=cmd_fitting)

    p = sub.add_parser("graph", help="graph pipeline")
    p.add_argument("action", choices=["analyze", "chromatic", "pi2"])
    p.add_argument("file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("hattori", help="general-position skeleton model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=cmd_hattori)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (InputError, NotHypersolvableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 3
    _emit(report, as_text=args.text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
