"""Command-line interface: ``critlab <subcommand> ...``.

Graphs are read from DIMACS ``.col`` files or plain edge lists. Templates,
decompositions, Hall instances and packages are JSON files. Every subcommand
accepts ``--json``. The ``CRITLAB_SEED`` environment variable supplies the
seed when ``--seed`` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .coloring import chromatic_number
from .connectivity import is_k_connected, vertex_connectivity
from .corpus import GENERATORS, CorpusSpec, generate_corpus
from .decomposition import LightDecomposition, recolor_with_certificate
from .hall import HallInstance, min_violator, solve_sdr
from .io import chi_certificate, dumps, format_dimacs, format_edgelist, load_graph
from .numerical import sweep_csv
from .pipeline import extract_subgraph, theorem_oracle, verify_certificate
from .reduction import (
    ReductionPackage,
    boundary_search_d0,
    check_middle_range,
    check_no_large_obstruction,
    check_residual_feasibility,
    check_residual_weight_floor,
    generate_package,
    validate_package,
)
from .report import run_report
from .templates import Template, cost_k, find_respecting_coloring, is_good, is_inextensible_for

SEED_ENV = "CRITLAB_SEED"


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get(SEED_ENV, 0))


def _read_json(path):
    return json.loads(Path(path).read_text())


def _emit(args, payload: dict, text: str) -> None:
    sys.stdout.write(dumps(payload) if args.json else text.rstrip("\n") + "\n")


def cmd_chi(args):
    g = load_graph(args.graph)
    chi, col = chromatic_number(g)
    cert = chi_certificate(chi, col, vertex_connectivity(g))
    _emit(args, cert, f"chi = {chi}\nconnectivity = {cert['connectivity']}\ncoloring = {cert['coloring']}")
    return 0


def cmd_connectivity(args):
    g = load_graph(args.graph)
    kappa = vertex_connectivity(g)
    payload = {"n": g.n, "connectivity": kappa}
    text = f"connectivity = {kappa}"
    if args.k is not None:
        payload["k"] = args.k
        payload["k_connected"] = is_k_connected(g, args.k)
        text += f"\n{args.k}-connected: {payload['k_connected']}"
    _emit(args, payload, text)
    return 0


def cmd_respect(args):
    g = load_graph(args.graph)
    t = Template.from_dict(_read_json(args.template))
    col = find_respecting_coloring(g, t)
    payload = {"coloring": None if col is None else {str(v): c for v, c in col.items()}}
    text = "no respecting coloring" if col is None else f"coloring = {[col[v] for v in g.vertices]}"
    if args.k is not None:
        payload.update(
            k=args.k,
            cost=cost_k(t, args.k).cost,
            good=is_good(t, args.k),
            inextensible=is_inextensible_for(g, t, args.k),
        )
        text += f"\ncost_{args.k} = {payload['cost']}, good = {payload['good']}, inextensible = {payload['inextensible']}"
    _emit(args, payload, text)
    return 0 if col is not None else 1


def cmd_recolor(args):
    g = load_graph(args.graph)
    t = Template.from_dict(_read_json(args.template))
    d = LightDecomposition.from_dict(_read_json(args.decomposition), k=args.k)
    rc = recolor_with_certificate(g, t, d)
    cert = rc.certificate()
    _emit(args, cert, f"coloring = {[rc.coloring[v] for v in g.vertices]}\nbudget = {cert['budget']}")
    return 0


def cmd_hall(args):
    inst = HallInstance.from_dict(_read_json(args.instance))
    res = solve_sdr(inst)
    payload = res.to_dict()
    if args.min and not res.feasible:
        payload["min_violator"] = sorted(min_violator(inst))
    if res.feasible:
        text = f"feasible; sdr = {res.sdr}"
    else:
        text = f"infeasible; deficiency {res.deficiency}; violator = {sorted(res.violator)}"
        if "min_violator" in payload:
            text += f"; smallest violator = {payload['min_violator']}"
    _emit(args, payload, text)
    return 0 if res.feasible else 1


def cmd_validate_package(args):
    pkg = ReductionPackage.from_dict(_read_json(args.package))
    rep = validate_package(pkg)
    payload = {"validation": rep.to_dict()}
    lines = [f"{c}: {'FAIL' if c in rep.failures else 'ok'}" for c in rep.to_dict()["clauses"]]
    if len(pkg.I) <= 20:
        mid = check_middle_range(pkg)
        payload["middle_range"] = mid.to_dict()
        lines.append(f"middle-size violators: {len(mid.meets_I1) + len(mid.inside_I0)}")
    payload["residual_weight_floor_failures"] = check_residual_weight_floor(pkg) if rep.passed else None
    if pkg.J is not None:
        try:
            payload["no_large_obstruction"] = check_no_large_obstruction(pkg)
        except ValueError as exc:
            payload["no_large_obstruction"] = str(exc)
        lines.append(f"no large violator: {payload['no_large_obstruction']}")
    if pkg.d >= 1:
        verdict = check_residual_feasibility(pkg)
        payload["residual"] = verdict.to_dict()
        lines.append(f"residual lists feasible: {verdict.feasible}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.passed else 1


def cmd_sample_package(args):
    pkg = generate_package(args.k, args.d, _seed(args))
    _emit(args, pkg.to_dict(), dumps(pkg.to_dict()))
    return 0


def cmd_sweep(args):
    res, text = sweep_csv(args.kmax, args.dmax)
    if args.csv:
        Path(args.csv).write_text(text)
    summary = res.summary()
    _emit(
        args,
        summary,
        f"instances = {res.instances}\ncounterexamples = {len(res.counterexamples)}\n"
        f"dichotomy failures = {len(res.dichotomy_failures)}",
    )
    return 0 if res.ok else 1


def cmd_boundary(args):
    seed = _seed(args)
    reports = [boundary_search_d0(k, args.samples, seed) for k in range(1, args.kmax + 1)]
    lines = [f"k={r['k']}: sampled {r['sampled']}, violating {r['hall_bad_found']}" for r in reports]
    _emit(args, {"reports": reports}, "\n".join(lines))
    return 0


def cmd_extract(args):
    g = load_graph(args.graph)
    cert = extract_subgraph(g, args.k, args.m)
    problems = verify_certificate(g, cert)
    payload = {"certificate": cert.to_dict(), "verified": not problems, "problems": problems}
    _emit(
        args,
        payload,
        f"H = {list(cert.vertices)} ({cert.method})\nchi(H) = {cert.chi_H}, connectivity = {cert.connectivity}\n"
        f"verified: {not problems}",
    )
    return 0 if not problems else 2


def cmd_oracle(args):
    g = load_graph(args.graph)
    found = theorem_oracle(g, args.k, args.m)
    payload = {"k": args.k, "m": args.m, "vertices": None if found is None else sorted(found[1])}
    _emit(args, payload, "none" if found is None else f"H = {payload['vertices']}")
    return 0 if found is not None else 1


def cmd_corpus(args):
    params = {}
    for key in ("n", "r", "p", "iterations", "parts", "leaves"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    spec = CorpusSpec(args.name, params, _seed(args))
    g = generate_corpus(spec)
    text = format_dimacs(g) if args.format == "dimacs" else format_edgelist(g)
    if args.out:
        Path(args.out).write_text(text)
    payload = {"spec": spec.to_dict(), "n": g.n, "m": g.m, "edges": [list(e) for e in g.sorted_edges()]}
    _emit(args, payload, f"wrote {args.out}" if args.out else text)
    return 0


def cmd_report(args):
    bundle, status = run_report(args.config)
    text = dumps(bundle)
    if args.out:
        Path(args.out).write_text(text)
    s = bundle["summary"]
    _emit(args, bundle, f"{s['passed']}/{s['total']} items passed")
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")

    parser = argparse.ArgumentParser(prog="critlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="exact chromatic number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("connectivity", parents=[common], help="vertex connectivity")
    p.add_argument("graph")
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("respect", parents=[common], help="coloring respecting a template")
    p.add_argument("graph")
    p.add_argument("template")
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_respect)

    p = sub.add_parser("recolor", parents=[common], help="complete a template from a light decomposition")
    p.add_argument("graph")
    p.add_argument("template")
    p.add_argument("decomposition")
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_recolor)

    p = sub.add_parser("hall", parents=[common], help="distinct representatives or a violator")
    p.add_argument("instance")
    p.add_argument("--min", action="store_true", help="also report a smallest violator")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("validate-package", parents=[common], help="check a reduction package")
    p.add_argument("package")
    p.set_defaults(func=cmd_validate_package)

    p = sub.add_parser("sample-package", parents=[common, seeded], help="sample a valid reduction package")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_sample_package)

    p = sub.add_parser("sweep-numerical", parents=[common], help="exhaustive numerical-lemma sweep")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--csv", help="write every instance to this CSV file")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("boundary-d0", parents=[common, seeded], help="explore packages at |C| = 3k-1")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("extract", parents=[common], help="certified connected high-chromatic subgraph")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive search for a certified subgraph")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", parents=[common, seeded], help="generate a test graph")
    p.add_argument("name", choices=GENERATORS)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--iterations", type=int)
    p.add_argument("--parts", type=int, nargs="+")
    p.add_argument("--leaves", type=int)
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("report", parents=[common], help="run a battery from a JSON config")
    p.add_argument("config")
    p.add_argument("--out", help="write the bundle here")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"critlab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
