"""Command-line interface.

Every data subcommand prints one JSON report to stdout (or --output): the
command name, a digest of the inputs, the field the computation ran over,
the seed where randomness is involved, and the results.  Reports are
byte-stable for fixed inputs and seed; wall-clock data appears only under
--timings (as a decimal string — reports carry no floats).  All fractional
numerics are exact rational strings.

Exit codes: 0 success, 2 malformed input, 3 precondition violation,
4 budget/guard exhausted, 5 internal invariant failure (1 for anything else).
`verify` prints one line per suite instead and exits 0 only if all pass.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import List, Optional

from .algebra import QuiverAlgebra, corner_algebra, enumerate_bricks, preprojective_algebra
from .arrangement import (
    ChamberGraph,
    atom_length,
    atoms_from,
    graph_to_dot,
    graph_to_json_obj,
    hyperplanes_from,
    longest_atom,
)
from .derived import hom_table
from .dynkin import parse_dynkin, primitive_restricted_roots, restrict_roots
from .errors import ParseError, SmckitError
from .formats import (
    algebra_from_json_obj,
    load_complex,
    load_smc,
    read_json_file,
    save_smc,
    smc_to_json_obj,
)
from .smc import complete_semibrick, left_mutate, narrow, right_mutate, smc_bounds, standard_smc, validate
from . import suites as suites_mod


def _digest(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()[:16]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _parse_algebra(spec: str) -> QuiverAlgebra:
    """`preproj:A3` and `path:A2` build algebras from a Dynkin string (with
    an optional deleted set, e.g. `preproj:A3:I=2`, taken as a corner);
    anything else is a JSON file path."""
    if spec.startswith("preproj:") or spec.startswith("path:"):
        kind, _, rest = spec.partition(":")
        diagram, deleted = parse_dynkin(rest)
        if kind == "preproj":
            alg = preprojective_algebra(diagram)
        else:
            arrows = [(f"a{u}_{v}", u, v) for u, v in diagram.edges]
            alg = QuiverAlgebra(diagram.vertices, arrows, [])
        if deleted:
            alg = corner_algebra(alg, deleted)
        return alg
    return algebra_from_json_obj(read_json_file(spec))


def _alg_input(spec: str):
    if spec.startswith("preproj:") or spec.startswith("path:"):
        return spec
    return {"file": spec, "sha256": _digest(spec)}


def _file_input(path: str) -> dict:
    return {"file": path, "sha256": _digest(path)}


def _smc_arg(text: str, alg: QuiverAlgebra):
    """An smc argument is a JSON file path, or the word `standard`."""
    if text == "standard":
        return standard_smc(alg), "standard"
    return load_smc(text, alg), _file_input(text)


REPORT_KEY_ORDER = ("command", "inputs", "seed", "field", "results", "report_files", "elapsed")


def _emit(args, report: dict, t0: float) -> None:
    report.setdefault("field", "Q")
    if args.timings:
        report["elapsed"] = f"{time.perf_counter() - t0:.3f}"
    report = {k: report[k] for k in REPORT_KEY_ORDER if k in report}
    text = json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand bodies


def cmd_roots(args) -> int:
    t0 = time.perf_counter()
    diagram, deleted = parse_dynkin(args.dynkin)
    roots = diagram.positive_roots()
    report = {
        "command": "roots",
        "inputs": {"dynkin": args.dynkin},
        "results": {
            "diagram": repr(diagram),
            "deleted": deleted,
            "count": len(roots),
            "positive_roots": [list(r) for r in roots],
        },
    }
    _emit(args, report, t0)
    return 0


def cmd_restrict(args) -> int:
    t0 = time.perf_counter()
    diagram, deleted = parse_dynkin(args.dynkin)
    rr = restrict_roots(diagram, deleted)
    prim = primitive_restricted_roots(rr)
    report = {
        "command": "restrict",
        "inputs": {"dynkin": args.dynkin},
        "results": {
            "kept_nodes": [v for v in diagram.vertices if v not in set(deleted)],
            "restricted": [
                {"coords": list(r.coords), "witness": list(r.witness)} for r in rr
            ],
            "primitives": [list(r.coords) for r in prim],
        },
    }
    _emit(args, report, t0)
    return 0


def cmd_arrangement(args) -> int:
    t0 = time.perf_counter()
    diagram, deleted = parse_dynkin(args.dynkin)
    normals = hyperplanes_from(restrict_roots(diagram, deleted))
    graph = ChamberGraph(normals)
    results = graph_to_json_obj(graph)
    results["hyperplanes"] = [list(n) for n in graph.normals]
    plus = graph.chamber_index((1,) * len(graph.normals))
    atoms = sorted(atoms_from(graph, plus),
                   key=lambda a: (atom_length(graph, a), a.target))
    results["atoms_from_plus_chamber"] = [
        {"target": a.target, "length": atom_length(graph, a)} for a in atoms]
    results["longest_atom"] = {
        "target": longest_atom(graph, plus).target,
        "length": len(graph.normals),
    }
    report = {
        "command": "arrangement",
        "inputs": {"dynkin": args.dynkin},
        "results": results,
    }
    extras: List[str] = []
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(graph_to_dot(graph) + "\n")
        extras.append(args.dot)
    if args.report_dir:
        from .report import write_arrangement_report
        extras.extend(os.path.join(args.report_dir, f) for f in
                      write_arrangement_report(args.report_dir, graph, label=args.dynkin))
    if extras:
        report["report_files"] = extras
    _emit(args, report, t0)
    return 0


def cmd_hom(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    x = load_complex(args.x, alg)
    y = load_complex(args.y, alg)
    if args.shift is not None:
        lo = hi = args.shift
    else:
        lo, hi = args.lo, args.hi
    table = hom_table(x, y, lo, hi)
    report = {
        "command": "hom",
        "inputs": {"algebra": _alg_input(args.algebra),
                   "x": _file_input(args.x), "y": _file_input(args.y)},
        "results": {"dims": {str(n): table[n] for n in sorted(table)}},
    }
    _emit(args, report, t0)
    return 0


def cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    x = load_complex(args.x, alg)
    U, smc_echo = _smc_arg(args.smc, alg)
    a, b = smc_bounds(x, U)
    report = {
        "command": "bounds",
        "inputs": {"algebra": _alg_input(args.algebra),
                   "x": _file_input(args.x), "smc": smc_echo},
        "results": {"bounds": [a, b]},
    }
    _emit(args, report, t0)
    return 0


def _parse_bound(text: str, alg: QuiverAlgebra) -> dict:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"--bound expects integers, got {text!r}") from exc
    if len(parts) == 1:
        parts = parts * len(alg.vertices)
    if len(parts) != len(alg.vertices):
        raise ParseError(
            f"--bound has {len(parts)} entries for {len(alg.vertices)} vertices")
    return dict(zip(alg.vertices, parts))


def cmd_brick_scan(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    bound = _parse_bound(args.bound, alg)
    census = enumerate_bricks(alg, bound, args.field)
    report = {
        "command": "brick-scan",
        "inputs": {"algebra": _alg_input(args.algebra), "bound": args.bound},
        "field": f"F{args.field}",
        "results": {
            "census": [{"dim_vector": list(vec), "count": n} for vec, n in census],
            "total": sum(n for _, n in census),
        },
    }
    if args.report_dir:
        from .report import write_brick_report
        names = write_brick_report(
            args.report_dir, census,
            label=args.algebra.replace(":", "-").replace("/", "-"))
        report["report_files"] = [os.path.join(args.report_dir, f) for f in names]
    _emit(args, report, t0)
    return 0


def cmd_mutate(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    U, smc_echo = _smc_arg(args.smc, alg)
    fn = left_mutate if args.dir == "L" else right_mutate
    V = fn(U, args.at, verify=not args.no_verify)
    if args.save:
        save_smc(args.save, V)
    report = {
        "command": "mutate",
        "inputs": {"algebra": _alg_input(args.algebra), "smc": smc_echo,
                   "at": args.at, "dir": args.dir},
        "results": {
            "collection": smc_to_json_obj(V),
            "valid": validate(V).ok,
        },
    }
    if args.save:
        report["report_files"] = [args.save]
    _emit(args, report, t0)
    return 0


def cmd_narrow(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    x = load_complex(args.x, alg)
    U, smc_echo = _smc_arg(args.smc, alg)
    kw = {}
    if args.budget is not None:
        kw["total_limit"] = args.budget
    V, path = narrow(x, U, **kw)
    if args.save:
        save_smc(args.save, V)
    report = {
        "command": "narrow",
        "inputs": {"algebra": _alg_input(args.algebra),
                   "x": _file_input(args.x), "smc": smc_echo},
        "results": {
            "path": {"steps": [[i, d] for i, d in path.steps], "shift": path.shift},
            "collection": smc_to_json_obj(V),
            "bounds": list(smc_bounds(x, V)),
        },
    }
    if args.save:
        report["report_files"] = [args.save]
    _emit(args, report, t0)
    return 0


def cmd_complete(args) -> int:
    t0 = time.perf_counter()
    alg = _parse_algebra(args.algebra)
    x = load_complex(args.x, alg)
    kw = {}
    if args.budget is not None:
        kw["max_nodes"] = args.budget
    C = complete_semibrick(x, **kw)
    from .smc import _containment
    report = {
        "command": "complete",
        "inputs": {"algebra": _alg_input(args.algebra), "x": _file_input(args.x)},
        "results": {
            "collection": smc_to_json_obj(C),
            "members": len(C.objects),
            "containing_members": _containment(x, C),
        },
    }
    if args.save:
        save_smc(args.save, C)
        report["report_files"] = [args.save]
    _emit(args, report, t0)
    return 0


def cmd_verify(args) -> int:
    names = list(suites_mod.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = suites_mod.run_suite(name, seed=args.seed)
        print(res.line())
        if not res.ok:
            ok = False
            for c in res.checks:
                if not c.ok:
                    print(f"    {c!r}")
    print(f"{'OK' if ok else 'FAILED'}: {len(names)} suite(s)")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="smckit",
        description="Exact computations with restricted root systems, chamber "
                    "arrangements, and simple-minded collections.")
    p.add_argument("--seed", type=int, default=0, help="seed for seeded suites")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock data in the report (not byte-stable)")
    p.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="cmd", required=True)

    def dynkin_cmd(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("dynkin", help="diagram with optional deleted node set, "
                                       "e.g. A3, D5:I=1,3,5, A2:I=")
        return sp

    dynkin_cmd("roots", "positive roots of an ADE diagram").set_defaults(fn=cmd_roots)
    dynkin_cmd("restrict", "restricted roots for a deleted node set").set_defaults(fn=cmd_restrict)
    sp = dynkin_cmd("arrangement", "chamber graph and atoms of the restricted-root hyperplanes")
    sp.add_argument("--dot", help="also write the chamber graph in DOT format here")
    sp.add_argument("--report-dir", help="write chambers.csv / graph.dot / figures here")
    sp.set_defaults(fn=cmd_arrangement)

    ALG_HELP = ("algebra: preproj:A3, path:A2, preproj:A3:I=2 (corner), "
                "or a JSON file")
    SMC_HELP = "collection JSON file, or the word `standard`"

    sp = sub.add_parser("hom", help="shifted Hom dimensions between two complexes")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("x", help="source complex JSON")
    sp.add_argument("y", help="target complex JSON")
    sp.add_argument("--shift", type=int, default=None,
                    help="single shift n: report dim Hom(x, y[n])")
    sp.add_argument("--lo", type=int, default=-4, help="lowest shift (default -4)")
    sp.add_argument("--hi", type=int, default=4, help="highest shift (default 4)")
    sp.set_defaults(fn=cmd_hom)

    sp = sub.add_parser("bounds", help="window of a complex relative to a collection")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("x", help="complex JSON")
    sp.add_argument("--smc", default="standard", help=SMC_HELP)
    sp.set_defaults(fn=cmd_bounds)

    sp = sub.add_parser("brick-scan", help="count bricks per dimension vector over F_p")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("--bound", default="2",
                    help="per-vertex dimension caps d1,d2,... (one integer = same cap everywhere)")
    sp.add_argument("--field", type=int, default=2, help="prime p (default 2)")
    sp.add_argument("--report-dir", help="write bricks.csv and a bar figure here")
    sp.set_defaults(fn=cmd_brick_scan)

    sp = sub.add_parser("mutate", help="left/right mutation of a collection at one member")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("smc", help=SMC_HELP)
    sp.add_argument("--at", type=int, required=True, help="member index (1-based)")
    sp.add_argument("--dir", choices=("L", "R"), required=True, help="direction")
    sp.add_argument("--no-verify", action="store_true",
                    help="skip the postcondition checks")
    sp.add_argument("--save", help="also write the mutated collection JSON here")
    sp.set_defaults(fn=cmd_mutate)

    sp = sub.add_parser("narrow", help="mutate a collection until a complex lands in its heart")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("x", help="complex JSON")
    sp.add_argument("--smc", default="standard", help=SMC_HELP + " (starting collection)")
    sp.add_argument("--budget", type=int, help="total mutation guard")
    sp.add_argument("--save", help="also write the witness collection JSON here")
    sp.set_defaults(fn=cmd_narrow)

    sp = sub.add_parser("complete", help="extend a semibrick complex to a full collection")
    sp.add_argument("algebra", help=ALG_HELP)
    sp.add_argument("x", help="complex JSON")
    sp.add_argument("--budget", type=int, help="search node budget")
    sp.add_argument("--save", help="also write the completed collection JSON here")
    sp.set_defaults(fn=cmd_complete)

    sp = sub.add_parser("verify", help="run the named self-check suite (or all)")
    sp.add_argument("suite", nargs="?", default="all",
                    help="one of: " + ", ".join(suites_mod.SUITES) + ", all")
    sp.set_defaults(fn=cmd_verify)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SmckitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
