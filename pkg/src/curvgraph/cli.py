"""Command-line front end: ``curvgraph gen | analyze | verify | hypersurface | sphere``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path

from . import __version__
from .functions import DegenerateLevelError, VertexFunction, parse_value, values_from_mapping
from .generators import GENERATORS
from .geometry import inductive_dimension
from .graph import (
    CliqueOverflowError,
    GraphInputError,
    SimpleGraph,
    connected_components,
    euler_characteristic,
    f_vector,
    unit_sphere,
)
from .hypersurface import complete_hypersurface, hypersurface_graph, sign_partition, sphere_hypersurface
from .morse import curvature, index_report
from .verify import CHECKS, random_functions, run_check

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def build_graph(name: str, params: list[str], seed: int | None) -> SimpleGraph:
    try:
        fn, parsers = GENERATORS[name]
    except KeyError:
        raise InputError(f"unknown family {name!r}; choose from {', '.join(GENERATORS)}") from None
    if len(params) != len(parsers):
        raise InputError(f"{name} takes {len(parsers)} parameter(s), got {len(params)}")
    try:
        args = [p(v) for p, v in zip(parsers, params)]
    except ValueError as exc:
        raise InputError(f"bad parameter for {name}: {exc}") from None
    if name == "er":
        args.append(0 if seed is None else seed)
    return fn(*args)


def load_graph(args) -> SimpleGraph:
    if args.graph and args.gen:
        raise InputError("give either --graph or --gen, not both")
    if args.graph:
        try:
            return SimpleGraph.from_json(Path(args.graph).read_text())
        except OSError as exc:
            raise InputError(str(exc)) from None
    if args.gen:
        return build_graph(args.gen[0], args.gen[1:], args.seed)
    raise InputError("an input graph is required (--graph FILE or --gen NAME ARGS)")


def _read_values(args, G: SimpleGraph) -> list:
    try:
        data = json.loads(Path(args.function).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read function file: {exc}") from None
    if isinstance(data, dict):
        return values_from_mapping(G.n, data)
    if not isinstance(data, list):
        raise InputError("function file must hold a JSON list or an {id: value} object")
    if len(data) != G.n:
        raise InputError(f"function has {len(data)} values, graph has {G.n} vertices")
    return [parse_value(v) for v in data]


def load_function(args, G: SimpleGraph, required: bool) -> VertexFunction | None:
    if args.function:
        return VertexFunction(_read_values(args, G))
    if args.seed is not None or required:
        return VertexFunction.random(G.n, random.Random(f"{_seed(args)}:function"))
    return None


def _seed(args) -> int:
    return 0 if args.seed is None else args.seed


def _config(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_gen(args) -> int:
    G = build_graph(args.family, args.params, args.seed)
    if args.format == "dot":
        emit(args, G.to_dot(args.family.replace("-", "_")))
    else:
        emit(args, json.dumps(G.to_dict(), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = load_graph(args)
    f = load_function(args, G, required=False)
    out = {
        "version": __version__,
        "config": _config(args),
        "n": G.n,
        "num_edges": G.num_edges,
        "f_vector": list(f_vector(G)),
        "chi": euler_characteristic(G),
        "dimension": str(inductive_dimension(G)),
        "curvature": {str(x): str(curvature(G, x)) for x in G.vertices()},
    }
    if f is not None:
        out["function"] = f.to_mapping()
        out["vertices"] = [row.to_dict() for row in index_report(G, f).vertices]
    emit(args, dump(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = load_graph(args)
    if args.function:
        functions = [load_function(args, G, required=True)]
    else:
        functions = random_functions(G.n, args.trials, f"{_seed(args)}:functions")
    reports = run_check(args.check, G, functions, seed=_seed(args),
                        mc_trials=args.mc_trials, d=args.dim)
    passed = all(r.passed for r in reports)
    if args.json:
        emit(args, dump({
            "version": __version__,
            "config": _config(args),
            "seed": _seed(args),
            "pass": passed,
            "reports": [r.to_dict() for r in reports],
        }))
    else:
        lines = []
        for r in reports:
            if "skipped" in r.info:
                lines.append(f"SKIP {r.check}: {r.info['skipped']}")
                continue
            status = "PASS" if r.passed else "FAIL"
            extra = f" ({r.info['reason']})" if "reason" in r.info else ""
            lines.append(f"{status} {r.check}: {len(r.details)} comparisons, "
                         f"{len(r.failures)} failures{extra}")
        lines.append(f"seed={_seed(args)} overall={'PASS' if passed else 'FAIL'}")
        emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def _summary_csv(H) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertices", "edges", "centers", "components", "chi", "f_vector"])
    w.writerow([H.graph.n, H.graph.num_edges, H.num_centers, len(connected_components(H.graph)),
                euler_characteristic(H.graph), " ".join(map(str, f_vector(H.graph)))])
    return buf.getvalue()


def cmd_hypersurface(args) -> int:
    G = load_graph(args)
    if args.sphere is not None:
        f = load_function(args, G, required=True)
        if not 0 <= args.sphere < G.n:
            raise InputError(f"sphere vertex {args.sphere} out of range")
        H = sphere_hypersurface(G, f, args.sphere, completed=args.complete)
        values = f.values
    else:
        # a level set only needs f to avoid the level, not injectivity
        values = _read_values(args, G) if args.function else load_function(args, G, True).values
        H = hypersurface_graph(sign_partition(G, values, args.level))
        if args.complete:
            H = complete_hypersurface(H)
    if H.graph.n == 0:
        print("warning: the hypersurface graph is empty (f does not change sign)", file=sys.stderr)
    if args.format == "dot":
        emit(args, H.to_dot())
    elif args.format == "csv":
        emit(args, _summary_csv(H))
    else:
        out = H.to_dict()
        out.update(version=__version__, config=_config(args),
                   function={str(v): str(val) for v, val in enumerate(values)})
        emit(args, dump(out))
    if args.out and args.format != "csv":
        Path(args.out).with_suffix(".csv").write_text(_summary_csv(H))
    return EXIT_OK


def cmd_sphere(args) -> int:
    G = load_graph(args)
    if not 0 <= args.vertex < G.n:
        raise InputError(f"vertex {args.vertex} out of range")
    S, prov = unit_sphere(G, args.vertex)
    if args.format == "dot":
        emit(args, S.to_dot("S", labels=[str(v) for v in prov]))
    else:
        out = S.to_dict()
        out["provenance"] = list(prov)
        emit(args, json.dumps(out, sort_keys=True) + "\n")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="master seed")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="recorded; computation is sequential")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--graph", help="graph JSON file")
    source.add_argument("--gen", nargs="+", metavar="NAME_OR_ARG", help="generator name and parameters")

    func = argparse.ArgumentParser(add_help=False)
    func.add_argument("--function", help="JSON list or {id: value} map of function values")

    p = argparse.ArgumentParser(prog="curvgraph", description=__doc__)
    p.add_argument("--version", action="version", version=f"curvgraph {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a generated graph")
    g.add_argument("family", help=f"one of: {', '.join(GENERATORS)}")
    g.add_argument("params", nargs="*")
    g.add_argument("--format", choices=["json", "dot"], default="json")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", parents=[common, source, func],
                       help="f-vector, Euler characteristic, dimension, curvature, indices")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common, source, func], help="run identity checks")
    v.add_argument("check", choices=list(CHECKS) + ["all"])
    v.add_argument("--trials", type=int, default=20, help="number of random functions")
    v.add_argument("--mc-trials", type=int, default=100_000, help="Monte-Carlo orderings per vertex")
    v.add_argument("--dim", type=int, default=None, help="dimension for zero-curvature")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hypersurface", parents=[common, source, func],
                       help="level-set graph G_f, A_f(x) or B_f(x)")
    h.add_argument("--level", default="0", help="level c (exact: integer, decimal or p/q)")
    h.add_argument("--sphere", type=int, default=None, metavar="X",
                   help="build inside the unit sphere of X at level f(X)")
    h.add_argument("--complete", action="store_true", help="add completion centers")
    h.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    h.set_defaults(func=cmd_hypersurface)

    s = sub.add_parser("sphere", parents=[common, source], help="unit sphere of a vertex")
    s.add_argument("vertex", type=int)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_sphere)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphInputError, DegenerateLevelError, CliqueOverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
