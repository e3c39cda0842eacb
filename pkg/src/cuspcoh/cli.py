"""Command-line front end: run, list, export, delta and probe."""
from __future__ import annotations

import argparse
import os
import sys

from .errors import GuardError, InputError, ResourceError, UnsupportedError
from .scenarios import (REGISTRY, build_space, load_scenario, report_text, run_scenario,
                        write_atomic)

FORMATS = ("edge-list", "simplex-list", "sparse-matrix")


def export_text(scenario, fmt: str) -> str:
    """Serialize the space of a scenario in one of FORMATS."""
    from .cusped import export_simplex_list
    from .graph import Graph
    from .groups import export_edge_list
    from .homology import export_triplets
    if fmt not in FORMATS:
        raise InputError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    space = build_space(scenario)
    if fmt == "edge-list":
        if not isinstance(space, Graph):
            raise InputError("edge-list export needs a graph space")
        return export_edge_list(space)
    X = _complex_of(space)
    if fmt == "simplex-list":
        return export_simplex_list(X)
    parts = []
    for k in range(1, X.dim + 1):
        parts.append(f"# boundary {k}\n" + export_triplets(X.boundary_matrix(k)))
    return "".join(parts)


def _complex_of(space):
    from .cusped import CuspedComplex
    from .graph import Graph
    from .homology import SimplicialComplex
    if isinstance(space, CuspedComplex):
        return space.full_subcomplex(space.levels(space.safe_radius))
    if isinstance(space, Graph):
        X = SimplicialComplex([(v,) for v in space.vertices()])
        for e in space.edges():
            X.add(e)
        return X
    return space.X


def _emit(args, name: str, text: str) -> None:
    if args.out:
        write_atomic(os.path.join(args.out, name), text)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    s = load_scenario(args.scenario)
    res = run_scenario(s, seed=args.seed, max_simplices=args.max_simplices, stages=args.stages)
    if args.out:
        for fname, text in sorted(res.outputs.items()):
            write_atomic(os.path.join(args.out, fname), text)
        write_atomic(os.path.join(args.out, "report.txt"), report_text(s, res))
    sys.stdout.write(report_text(s, res))
    return 0 if res.ok else 1


def cmd_list(args) -> int:
    for name in sorted(REGISTRY):
        s = load_scenario(name)
        print(f"{name}: {s.description}")
        for key, want in sorted(s.expected.items()):
            print(f"  {key} = {want}    [{s.provenance[key]}]")
    return 0


def cmd_export(args) -> int:
    s = load_scenario(args.scenario)
    text = export_text(s, args.format)
    ext = {"edge-list": "edges", "simplex-list": "simplices", "sparse-matrix": "triplets"}
    _emit(args, f"{s.name}.{ext[args.format]}", text)
    return 0


def cmd_delta(args) -> int:
    from .metric import delta_estimate
    from .scenarios import graph_of
    s = load_scenario(args.scenario)
    G = graph_of(s, build_space(s))
    seed = s.seed if args.seed is None else args.seed
    rep = delta_estimate(G, samples=args.samples, seed=seed,
                         triangle_samples=min(args.samples, 1000))
    _emit(args, "delta.txt", rep.record())
    return 0


def cmd_probe(args) -> int:
    s = load_scenario(args.scenario)
    probes = {k: v for k, v in s.tasks.items() if k in ("regularity", "local", "delta")}
    if not {"regularity", "local"} & set(probes):
        raise InputError("scenario declares no probe tasks")
    s.tasks = probes
    s.expected = {k: v for k, v in s.expected.items() if k.split("_")[0] in probes}
    res = run_scenario(s, seed=args.seed, max_simplices=args.max_simplices)
    for fname in ("regularity.csv", "local.csv"):
        if fname in res.outputs:
            _emit(args, fname, res.outputs[fname])
    return 0 if res.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cuspcoh",
                                description="Cusped spaces and compactly supported cohomology")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-simplices", type=int, default=300_000)
    common.add_argument("--out", default=None, help="directory for output files")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", parents=[common], help="run a scenario and check expectations")
    r.add_argument("scenario")
    r.add_argument("--stages", type=int, default=None, help="use only the first N radii")
    r.set_defaults(func=cmd_run)
    sub.add_parser("list", parents=[common], help="show registered scenarios").set_defaults(
        func=cmd_list)
    e = sub.add_parser("export", parents=[common], help="write the scenario space to a file")
    e.add_argument("scenario")
    e.add_argument("--format", required=True, choices=FORMATS)
    e.set_defaults(func=cmd_export)
    d = sub.add_parser("delta", parents=[common], help="hyperbolicity estimates")
    d.add_argument("scenario")
    d.add_argument("--samples", type=int, default=2000)
    d.set_defaults(func=cmd_delta)
    pr = sub.add_parser("probe", parents=[common], help="regularity and local homology probes")
    pr.add_argument("scenario")
    pr.set_defaults(func=cmd_probe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GuardError, UnsupportedError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
