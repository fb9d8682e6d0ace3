"""Command-line front end.

Subcommands:

    diagrams    enumerate or count Cauchon diagrams on a shape
    hprime      kernel minors (optionally the minimal basis) of a diagram
    generators  path-sum generator matrix of a diagram at a threshold
    minor       evaluate one quantum minor against a diagram
    graph       DOT export of a Cauchon graph
    verify      run a verification suite

Diagrams are written inline as '#'/'.' rows joined by '/'.  All structured
output is JSON with a schema version field; exit codes are 0 on success, 1
on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cauchon import (
    Diagram,
    build_graph,
    cauchon_violations,
    enumerate_cauchon_diagrams,
    export_dot,
    generator_matrix,
)
from .torus import Shape
from .minors import HPrimeHandle, MinorSpec, lindstrom_eval, minor_in_kernel, minor_poly, sigma
from .groebner import hprime_minors, minimal_groebner
from .verify import SUITES, run_groebner

SCHEMA = 1


class UsageError(Exception):
    pass


def _shape(args) -> Shape:
    try:
        return Shape(args.m, args.n, relaxed=getattr(args, "relaxed", False))
    except ValueError as exc:
        raise UsageError(str(exc))


def _diagram(args, shape: Shape) -> Diagram:
    if args.diagram_file:
        with open(args.diagram_file) as fh:
            text = fh.read()
    elif args.diagram:
        text = args.diagram
    else:
        raise UsageError("a diagram is required (--diagram or --diagram-file)")
    try:
        d = Diagram.from_text(text, relaxed=shape.relaxed)
    except ValueError as exc:
        raise UsageError(str(exc))
    if d.shape != shape:
        raise UsageError(
            f"diagram is {d.shape.m}x{d.shape.n}, expected {shape.m}x{shape.n}"
        )
    bad = cauchon_violations(d)
    if bad:
        raise UsageError(
            f"not a Cauchon diagram: black square at {bad[0]} has white "
            "squares both above and to its left"
        )
    return d


def _threshold(args, shape: Shape) -> int:
    t = args.t if args.t is not None else shape.mn
    if not 1 <= t <= shape.mn:
        raise UsageError(f"threshold {t} outside [1, {shape.mn}]")
    return t


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_diagrams(args) -> int:
    shape = _shape(args)
    if shape.mn > args.cap:
        raise UsageError(
            f"shape has {shape.mn} squares, above the cap {args.cap} "
            "(raise with --cap)"
        )
    diagrams = list(enumerate_cauchon_diagrams(shape))
    if args.count_only:
        _emit(
            args,
            {"schema": SCHEMA, "m": shape.m, "n": shape.n, "count": len(diagrams)},
            [str(len(diagrams))],
        )
        return 0
    payload = {
        "schema": SCHEMA,
        "m": shape.m,
        "n": shape.n,
        "count": len(diagrams),
        "diagrams": [d.to_inline() for d in diagrams],
    }
    lines = []
    for d in diagrams:
        lines.append(d.to_text())
        lines.append("")
    _emit(args, payload, lines)
    return 0


def cmd_hprime(args) -> int:
    shape = _shape(args)
    d = _diagram(args, shape)
    t = _threshold(args, shape)
    handle = HPrimeHandle(d, t)
    if args.minimal:
        if t != shape.mn:
            raise UsageError("--minimal is defined at the top threshold t = m*n only")
        specs = minimal_groebner(handle)
        bare = []
    else:
        specs, bare = hprime_minors(handle)
    payload = {
        "schema": SCHEMA,
        "diagram": d.to_inline(),
        "t": t,
        "minimal": bool(args.minimal),
        "minors": [str(s) for s in specs],
        "generators": [list(c) for c in bare],
    }
    lines = [str(s) for s in specs] + [f"x[{i},{j}]" for i, j in bare]
    _emit(args, payload, lines)
    return 0


def cmd_generators(args) -> int:
    shape = _shape(args)
    d = _diagram(args, shape)
    t = _threshold(args, shape)
    X = generator_matrix(build_graph(d), t)
    payload = {
        "schema": SCHEMA,
        "diagram": d.to_inline(),
        "t": t,
        "matrix": [[x.to_json() for x in row] for row in X],
    }
    lines = []
    for i, row in enumerate(X, start=1):
        for j, x in enumerate(row, start=1):
            lines.append(f"x[{i},{j}] = {x!r}")
    _emit(args, payload, lines)
    return 0


def cmd_minor(args) -> int:
    shape = _shape(args)
    d = _diagram(args, shape)
    t = _threshold(args, shape)
    handle = HPrimeHandle(d, t)
    try:
        spec = MinorSpec.parse(args.spec)
        spec.check_in_shape(shape)
    except ValueError as exc:
        raise UsageError(str(exc))
    value = sigma(handle, minor_poly(shape, t, spec))
    payload = {
        "schema": SCHEMA,
        "diagram": d.to_inline(),
        "t": t,
        "minor": str(spec),
        "value": value.to_json(),
        "zero": value.is_zero(),
    }
    lines = [f"{spec} = {value!r}"]
    if spec.max_coord <= handle.rs:
        via_paths = lindstrom_eval(handle, spec)
        payload["path_sum"] = via_paths.to_json()
        payload["in_kernel"] = minor_in_kernel(handle, spec)
        lines.append(f"path sum = {via_paths!r}")
        lines.append(f"in kernel: {payload['in_kernel']}")
    _emit(args, payload, lines)
    return 0


def cmd_graph(args) -> int:
    shape = _shape(args)
    d = _diagram(args, shape)
    dot = export_dot(build_graph(d))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def cmd_verify(args) -> int:
    max_m, max_n = args.max
    if args.suite == "groebner" and args.diagram:
        d = Diagram.from_text(args.diagram)
        if cauchon_violations(d):
            raise UsageError("verify groebner needs a Cauchon diagram")
        reports = [
            run_groebner(samples=args.samples, seed=args.seed, diagram=d, t=args.t)
        ]
    elif args.suite == "all":
        reports = [
            SUITES["relations"](max_m, max_n),
            SUITES["lindstrom"](max_m, max_n),
            SUITES["ddalg"](max_m, max_n, samples=args.samples, seed=args.seed),
            SUITES["groebner"](max_m, max_n, samples=args.samples, seed=args.seed),
        ]
    else:
        suite = SUITES[args.suite]
        if args.suite in ("ddalg", "groebner"):
            reports = [suite(max_m, max_n, samples=args.samples, seed=args.seed)]
        else:
            reports = [suite(max_m, max_n)]
    payload = {
        "schema": SCHEMA,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.suite}: {status} ({r.checks} checks, {r.elapsed:.1f}s)")
            for f in r.failures[:5]:
                print(f"  witness: {f}")
    return 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# parser


def _add_shape_args(p):
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)


def _add_diagram_args(p):
    p.add_argument("--diagram", help="inline rows of '#'/'.' joined by '/'")
    p.add_argument("--diagram-file", help="file holding the diagram text")
    p.add_argument("-t", type=int, default=None,
                   help="threshold in [1, m*n]; default m*n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qmpaths",
        description="Quantum matrices by lattice paths: diagrams, graphs, "
        "minors, and torus-invariant-prime Groebner bases.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagrams", help="enumerate Cauchon diagrams")
    _add_shape_args(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--relaxed", action="store_true",
                   help="allow shapes with m = 1 or n = 1")
    p.add_argument("--cap", type=int, default=16,
                   help="refuse shapes with more squares than this")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_diagrams)

    p = sub.add_parser("hprime", help="kernel minors of a diagram")
    _add_shape_args(p)
    _add_diagram_args(p)
    p.add_argument("--minimal", action="store_true",
                   help="minimal basis (top threshold only)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_hprime)

    p = sub.add_parser("generators", help="generator matrix at a threshold")
    _add_shape_args(p)
    _add_diagram_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("minor", help="evaluate one quantum minor")
    _add_shape_args(p)
    _add_diagram_args(p)
    p.add_argument("--spec", required=True, help='e.g. "[1,2|1,3]"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("graph", help="DOT export of the Cauchon graph")
    _add_shape_args(p)
    _add_diagram_args(p)
    p.add_argument("-o", "--output", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["relations", "lindstrom", "ddalg",
                                     "groebner", "all"])
    p.add_argument("--max", nargs=2, type=int, default=[3, 3],
                   metavar=("M", "N"))
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--diagram", help="restrict groebner suite to one diagram")
    p.add_argument("-t", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
