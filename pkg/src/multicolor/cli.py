"""Command-line front end.

Subcommands map one-to-one onto the library: wmax, check, color, enumerate,
chromatic, oncall, extend, verify.  Structured output is line-delimited
JSON on standard output; warnings and error diagnostics go to standard
error.  Exit codes: 0 success, 1 infeasible or not-permissible answer,
2 input or usage error, 3 resource limit exceeded.

Nothing here is randomized; identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chromatic import weighted_chromatic
from .coloring import Coloring, find_coloring, is_valid_coloring, iter_colorings
from .errors import (
    InstanceFormatError,
    NotPermissibleError,
    ResourceLimitExceeded,
    UnknownColorError,
)
from .extension import extend_coloring
from .instance import Graph, Instance, load_instance
from .mis import enumerate_mis
from .oncall import oncall_solutions
from .oracle import (
    DEFAULT_MAX_BRANCHES,
    brute_all_colorings,
    brute_chromatic,
    brute_colorable,
    brute_oncall,
)
from .vectors import Vec, in_hyperrectangle, support
from .wmax import DEFAULT_MAX_VECTORS, wmax, prune_dominated

VERIFY_ENUM_BRANCHES = 100_000


def _vec_line(v: Vec) -> str:
    return json.dumps(list(v))


def _names(graph: Graph, vec: Vec) -> list[str]:
    return [graph.names[i] for i in sorted(support(vec))]


def _coloring_doc(graph: Graph, coloring: Coloring) -> dict[str, list[int]]:
    return {graph.names[v]: sorted(coloring[v]) for v in range(graph.n)}


def _coloring_line(graph: Graph, coloring: Coloring) -> str:
    return json.dumps(_coloring_doc(graph, coloring))


def _load(args: argparse.Namespace) -> Instance:
    return load_instance(args.instance, args.sidecar)


def _warn_lists_ignored(inst: Instance) -> None:
    if any(inst.lists):
        print(
            "warning: the instance's color lists are ignored; "
            "this problem uses a uniform palette",
            file=sys.stderr,
        )


def _cmd_wmax(args: argparse.Namespace) -> int:
    inst = _load(args)
    ws = wmax(inst.graph, inst.lists, args.max_vectors)
    if args.emit_mis:
        for s in enumerate_mis(inst.graph):
            print(json.dumps({"mis": _names(inst.graph, s)}))
    vectors = prune_dominated(ws.vectors) if args.prune_dominated else ws.vectors
    for v in vectors:
        if args.emit_certificates:
            cert = {str(x): _names(inst.graph, s) for x, s in sorted(ws.certificates[v].items())}
            print(json.dumps({"vector": list(v), "certificate": cert}))
        else:
            print(_vec_line(v))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    inst = _load(args)
    w = inst.require_weights()
    ws = wmax(inst.graph, inst.lists, args.max_vectors)
    witness = in_hyperrectangle(w, ws.vectors)
    if witness is None:
        print("NOT PERMISSIBLE")
        return 1
    print(_vec_line(witness))
    return 0


def _cmd_color(args: argparse.Namespace) -> int:
    inst = _load(args)
    try:
        coloring = find_coloring(inst, max_vectors=args.max_vectors)
    except NotPermissibleError:
        print("not permissible: no coloring meets the demand", file=sys.stderr)
        return 1
    print(_coloring_line(inst.graph, coloring))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    inst = _load(args)
    count = 0
    for coloring in iter_colorings(inst, max_vectors=args.max_vectors):
        print(_coloring_line(inst.graph, coloring))
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    return 0 if count else 1


def _cmd_chromatic(args: argparse.Namespace) -> int:
    inst = _load(args)
    w = inst.require_weights()
    _warn_lists_ignored(inst)
    result = weighted_chromatic(inst.graph, w)
    print(json.dumps({"chi": result.chi, "lower_bound": result.lower_bound}))
    print(_coloring_line(inst.graph, result.coloring))
    return 0


def _cmd_oncall(args: argparse.Namespace) -> int:
    inst = _load(args)
    inst.require_weights()
    ws = wmax(inst.graph, inst.lists, args.max_vectors)
    for sol, witness in oncall_solutions(inst, ws):
        if args.with_colorings:
            print(
                json.dumps(
                    {"vector": list(sol), "coloring": _coloring_doc(inst.graph, witness)}
                )
            )
        else:
            print(_vec_line(sol))
    return 0


def _parse_precoloring(path: str, graph: Graph) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError(f"precoloring is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("precoloring must be a JSON object")
    index = {name: i for i, name in enumerate(graph.names)}
    sets: list[frozenset[int]] = [frozenset()] * graph.n
    for name, colors in doc.items():
        if name not in index:
            raise InstanceFormatError(f"precoloring names unknown vertex {name!r}")
        if not isinstance(colors, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) and c >= 1 for c in colors
        ):
            raise InstanceFormatError(
                f"precoloring of {name!r} must be a list of positive integers"
            )
        sets[index[name]] = frozenset(colors)
    return tuple(sets)


def _cmd_extend(args: argparse.Namespace) -> int:
    inst = _load(args)
    w = inst.require_weights()
    _warn_lists_ignored(inst)
    c0 = _parse_precoloring(args.precoloring, inst.graph)
    result = extend_coloring(
        inst.graph,
        args.base_colors,
        c0,
        w,
        compute_exact=args.exact,
        max_vectors=args.max_vectors,
        max_branches=args.max_branches,
    )
    print(json.dumps({"bound": result.bound}))
    print(_coloring_line(inst.graph, result.coloring))
    if args.exact:
        verdict = "EQUALITY" if result.exact == result.bound else "STRICT"
        print(json.dumps({"exact": result.exact, "verdict": verdict}))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _load(args)
    w = inst.require_weights()
    ws = wmax(inst.graph, inst.lists, args.max_vectors)
    failures = 0

    def report(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1

    witness = in_hyperrectangle(w, ws.vectors)
    try:
        brute_witness = brute_colorable(inst, args.max_branches)
    except ResourceLimitExceeded:
        print("SKIP permissibility")
    else:
        report("permissibility", (witness is None) == (brute_witness is None))

    try:
        expected = brute_all_colorings(inst, min(args.max_branches, VERIFY_ENUM_BRANCHES))
    except ResourceLimitExceeded:
        print("SKIP enumeration")
    else:
        got = set(iter_colorings(inst, ws))
        ok = got == expected and all(
            is_valid_coloring(inst, c).ok for c in got
        )
        report("enumeration", ok)

    try:
        brute_chi = brute_chromatic(inst.graph, w, args.max_branches)
    except ResourceLimitExceeded:
        print("SKIP chromatic")
    else:
        report("chromatic", weighted_chromatic(inst.graph, w).chi == brute_chi)

    try:
        expected_oncall = brute_oncall(inst, args.max_branches)
    except ResourceLimitExceeded:
        print("SKIP oncall")
    else:
        got_oncall = {sol for sol, _ in oncall_solutions(inst, ws)}
        report("oncall", got_oncall == expected_oncall)

    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multicolor",
        description="List multicoloring of weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="instance JSON document, or a DIMACS .col file")
        p.add_argument(
            "--sidecar",
            help="JSON sidecar supplying lists/weights for a .col instance",
        )
        p.add_argument(
            "--max-vectors",
            type=int,
            default=DEFAULT_MAX_VECTORS,
            help="cap on intermediate demand-vector sets (default %(default)s)",
        )
        p.add_argument(
            "--max-branches",
            type=int,
            default=DEFAULT_MAX_BRANCHES,
            help="cap on brute-force search branches (default %(default)s)",
        )
        p.set_defaults(func=handler)
        return p

    p = add("wmax", _cmd_wmax, "print the maximal demand vectors, one JSON array per line")
    p.add_argument(
        "--prune-dominated",
        action="store_true",
        help="drop vectors dominated by another member",
    )
    p.add_argument(
        "--emit-certificates",
        action="store_true",
        help="print each vector with its per-color independent sets",
    )
    p.add_argument(
        "--emit-mis",
        action="store_true",
        help="first print the graph's maximal independent sets",
    )

    add("check", _cmd_check, "test whether the instance's demand is satisfiable")
    add("color", _cmd_color, "print one coloring meeting the demand")

    p = add("enumerate", _cmd_enumerate, "print every coloring, one JSON object per line")
    p.add_argument("--limit", type=int, help="stop after this many colorings")

    add("chromatic", _cmd_chromatic, "smallest uniform palette meeting the demand")

    p = add("oncall", _cmd_oncall, "best satisfiable demands below the requested one")
    p.add_argument(
        "--with-colorings",
        action="store_true",
        help="print a witness coloring for each solution vector",
    )

    p = add("extend", _cmd_extend, "extend a precoloring to a larger demand")
    p.add_argument(
        "--precoloring",
        required=True,
        help="JSON file mapping vertex names to their fixed color lists",
    )
    p.add_argument(
        "--base-colors",
        type=int,
        required=True,
        help="size a0 of the palette the precoloring lives in",
    )
    p.add_argument(
        "--exact",
        action="store_true",
        help="also compute the exact optimum by brute force",
    )

    add("verify", _cmd_verify, "cross-check the solvers against brute force")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InstanceFormatError, UnknownColorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
