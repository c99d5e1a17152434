"""Command-line entry point: ``fourecc <command> [graph] [options]``.

Exit codes: 0 ok, 2 bad input, 3 precondition violated, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bench import format_table, parse_sizes, run_bench
from .cuts import DEFAULT_SEED, DETERMINISTIC, MODES
from .dfs import GraphPreconditionError
from .generators import FAMILIES, generate
from .graph import GraphParseError, Multigraph, load_graph, strip_self_loops
from .oracle import brute_3cuts, brute_partition, compare, is_k_edge_connected
from .reduction import find_small_cut, four_ecc, solve_3ecc, three_ecc_labels

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4
VERIFY_LIMIT = (12, 60)


class CliError(Exception):
    def __init__(self, message: str, code: int, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _read_graph(path: str | None) -> Multigraph:
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return load_graph(text)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_INPUT) from exc
    except GraphParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_INPUT) from exc


def _require_3ecc(g: Multigraph, id_map: list[int], args) -> None:
    """Exit 3 with the offending cut (original ids) unless ``g`` looks 3-edge-connected."""
    if g.n < 2:
        return
    cut = find_small_cut(g, args.seed, args.paranoid)
    if cut is None:
        return
    edges = sorted(id_map[e] for e in cut)
    what = "graph is disconnected" if not edges else f"{len(edges)}-edge cut {edges}"
    raise CliError(f"input is not 3-edge-connected: {what}", EXIT_PRECONDITION,
                   {"error": "not 3-edge-connected", "cut": edges})


def cmd_components4(args) -> str:
    g = _read_graph(args.graph)
    comps = four_ecc(g, args.mode, args.seed, args.paranoid).classes()
    if args.format == "text":
        return "".join(" ".join(map(str, c)) + "\n" for c in comps)
    if args.format == "dot":
        lines = ["graph components {"]
        for i, c in enumerate(comps):
            lines.append(f"  subgraph cluster_{i} {{ {' '.join(f'v{v};' for v in c)} }}")
        lines += [f"  v{u} -- v{v};" for u, v in g.edges]
        return "\n".join(lines) + "\n}\n"
    return json.dumps({"components": comps}) + "\n"


def cmd_cuts3(args) -> str:
    g = _read_graph(args.graph)
    h, id_map = strip_self_loops(g)
    _require_3ecc(h, id_map, args)
    cuts = sorted(sorted(id_map[e] for e in c) for c in solve_3ecc(h, args.mode, args.seed, args.paranoid).cuts)
    if args.format == "dot":
        raise CliError("cuts3 supports --format json or text", EXIT_INPUT)
    if args.format == "text":
        return "".join(" ".join(map(str, c)) + "\n" for c in cuts)
    return json.dumps(cuts) + "\n"


def cmd_cut_tree(args) -> str:
    g = _read_graph(args.graph)
    h, id_map = strip_self_loops(g)
    _require_3ecc(h, id_map, args)
    tree = solve_3ecc(h, args.mode, args.seed, args.paranoid).tree
    if tree is None:
        doc = {"root": 0, "nodes": [{"id": 0, "vertices": list(range(g.n))}], "edges": []}
        return json.dumps(doc) + "\n" if args.format == "json" else "graph cut_tree {\n  n0;\n}\n"
    if args.format == "json":
        return tree.to_json(id_map) + "\n"
    return tree.to_dot(id_map)


def cmd_verify(args) -> tuple[str, int]:
    g = _read_graph(args.graph)
    n_max, m_max = VERIFY_LIMIT
    if (g.n > n_max or g.m > m_max) and not args.force:
        raise CliError(f"verify is brute force; n={g.n}, m={g.m} exceeds n<={n_max}, m<={m_max} "
                       "(use --force)", EXIT_INPUT)
    reports = [
        compare("components4", brute_partition(g, 4).classes(),
                four_ecc(g, args.mode, args.seed, args.paranoid).classes()),
        compare("components3", brute_partition(g, 3).classes(), three_ecc_labels(g, args.seed).classes()),
    ]
    h, id_map = strip_self_loops(g)
    if h.n >= 2 and is_k_edge_connected(h, 3):
        found = solve_3ecc(h, args.mode, args.seed, args.paranoid).cuts
        reports.append(compare("cuts3", [list(c) for c in brute_3cuts(h)], [list(c) for c in found]))
    ok = all(r.ok for r in reports)
    text = json.dumps({"ok": ok, "reports": [r.to_dict() for r in reports]}, indent=2) + "\n"
    return text, EXIT_OK if ok else EXIT_MISMATCH


def cmd_gen(args) -> str:
    try:
        g = generate(args.family, args.n, args.seed, args.degree)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    return g.to_json() + "\n" if args.format == "json" else g.to_text()


def cmd_bench(args) -> str:
    if args.family not in FAMILIES:
        raise CliError(f"unknown family {args.family!r}", EXIT_INPUT)
    try:
        sizes = parse_sizes(args.sizes)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    rows = run_bench(args.family, sizes, args.rounds, args.gen_seed, args.mode, args.seed)
    if args.format == "json":
        return json.dumps([r.to_dict() for r in rows]) + "\n"
    return format_table(rows)


def _int(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("json", "dot", "text"), default=None)
    output.add_argument("--out", help="write output here instead of stdout")
    common = argparse.ArgumentParser(add_help=False, parents=[output])
    common.add_argument("--mode", choices=MODES, default=DETERMINISTIC)
    common.add_argument("--seed", type=_int, default=DEFAULT_SEED,
                        help="hash seed for randomized steps (default 0xC0FFEE)")
    common.add_argument("--paranoid", action="store_true", help="re-verify intermediate results by search")

    parser = argparse.ArgumentParser(prog="fourecc", description="4-edge-connected components and 3-edge cuts.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, default_fmt, help_text in (
            ("components4", cmd_components4, "json", "4-edge-connected components of any multigraph"),
            ("cuts3", cmd_cuts3, "json", "all 3-edge cuts of a 3-edge-connected graph"),
            ("cut-tree", cmd_cut_tree, "dot", "cut tree of a 3-edge-connected graph"),
            ("verify", cmd_verify, "json", "compare against brute force (small graphs)")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("graph", nargs="?", help="edge-list or JSON file; stdin if omitted")
        p.set_defaults(func=func, default_format=default_fmt)
        if name == "verify":
            p.add_argument("--force", action="store_true", help="run even on large graphs")

    p = sub.add_parser("gen", parents=[output], help="print a generated graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=_int, default=0, help="generator seed")
    p.add_argument("--degree", type=int, default=3, help="random_multi degree")
    p.set_defaults(func=cmd_gen, default_format="text")

    p = sub.add_parser("bench", parents=[common], help="time cut enumeration plus cut tree")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--sizes", default="2^14..2^17", help='edge counts, e.g. "2^14..2^20" or "1000,5000"')
    p.add_argument("--rounds", type=int, default=3)
    p.add_argument("--gen-seed", type=int, default=0)
    p.set_defaults(func=cmd_bench, default_format="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    code = EXIT_OK
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, code = result
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.payload is not None:
            print(json.dumps(exc.payload))
        return exc.code
    except GraphPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
