"""Command-line entry point.

Subcommands: build-fk, build-cayley, build-space, aut, verify,
family-check.  The requested format goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 1 verification failure or an operational
limit (oracle size, engine budget), 2 usage error (bad arguments, bad
group spec, malformed JSON).
"""

from __future__ import annotations

import argparse
import json
import sys

from .assembly import build_realization
from .automorphisms import (
    ENGINE_POINT_BUDGET,
    automorphisms,
    brute_force_automorphisms,
    hasse_digraph,
    verify_realization,
)
from .blocks import asymmetric_block, family_checks
from .digraph import (
    digraph_from_json_dict,
    digraph_to_dot,
    digraph_to_json,
    strip_colors,
)
from .groups import (
    FiniteGroup,
    cayley_graph,
    cyclic,
    dihedral,
    group_from_permutations,
    symmetric,
)
from .poset import (
    Poset,
    hasse_degree,
    level_of,
    poset_from_json_dict,
    poset_to_dot,
    poset_to_json,
)

GROUP_SPEC_HELP = (
    'group spec: "cyclic:N", "dihedral:2N", "symmetric:N", '
    '"perm:[[...],...]" (one-line images), or "@file.json"'
)


class UsageError(Exception):
    pass


def parse_group_spec(spec: str) -> FiniteGroup:
    try:
        if spec.startswith("@"):
            try:
                with open(spec[1:], encoding="utf-8") as fh:
                    data = json.load(fh)
            except OSError as exc:
                raise UsageError(f"cannot read {spec[1:]!r}: {exc}") from exc
            except json.JSONDecodeError as exc:
                raise UsageError(f"malformed JSON in {spec[1:]!r}: {exc}") from exc
            return group_from_permutations(data)
        if spec.startswith("perm:"):
            try:
                data = json.loads(spec[len("perm:"):])
            except json.JSONDecodeError as exc:
                raise UsageError(f"malformed permutation list: {exc}") from exc
            return group_from_permutations(data)
        family, _, arg = spec.partition(":")
        if not arg or not arg.lstrip("-").isdigit():
            raise UsageError(f"unknown group spec {spec!r}; {GROUP_SPEC_HELP}")
        m = int(arg)
        if family == "cyclic":
            return cyclic(m)
        if family == "dihedral":
            return dihedral(m)
        if family == "symmetric":
            return symmetric(m)
        raise UsageError(f"unknown group spec {spec!r}; {GROUP_SPEC_HELP}")
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad group spec {spec!r}: {exc}") from exc


def _level_sizes(p: Poset) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for x in p.points:
        lvl = level_of(p, x)
        sizes[lvl] = sizes.get(lvl, 0) + 1
    return dict(sorted(sizes.items()))


def _perm_cycles(perm: tuple[int, ...], names: tuple[str, ...]) -> str:
    seen: set[int] = set()
    parts = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        j = perm[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        parts.append("(" + " ".join(names[v] for v in cyc) + ")")
    return "".join(parts) if parts else "()"


# -- subcommands --------------------------------------------------------


def _cmd_build_fk(args) -> int:
    if args.k < 0:
        raise UsageError("block index must be >= 0")
    block = asymmetric_block(args.k)
    if args.format == "json":
        print(poset_to_json(block))
    elif args.format == "dot":
        print(poset_to_dot(block, name=f"block{args.k}"), end="")
    else:
        degrees = sorted(
            hasse_degree(block, x) for x in block.points if x.endswith("/bot")
        )
        sizes = _level_sizes(block)
        print(
            f"block {args.k}: {len(block.points)} points, "
            f"{len(block.covers)} covers, levels "
            + "/".join(str(sizes[l]) for l in sorted(sizes))
            + ", per-level degrees "
            + ",".join(map(str, degrees))
        )
    return 0


def _cmd_build_cayley(args) -> int:
    group = parse_group_spec(args.group)
    graph = cayley_graph(group)
    if args.format == "json":
        print(digraph_to_json(graph))
    elif args.format == "dot":
        print(digraph_to_dot(graph, name="cayley"), end="")
    else:
        colors = {c for _, _, c in graph.edges}
        print(
            f"{len(graph.vertices)} vertices, {len(graph.edges)} edges, "
            f"{len(colors)} color(s)"
        )
    return 0


def _cmd_build_space(args) -> int:
    group = parse_group_spec(args.group)
    space = build_realization(group)
    inventory = ", ".join(
        f"{count} x F{fam}" for fam, count in space.block_inventory().items()
    )
    sizes = _level_sizes(space.poset)
    summary = (
        f"blocks: {inventory}\n"
        f"points: {len(space.poset.points)}, covers: {len(space.poset.covers)}\n"
        "level sizes: "
        + " ".join(f"{lvl}:{n}" for lvl, n in sizes.items())
    )
    print(summary, file=sys.stderr)
    if args.format == "json":
        print(poset_to_json(space.poset))
    elif args.format == "dot":
        print(poset_to_dot(space.poset, name="space"), end="")
    else:
        print(summary)
    return 0


def _cmd_aut(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {args.file!r}: {exc}") from exc
    try:
        if isinstance(data, dict) and "points" in data:
            digraph = hasse_digraph(poset_from_json_dict(data))
        elif isinstance(data, dict) and "vertices" in data:
            digraph = digraph_from_json_dict(data)
        else:
            raise UsageError(
                f"{args.file!r} holds neither a poset nor a digraph JSON object"
            )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not args.color_edges:
        digraph = strip_colors(digraph)
    group = (
        brute_force_automorphisms(digraph) if args.oracle else automorphisms(digraph)
    )
    print(f"order {group.order}")
    if group.generators:
        print("generators:")
        for g in group.generators:
            print(f"  {_perm_cycles(g, digraph.vertices)}")
    else:
        print("generators: none (identity only)")
    return 0


def _cmd_verify(args) -> int:
    group = parse_group_spec(args.group)
    report = verify_realization(group, budget=args.budget)
    print(report.render())
    return 0 if report.passed else 1


def _cmd_family_check(args) -> int:
    if args.k_max < 0:
        raise UsageError("k_max must be >= 0")
    report = family_checks(args.k_max)
    print(report.render())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finspace",
        description=(
            "Finite-space toolkit: rigid two-level blocks, colored Cayley "
            "graphs, block-built realization spaces, and digraph "
            "automorphism groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = {"choices": ["json", "dot", "summary"], "default": "json"}

    p = sub.add_parser("build-fk", help="emit one block of the asymmetric family")
    p.add_argument("k", type=int, help="family index (>= 0)")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_build_fk)

    p = sub.add_parser("build-cayley", help="emit a group's colored Cayley graph")
    p.add_argument("group", help=GROUP_SPEC_HELP)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_build_cayley)

    p = sub.add_parser("build-space", help="emit a group's realization space")
    p.add_argument("group", help=GROUP_SPEC_HELP)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=_cmd_build_space)

    p = sub.add_parser("aut", help="automorphism group of a poset/digraph JSON file")
    p.add_argument("file")
    p.add_argument(
        "--color-edges",
        action="store_true",
        help="respect stored edge colors (default: treat all edges alike)",
    )
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the brute-force oracle (at most 10 vertices)",
    )
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("verify", help="run the three-part realization check")
    p.add_argument("group", help=GROUP_SPEC_HELP)
    p.add_argument(
        "--budget",
        type=int,
        default=ENGINE_POINT_BUDGET,
        help="maximum realization-space size in points",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family-check", help="check blocks 0..k_max")
    p.add_argument("k_max", type=int)
    p.set_defaults(func=_cmd_family_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
