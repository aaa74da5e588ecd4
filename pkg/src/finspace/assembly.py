"""Splicing posets together out of blocks.

Two primitives: replacing a single point of a poset by a whole block, and
assembling a set of named blocks along block-level connections, where a
connection draws a complete bipartite set of covers from the last level
of the lower block to the first level of the upper block.

On top of these sits ``build_realization``: given a finite group with
generators, it lays one degree-0 block per group element and, per colored
Cayley edge, one edge block plus two flanking second-story blocks whose
family indices encode the edge color and its orientation.  The resulting
four-level poset is minimal and its Hasse-digraph automorphism group
reproduces the group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import asymmetric_block
from .groups import FiniteGroup
from .poset import Poset, make_poset


@dataclass(frozen=True)
class BlockPlan:
    """Named blocks plus directed block-level connections (lower, upper)."""

    blocks: dict[str, Poset]
    connections: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        for lo, hi in self.connections:
            if lo not in self.blocks or hi not in self.blocks:
                raise ValueError(f"connection ({lo!r}, {hi!r}) names an unknown block")
        # Kahn's algorithm over block names; leftovers mean a cycle.
        succs: dict[str, list[str]] = {b: [] for b in self.blocks}
        indeg = {b: 0 for b in self.blocks}
        for lo, hi in self.connections:
            succs[lo].append(hi)
            indeg[hi] += 1
        ready = [b for b, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            b = ready.pop()
            seen += 1
            for nxt in succs[b]:
                indeg[nxt] -= 1
                if indeg[nxt] == 0:
                    ready.append(nxt)
        if seen != len(self.blocks):
            raise ValueError("cyclic block connections")


def first_level(p: Poset) -> tuple[str, ...]:
    """Points at level 1."""
    return tuple(x for i, x in enumerate(p.points) if p._levels[i] == 1)


def last_level(p: Poset) -> tuple[str, ...]:
    """Points at the maximal level (not the same as maximal points)."""
    if not p.points:
        return ()
    top = max(p._levels)
    return tuple(x for i, x in enumerate(p.points) if p._levels[i] == top)


def block_replace(x_space: Poset, x: str, block: Poset) -> Poset:
    """Replace the point x by an entire block.

    Former in-covers of x are rewired to every first-level point of the
    block, former out-covers to every last-level point.  Block point names
    must not collide with the remaining points; the covering property is
    re-validated by construction of the result.
    """
    if x not in x_space._index:
        raise KeyError(f"no such point: {x!r}")
    if not block.points:
        raise ValueError("empty block")
    remaining = set(x_space.points) - {x}
    clash = remaining & set(block.points)
    if clash:
        raise ValueError(f"block points collide with host points: {sorted(clash)!r}")

    firsts = first_level(block)
    lasts = last_level(block)
    points: list[str] = []
    for p in x_space.points:
        if p == x:
            points.extend(block.points)
        else:
            points.append(p)
    covers: set[tuple[str, str]] = set(block.covers)
    for a, b in x_space.covers:
        if a != x and b != x:
            covers.add((a, b))
        elif b == x:
            covers.update((a, f) for f in firsts)
        elif a == x:
            covers.update((l, b) for l in lasts)
    return make_poset(points, covers)


def assemble(plan: BlockPlan) -> Poset:
    """Disjoint union of the blocks, points prefixed "<block>/", plus the
    complete bipartite covers demanded by each connection."""
    points: list[str] = []
    covers: set[tuple[str, str]] = set()
    for bname, block in plan.blocks.items():
        points.extend(f"{bname}/{p}" for p in block.points)
        covers.update((f"{bname}/{a}", f"{bname}/{b}") for a, b in block.covers)
    for lo, hi in sorted(plan.connections):
        tops = last_level(plan.blocks[lo])
        bottoms = first_level(plan.blocks[hi])
        covers.update((f"{lo}/{a}", f"{hi}/{b}") for a in tops for b in bottoms)
    return make_poset(points, covers)


@dataclass(frozen=True)
class BlockInfo:
    """Provenance of one assembled point: which block it came from.

    kind is "vertex", "edge", "start" or "end"; element is the group
    element for vertex blocks and the edge's source element otherwise;
    target is the edge's endpoint (None for vertex blocks)."""

    kind: str
    family: int
    block: str
    element: str
    color: int | None
    target: str | None


@dataclass(frozen=True)
class RealizationSpace:
    poset: Poset
    provenance: dict[str, BlockInfo]
    group: FiniteGroup

    def __post_init__(self) -> None:
        if set(self.provenance) != set(self.poset.points):
            raise ValueError("provenance must cover exactly the assembled points")

    def block_inventory(self) -> dict[int, int]:
        """Count of blocks per family index."""
        blocks: dict[str, int] = {}
        for info in self.provenance.values():
            blocks[info.block] = info.family
        counts: dict[int, int] = {}
        for fam in blocks.values():
            counts[fam] = counts.get(fam, 0) + 1
        return dict(sorted(counts.items()))

    def block_point_sets(self) -> dict[str, frozenset[str]]:
        grouped: dict[str, set[str]] = {}
        for point, info in self.provenance.items():
            grouped.setdefault(info.block, set()).add(point)
        return {b: frozenset(s) for b, s in grouped.items()}


def predicted_point_count(group: FiniteGroup) -> int:
    """Closed-form size of the realization space before building it."""
    n = len(group.generators)
    per_edge_colors = sum(6 * k + 6 * n + 24 for k in range(1, n + 1))
    return 8 * group.order + group.order * per_edge_colors


def _block_names(group: FiniteGroup, k: int, g: int) -> tuple[str, str, str]:
    name = group.elements[g]
    return f"edge{k}[{name}]", f"src{k}[{name}]", f"dst{k}[{name}]"


def build_realization(group: FiniteGroup) -> RealizationSpace:
    """Assemble the four-level realization space for the given group.

    Per element g: a vertex block of family 0.  Per color-k Cayley edge
    (g, g_k*g): an edge block of family k on the first story, and on the
    second story a start block of family n+k above the vertex block of g
    and the edge block, plus an end block of family 2n+k above the vertex
    block of g_k*g and the edge block.
    """
    n = len(group.generators)
    blocks: dict[str, Poset] = {}
    connections: set[tuple[str, str]] = set()
    info: list[tuple[str, BlockInfo]] = []

    def vert_name(g: int) -> str:
        return f"vert[{group.elements[g]}]"

    for g in range(group.order):
        blocks[vert_name(g)] = asymmetric_block(0)
        info.append(
            (
                vert_name(g),
                BlockInfo("vertex", 0, vert_name(g), group.elements[g], None, None),
            )
        )
    for k, gen in enumerate(group.generators, start=1):
        for g in range(group.order):
            target = group.table[gen][g]
            e_name, s_name, d_name = _block_names(group, k, g)
            blocks[e_name] = asymmetric_block(k)
            blocks[s_name] = asymmetric_block(n + k)
            blocks[d_name] = asymmetric_block(2 * n + k)
            src_el = group.elements[g]
            dst_el = group.elements[target]
            info.append((e_name, BlockInfo("edge", k, e_name, src_el, k, dst_el)))
            info.append((s_name, BlockInfo("start", n + k, s_name, src_el, k, dst_el)))
            info.append((d_name, BlockInfo("end", 2 * n + k, d_name, src_el, k, dst_el)))
            connections.add((vert_name(g), s_name))
            connections.add((e_name, s_name))
            connections.add((vert_name(target), d_name))
            connections.add((e_name, d_name))

    plan = BlockPlan(blocks=blocks, connections=frozenset(connections))
    poset = assemble(plan)
    provenance: dict[str, BlockInfo] = {}
    for bname, binfo in info:
        for p in blocks[bname].points:
            provenance[f"{bname}/{p}"] = binfo
    return RealizationSpace(poset=poset, provenance=provenance, group=group)


def induced_translation(space: RealizationSpace, h: int) -> dict[str, str]:
    """The point map on the realization space induced by x -> x*h.

    Blocks of one family are carried onto blocks of the same family — the
    vertex block of g to that of g*h, the blocks of edge (g, g_k*g) to
    those of (g*h, g_k*g*h) — acting as the identity on block-local names.
    Legitimacy as an automorphism is the caller's check.
    """
    group = space.group
    if not (0 <= h < group.order):
        raise ValueError(f"no element with index {h}")
    elem_index = {name: i for i, name in enumerate(group.elements)}
    mapping: dict[str, str] = {}
    for point, info in space.provenance.items():
        local = point[len(info.block) + 1 :]
        g = elem_index[info.element]
        image = group.elements[group.table[g][h]]
        if info.kind == "vertex":
            new_block = f"vert[{image}]"
        else:
            prefix = {"edge": "edge", "start": "src", "end": "dst"}[info.kind]
            new_block = f"{prefix}{info.color}[{image}]"
        mapping[point] = f"{new_block}/{local}"
    return mapping
