"""Directed graphs with integer edge colors.

The shared language for group Cayley graphs and Hasse diagrams: a vertex
list plus a set of (source, target, color) triples.  Values are immutable
and hashable; adjacency structures are cached on first use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

Edge = tuple[str, str, int]

# direction tags used in incidence lists
OUT = 0
IN = 1


@dataclass(frozen=True)
class ColoredDigraph:
    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        for s, t, c in self.edges:
            if s == t:
                raise ValueError(f"self-loop on {s!r}")
            if s not in seen or t not in seen:
                raise ValueError(f"edge ({s!r}, {t!r}, {c}) uses an unknown vertex")
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"edge color must be a positive integer, got {c!r}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _edge_indices(self) -> frozenset[tuple[int, int, int]]:
        idx = self._index
        return frozenset((idx[s], idx[t], c) for s, t, c in self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per vertex: sorted (direction, color, other-endpoint) triples."""
        inc: list[list[tuple[int, int, int]]] = [[] for _ in self.vertices]
        for s, t, c in self._edge_indices:
            inc[s].append((OUT, c, t))
            inc[t].append((IN, c, s))
        return tuple(tuple(sorted(entries)) for entries in inc)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        colors = {c for _, _, c in self.edges}
        return (
            f"ColoredDigraph({len(self.vertices)} vertices, "
            f"{len(self.edges)} edges, {len(colors)} colors)"
        )


def make_digraph(vertices, edges) -> ColoredDigraph:
    return ColoredDigraph(tuple(vertices), frozenset((s, t, int(c)) for s, t, c in edges))


def strip_colors(d: ColoredDigraph) -> ColoredDigraph:
    """Forget edge colors: every edge becomes color 1 (duplicates collapse)."""
    return ColoredDigraph(d.vertices, frozenset((s, t, 1) for s, t, _ in d.edges))


def digraph_to_json_dict(d: ColoredDigraph) -> dict:
    return {
        "vertices": list(d.vertices),
        "edges": [[s, t, c] for s, t, c in sorted(d.edges)],
    }


def digraph_from_json_dict(data: dict) -> ColoredDigraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError(
            'malformed digraph JSON: expected {"vertices": [...], "edges": [...]}'
        )
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("malformed digraph JSON: vertices must be a list of strings")
    ok = isinstance(edges, list) and all(
        isinstance(e, list)
        and len(e) == 3
        and isinstance(e[0], str)
        and isinstance(e[1], str)
        and isinstance(e[2], int)
        for e in edges
    )
    if not ok:
        raise ValueError(
            "malformed digraph JSON: edges must be [source, target, color] triples"
        )
    return make_digraph(vertices, ((e[0], e[1], e[2]) for e in edges))


def digraph_to_json(d: ColoredDigraph) -> str:
    return json.dumps(digraph_to_json_dict(d), indent=2)


def digraph_from_json(text: str) -> ColoredDigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed digraph JSON: {exc}") from exc
    return digraph_from_json_dict(data)


_PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta")


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def digraph_to_dot(d: ColoredDigraph, name: str = "digraph_") -> str:
    """DOT text; edge colors are mapped onto a fixed pen-color palette."""
    lines = [f"digraph {name} {{"]
    for v in d.vertices:
        lines.append(f"  {_quote(v)};")
    for s, t, c in sorted(d.edges):
        pen = _PALETTE[(c - 1) % len(_PALETTE)]
        lines.append(f"  {_quote(s)} -> {_quote(t)} [color={pen}, label=\"{c}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
