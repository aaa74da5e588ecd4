"""Shared generators for randomized and property-based tests.

Random posets are built independently of the library internals: draw a
strict order on indices 0..n-1 (edges only point upward, so acyclicity is
free), close it transitively with plain set arithmetic, and keep the
pairs not implied by any two-step path.
"""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from finspace import ColoredDigraph, Poset, make_digraph, make_poset

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def closure_from_pairs(n: int, pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Transitive closure of upward pairs (i, j), i < j, by iteration."""
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c, d in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    return closed


def covers_from_closure(closed: set[tuple[int, int]]) -> set[tuple[int, int]]:
    return {
        (a, b)
        for a, b in closed
        if not any((a, z) in closed and (z, b) in closed for z in range(b)
                   if z != a and z != b)
    }


def poset_from_index_pairs(n: int, pairs: set[tuple[int, int]]) -> Poset:
    closed = closure_from_pairs(n, pairs)
    covers = covers_from_closure(closed)
    return make_poset(
        [f"p{i}" for i in range(n)],
        ((f"p{a}", f"p{b}") for a, b in covers),
    )


def random_poset(rng: random.Random, max_points: int) -> Poset:
    n = rng.randint(0, max_points)
    density = rng.uniform(0.05, 0.5)
    pairs = {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    }
    return poset_from_index_pairs(n, pairs)


def random_colored_digraph(rng: random.Random, max_vertices: int = 8) -> ColoredDigraph:
    n = rng.randint(2, max_vertices)
    density = rng.uniform(0.1, 0.5)
    n_colors = rng.randint(1, 3)
    edges = [
        (f"v{i}", f"v{j}", rng.randint(1, n_colors))
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < density
    ]
    return make_digraph([f"v{i}" for i in range(n)], edges)


@st.composite
def posets(draw, max_points: int = 10) -> Poset:
    n = draw(st.integers(min_value=0, max_value=max_points))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if all_pairs:
        chosen = draw(
            st.lists(st.sampled_from(all_pairs), unique=True, max_size=len(all_pairs))
        )
    else:
        chosen = []
    return poset_from_index_pairs(n, set(chosen))
