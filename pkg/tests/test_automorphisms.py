import random

import pytest

from conftest import random_colored_digraph
from finspace import (
    asymmetric_block,
    automorphisms,
    brute_force_automorphisms,
    build_realization,
    cayley_graph,
    cyclic,
    dihedral,
    hasse_digraph,
    isomorphism_between,
    level_of,
    make_digraph,
    make_poset,
    refine,
    verify_realization,
)

TRIANGLE = make_digraph(
    ["a", "b", "c"], [("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]
)


def _closure_order(generators, n):
    """Independent order check: BFS closure of the generators."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = tuple(g[v] for v in x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen)


# -- hasse_digraph -------------------------------------------------------


def test_hasse_digraph_shapes():
    single = hasse_digraph(make_poset(["p"], []))
    assert (len(single.vertices), len(single.edges)) == (1, 0)

    chain = hasse_digraph(make_poset(["a", "b", "c"], [("a", "b"), ("b", "c")]))
    assert chain.edges == {("a", "b", 1), ("b", "c", 1)}

    block = hasse_digraph(asymmetric_block(0))
    assert (len(block.vertices), len(block.edges)) == (8, 11)
    assert all(c == 1 for _, _, c in block.edges)


# -- refine ----------------------------------------------------------------


def test_refine_transitive_cycle_is_one_class():
    classes = refine(TRIANGLE).vertex_class
    assert len(set(classes.values())) == 1


def test_refine_two_cycles_cannot_split_isomorphic_components():
    d = make_digraph(
        list("abcdef"),
        [("a", "b", 1), ("b", "c", 1), ("c", "a", 1),
         ("d", "e", 1), ("e", "f", 1), ("f", "d", 1)],
    )
    classes = refine(d).vertex_class
    assert len(set(classes.values())) == 1


def test_refine_block_goes_discrete():
    d = hasse_digraph(asymmetric_block(3))
    classes = refine(d).vertex_class
    assert len(set(classes.values())) == len(d.vertices)


def test_refine_respects_seed():
    seeded = refine(TRIANGLE, seed={"a": 1, "b": 0, "c": 0})
    assert len(set(seeded.vertex_class.values())) == 3  # pinning one splits all


def test_refine_rejects_partial_seed():
    with pytest.raises(ValueError, match="seed"):
        refine(TRIANGLE, seed={"a": 1})


def test_refine_classes_are_equitable():
    rng = random.Random(424_242)
    for _ in range(30):
        d = random_colored_digraph(rng)
        classes = refine(d).vertex_class
        idx = {v: i for i, v in enumerate(d.vertices)}
        signature = {}
        for v in d.vertices:
            incident = []
            for s, t, c in d.edges:
                if s == v:
                    incident.append((0, c, classes[t]))
                if t == v:
                    incident.append((1, c, classes[s]))
            signature[idx[v]] = (classes[v], tuple(sorted(incident)))
        for v in d.vertices:
            for w in d.vertices:
                if classes[v] == classes[w]:
                    assert signature[idx[v]] == signature[idx[w]]


# -- automorphisms vs oracle ---------------------------------------------


def test_triangle_rotations():
    group = automorphisms(TRIANGLE)
    assert group.order == 3
    assert _closure_order(group.generators, 3) == 3


def test_blocks_are_rigid():
    for k in range(7):
        assert automorphisms(hasse_digraph(asymmetric_block(k))).order == 1


def test_colored_cayley_of_dihedral6():
    group = automorphisms(cayley_graph(dihedral(6)))
    assert group.order == 6
    assert _closure_order(group.generators, 6) == 6


def test_brute_force_examples():
    edge = make_digraph(["u", "v"], [("u", "v", 1)])
    assert brute_force_automorphisms(edge).order == 1

    pair = make_digraph(["u", "v"], [])
    assert brute_force_automorphisms(pair).order == 2

    block = hasse_digraph(asymmetric_block(0))
    assert brute_force_automorphisms(block).order == 1
    assert automorphisms(block).order == 1


def test_brute_force_vertex_limit():
    too_big = make_digraph([f"v{i}" for i in range(11)], [])
    with pytest.raises(ValueError, match="oracle limit"):
        brute_force_automorphisms(too_big)


def test_generators_preserve_edges_and_outputs_deterministic():
    rng = random.Random(11_222)
    for _ in range(40):
        d = random_colored_digraph(rng)
        group = automorphisms(d)
        idx_edges = d._edge_indices
        for g in group.generators:
            assert {(g[s], g[t], c) for s, t, c in idx_edges} == idx_edges
        assert automorphisms(d) == group


def test_engine_matches_oracle_on_random_digraphs():
    rng = random.Random(987_654)
    for _ in range(40):
        d = random_colored_digraph(rng, max_vertices=6)
        engine = automorphisms(d)
        oracle = brute_force_automorphisms(d)
        assert engine.order == oracle.order
        assert engine.order == _closure_order(engine.generators, len(d.vertices))


def test_empty_and_tiny_digraphs():
    assert automorphisms(make_digraph([], [])).order == 1
    assert automorphisms(make_digraph(["v"], [])).order == 1
    two = make_digraph(["u", "v"], [])
    assert automorphisms(two).order == 2


# -- isomorphism search -----------------------------------------------------


def test_isomorphism_between_relabeled_cayley_graphs():
    a = cayley_graph(cyclic(4))
    renamed = make_digraph(
        [v.upper() for v in a.vertices],
        [(s.upper(), t.upper(), c) for s, t, c in a.edges],
    )
    mapping = isomorphism_between(a, renamed)
    assert mapping is not None
    assert {(mapping[s], mapping[t], c) for s, t, c in a.edges} == renamed.edges


def test_isomorphism_between_respects_colors():
    one = make_digraph(["a", "b"], [("a", "b", 1)])
    other = make_digraph(["a", "b"], [("a", "b", 2)])
    assert isomorphism_between(one, other) is None


# -- realization verification -------------------------------------------


def test_found_automorphisms_preserve_levels():
    space = build_realization(cyclic(3))
    d = hasse_digraph(space.poset)
    group = automorphisms(d)
    assert group.order == 3
    for g in group.generators:
        for i, v in enumerate(d.vertices):
            assert level_of(space.poset, v) == level_of(space.poset, d.vertices[g[i]])


def test_found_automorphisms_preserve_block_families():
    space = build_realization(cyclic(3))
    d = hasse_digraph(space.poset)
    idx = {v: i for i, v in enumerate(d.vertices)}
    block_sets = space.block_point_sets()
    family_of_set = {
        frozenset(pts): space.provenance[next(iter(pts))].family
        for pts in block_sets.values()
    }
    for g in automorphisms(d).generators:
        for pts, fam in family_of_set.items():
            image = frozenset(d.vertices[g[idx[p]]] for p in pts)
            assert family_of_set.get(image) == fam


def test_verify_realization_cyclic3():
    report = verify_realization(cyclic(3))
    assert report.passed
    assert report.point_count == 132
    assert report.induced_valid == 3
    assert report.engine_order == 3
    assert report.render().splitlines()[-1] == "order(Aut) = 3 = |G| : PASS"
    assert report.render() == verify_realization(cyclic(3)).render()


def test_verify_realization_budget():
    from finspace import symmetric

    with pytest.raises(ValueError, match="2352"):
        verify_realization(symmetric(4))
    report = verify_realization(symmetric(4), budget=3000)
    assert report.point_count == 2352
    assert report.passed


def test_inventory_counts_are_block_counts():
    report = verify_realization(cyclic(2))
    assert report.inventory == ((0, 2), (1, 2), (2, 2), (3, 2))
    assert sum(count for _, count in report.inventory) == 8
