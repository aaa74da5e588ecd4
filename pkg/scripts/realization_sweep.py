#!/usr/bin/env python3
"""Sweep small groups through the full realization pipeline.

For each group: build the colored Cayley graph, compare its automorphism
count against the uncolored one (colors can only cut symmetries), then
build the realization space and run the three-part verification.  Prints
one table row per group.
"""

import sys
import time

from finspace import (
    automorphisms,
    cayley_graph,
    cyclic,
    dihedral,
    group_from_permutations,
    klein_four,
    strip_colors,
    symmetric,
    verify_realization,
)

GROUPS = [
    ("cyclic:2", cyclic(2)),
    ("cyclic:3", cyclic(3)),
    ("cyclic:4", cyclic(4)),
    ("cyclic:5", cyclic(5)),
    ("cyclic:6", cyclic(6)),
    ("klein", klein_four()),
    ("dihedral:6", dihedral(6)),
    ("dihedral:8", dihedral(8)),
    ("dihedral:10", dihedral(10)),
    ("symmetric:3", symmetric(3)),
    # the order-3 cyclic group, generated redundantly by both non-identity
    # elements: probes whether the construction needs a minimal generating set
    ("cyclic:3 (S={x,x2})", group_from_permutations([(1, 2, 0), (2, 0, 1)])),
]


def main() -> int:
    header = (
        f"{'group':<20} {'|G|':>4} {'gens':>4} {'aut(colored)':>12} "
        f"{'aut(plain)':>10} {'points':>7} {'verdict':>8} {'secs':>6}"
    )
    print(header)
    print("-" * len(header))
    failures = 0
    for name, group in GROUPS:
        graph = cayley_graph(group)
        colored = automorphisms(graph).order
        plain = automorphisms(strip_colors(graph)).order
        started = time.perf_counter()
        report = verify_realization(group)
        elapsed = time.perf_counter() - started
        verdict = "PASS" if report.passed else "FAIL"
        failures += not report.passed
        print(
            f"{name:<20} {group.order:>4} {len(group.generators):>4} "
            f"{colored:>12} {plain:>10} {report.point_count:>7} "
            f"{verdict:>8} {elapsed:>6.2f}"
        )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
