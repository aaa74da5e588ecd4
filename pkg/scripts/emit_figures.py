#!/usr/bin/env python3
"""Write the worked-example figures as DOT and JSON files.

Produces, under the output directory (default ./figures):

  block3.{dot,json}          the 14-point rigid block
  cayley_cyclic3.{dot,json}  colored Cayley graph of the order-3 cyclic group
  cayley_dihedral6.{dot,json}    ... of the order-6 dihedral group
  space_cyclic3.{dot,json}   its 132-point realization space
  space_dihedral6.json       the 588-point realization space (DOT omitted:
                             too dense to render usefully)

Render any .dot with graphviz, e.g.  dot -Tpng -O figures/block3.dot
"""

import argparse
import pathlib
import sys

from finspace import (
    asymmetric_block,
    build_realization,
    cayley_graph,
    cyclic,
    dihedral,
    digraph_to_dot,
    digraph_to_json,
    poset_to_dot,
    poset_to_json,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="figures", help="output directory")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    block = asymmetric_block(3)
    (out / "block3.dot").write_text(poset_to_dot(block, name="block3"))
    (out / "block3.json").write_text(poset_to_json(block))

    for label, group in (("cyclic3", cyclic(3)), ("dihedral6", dihedral(6))):
        graph = cayley_graph(group)
        (out / f"cayley_{label}.dot").write_text(digraph_to_dot(graph, name="cayley"))
        (out / f"cayley_{label}.json").write_text(digraph_to_json(graph))

    space3 = build_realization(cyclic(3))
    (out / "space_cyclic3.dot").write_text(poset_to_dot(space3.poset, name="space"))
    (out / "space_cyclic3.json").write_text(poset_to_json(space3.poset))

    space6 = build_realization(dihedral(6))
    (out / "space_dihedral6.json").write_text(poset_to_json(space6.poset))

    for path in sorted(out.iterdir()):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
