#!/usr/bin/env python3
"""Pebbling moves and goal predicates on small graphs.

A pebbling move takes two pebbles off a vertex and puts one on a neighbor.
A configuration solves the domination goal when the occupied vertices
dominate the whole graph.  Which dominating set emerges depends on where
the pebbles start, and it need not be a minimum dominating set.
"""

from dcpebble import (
    DOMINATION,
    apply_move,
    binary_tree,
    dominated_vertices,
    is_solvable,
    path,
    satisfies,
    support,
    verify_certificate,
)

p4 = path(4)
print("P4:", p4, "edges", sorted(p4.edges))

print("\nFive pebbles on the left end vs the right end reach different")
print("dominating sets:")
for start in ((5, 0, 0, 0), (0, 0, 0, 5)):
    result = is_solvable(p4, start, DOMINATION)
    final = result.certificate.replay(p4)
    print(f"  start {start} -> moves {list(result.certificate.moves)}"
          f" -> final {final} covers {sorted(support(final))}")
    assert verify_certificate(p4, result.certificate, DOMINATION).ok

print("\nStep by step from (5,0,0,0):")
c = (5, 0, 0, 0)
for move in ((0, 1), (0, 1), (1, 2)):
    c = apply_move(p4, c, move)
    print(f"  after {move}: {c} dominated:"
          f" {sorted(dominated_vertices(p4, support(c)))}")
print("  satisfies domination:", satisfies(p4, c, DOMINATION))

print("\nThe height-2 binary tree has a 2-vertex minimum dominating set,")
print("but pebbling solutions may need three covered vertices.")
b2 = binary_tree(2)
for start in ((0, 1, 1, 1, 0, 0, 0),   # pictured configuration
              (4, 0, 0, 1, 0, 0, 0),   # four at the root
              (0, 0, 0, 1, 0, 0, 10)):  # 1 and 10 on the outer leaves
    result = is_solvable(b2, start, DOMINATION)
    final = result.certificate.replay(b2)
    print(f"  start {start}: solvable, final support {sorted(support(final))}")
