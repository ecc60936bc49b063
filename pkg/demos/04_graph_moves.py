"""Subset moves on graphs: the combinatorial engine behind the certification.

A move slides one subset element to an adjacent outside vertex.  On a
connected graph, any subset can be carried to any other of the same size, and
the construction below produces the explicit move chain.
"""

from reflext import Graph, move_sequence, deletable_vertex, induced, is_connected
from reflext.graphs import apply_moves

# a 6-cycle with one chord
g = Graph.on_range(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5)])
start, goal = {1, 2, 3}, {4, 5, 6}

steps = move_sequence(g, start, goal)
print(f"carrying {sorted(start)} to {sorted(goal)} in {len(steps)} moves:")
current = set(start)
for st in steps:
    current.remove(st.removed)
    current.add(st.added)
    print(f"  move {st.removed} -> {st.added} along {st.edge}: now {sorted(current)}")
assert apply_moves(start, steps, g) == goal

# The deletion lemma: if every outside vertex has 0 or >= 2 neighbors inside
# the subset, some subset vertex can be removed without disconnecting the graph.
subset = {2, 4, 6}
victim = deletable_vertex(g, subset)
rest = set(g.vertices) - {victim}
print(f"\ndeletable vertex of {sorted(subset)}: {victim}")
print("graph minus that vertex connected?", is_connected(induced(g, rest)))
