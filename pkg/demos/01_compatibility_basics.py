"""What it means for a matching to be compatible with several labeled sets.

A matching on labels {1..n} is drawn as straight segments on each labeled
point set.  It is compatible when none of these drawings has a crossing.
This walk-through builds a few tiny instances, checks matchings against
them, and shows the smallest family of labelings that forces every
compatible matching down to a single edge.
"""

from compatmatch import (
    ConvexSet,
    Instance,
    Matching,
    brute_force_max_matching,
    build_conflict_graph,
    is_compatible,
    max_compatible_matching,
    write_instance,
)

# Two labelings of a convex 4-gon.  The first is the reference clockwise
# order; the second swaps labels 1 and 2.
inst = Instance(4, (ConvexSet((1, 2, 3, 4)), ConvexSet((2, 1, 3, 4))))
print("instance:", write_instance(inst).decode().strip())

for edges in ([(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]):
    m = Matching(edges)
    print(f"  perfect matching {edges}: compatible = {is_compatible(inst, m)}")

res = max_compatible_matching(inst)
print("maximum compatible matching:", res.matching.edges, "size", res.size)
assert res.size == brute_force_max_matching(inst).size

# Three labelings of the convex 4-gon chosen so that EVERY pair of
# disjoint labeled edges crosses in at least one of them.  Any compatible
# matching is then a single edge.
forcing = Instance(4, (ConvexSet((1, 2, 3, 4)), ConvexSet((2, 4, 1, 3)), ConvexSet((1, 2, 4, 3))))
res = max_compatible_matching(forcing)
print("\nthree forcing labelings: maximum size =", res.size)

# The conflict graph behind the solver: one vertex per candidate edge,
# adjacency = shares a label or crosses somewhere.  Compatible matchings
# are exactly its independent sets.
g = build_conflict_graph(forcing)
pairs = sum(
    g.are_adjacent(i, j)
    for i in range(g.num_vertices)
    for j in range(i + 1, g.num_vertices)
)
print(f"conflict graph: {g.num_vertices} candidate edges, {pairs} conflicting pairs "
      f"(complete: {pairs == g.num_vertices * (g.num_vertices - 1) // 2})")
