"""The four constructive algorithms and their size guarantees.

For two convex n-point sets, each construction guarantees a compatible
k-matching once n clears its threshold:

  same-shape          n >= (2k-2)^2 + 2   any prescribed chord diagram
  greedy maximal      n >= k^2 + 2k - 1   any maximal matching suffices
  one edge per block  n >= k^2 + k        non-nested in both sets
  close-pair          n >= k^2/2 + k      the strongest size bound

The script runs all four on one random pair and then sweeps seeds to
show the guarantees holding with room to spare.
"""

import random

from compatmatch import (
    ConvexSet,
    Instance,
    all_shapes,
    block_non_nested_matching,
    greedy_maximal_matching,
    is_compatible,
    is_non_nested,
    lb_formulas,
    random_labeling,
    rball_matching,
    same_shape_matching,
    shape_of,
)

n = 30
rng = random.Random(2024)
inst = Instance(n, (ConvexSet(random_labeling(n, rng.randrange(10**9))),
                    ConvexSet(random_labeling(n, rng.randrange(10**9)))))
g = lb_formulas(n, 2)
print(f"n={n}: guaranteed sizes per construction: same_shape>={g.same_shape}, "
      f"greedy>={g.greedy_two_sets}, blocks>={g.non_nested}, close_pair>={g.close_pair}")

for target in all_shapes(g.same_shape):
    m = same_shape_matching(inst, target)
    assert shape_of(m, inst.sets[0]) == target == shape_of(m, inst.sets[1])
    print(f"  same-shape {target.chords}: edges {m.edges}")

m = greedy_maximal_matching(inst).matching
print(f"  greedy maximal: {m.size} edges (>= {g.greedy_two_sets} guaranteed)")

m = block_non_nested_matching(inst, g.non_nested)
print(f"  blocks (k={g.non_nested}): edges {m.edges}, "
      f"non-nested in both: {is_non_nested(m, inst.sets[0]) and is_non_nested(m, inst.sets[1])}")

m = rball_matching(inst)
print(f"  close-pair: {m.size} edges (>= {g.close_pair} guaranteed)")
assert is_compatible(inst, m)

print("\nguarantee sweep (100 seeds per k, close-pair at its exact threshold):")
for k in (4, 8, 12):
    n_thr = (k * k + 2 * k + 1) // 2
    worst = min(
        rball_matching(
            Instance(n_thr, (ConvexSet(random_labeling(n_thr, 2 * s)),
                             ConvexSet(random_labeling(n_thr, 2 * s + 1))))
        ).size
        for s in range(100)
    )
    print(f"  k={k:>2} (n={n_thr}): worst observed size {worst} (guarantee {k})")
