"""Shared fixtures for the test suite."""

import random

from compatmatch.generators import random_labeling, random_planar_set, relabel_planar
from compatmatch.model import ConvexSet, Instance

# Three labelings of a convex 4-point set such that every pair of
# disjoint labeled edges crosses in exactly one of them; the smallest
# family forcing single-edge matchings.
FORCING_TRIPLE_4 = (
    ConvexSet((1, 2, 3, 4)),
    ConvexSet((2, 4, 1, 3)),
    ConvexSet((1, 2, 4, 3)),
)


def random_instance(rng: random.Random, n_min=2, n_max=8, max_sets=3) -> Instance:
    """Random mixed-kind instance for oracle cross-checks."""
    n = rng.randrange(n_min, n_max + 1)
    sets = []
    for _ in range(rng.randrange(1, max_sets + 1)):
        if rng.random() < 0.6:
            sets.append(ConvexSet(random_labeling(n, rng.randrange(10**9))))
        else:
            pts = random_planar_set(n, rng.randrange(10**9))
            sets.append(relabel_planar(pts, random_labeling(n, rng.randrange(10**9))))
    return Instance(n, sets)


def random_convex_pair(rng: random.Random, n: int) -> Instance:
    return Instance(
        n,
        (
            ConvexSet(random_labeling(n, rng.randrange(10**9))),
            ConvexSet(random_labeling(n, rng.randrange(10**9))),
        ),
    )
