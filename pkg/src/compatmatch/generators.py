"""Instance constructions and randomized labeling machinery.

Deterministic generators for the structured instances used throughout:
the five-block permutation whose optimum is exactly 2n/5, the bit-pair
partition family that forces single-edge matchings with 3*C(b,2) convex
labelings (b = ceil(log2 n)), seeded random labelings and point sets,
and the randomized search for a forcing family over a fixed geometry.
All outputs are pure functions of (parameters, seed).
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Sequence

from .conflict import edges_cross_in_set
from .geom import Point, is_general_position
from .model import ConvexSet, Instance, PlanarSet


class InfiniteForceError(ValueError):
    """The geometry has no crossing quadruple, so no family can force."""


def five_block_permutation(n: int) -> Instance:
    """Two convex sets whose largest compatible matching is exactly 2n/5.

    The first set is the identity order; the second repeats the pattern
    (2, 4, 1, 5, 3) shifted by 5 per block.  Every compatible matching
    misses at least one point in each of the n/5 blocks.
    """
    if n % 10 or n <= 0:
        raise ValueError(f"n must be a positive multiple of 10, got {n}")
    pi = []
    for i in range(n // 5):
        base = 5 * i
        pi += [base + 2, base + 4, base + 1, base + 5, base + 3]
    return Instance(n, (ConvexSet(range(1, n + 1)), ConvexSet(pi)))


# Block layouts of the three convex drawings built from one 4-partition
# (A, B, C, D) of the labels.  Each entry is a cyclic sequence of
# (block, reversed) pairs.  The triple satisfies, mechanically verified:
#   - every block pair occurs in equal and in inverse orientation,
#   - for every block S and pair {Y, Z}, both handednesses of (S, Y, Z)
#     relative to S's arrow occur,
#   - the three cyclic orders realize all three interleaved pairings of
#     the four blocks.
# Together these force a crossing for every pair of independent edges
# that both span two blocks.
_FORCING_LAYOUTS = (
    ((0, False), (1, False), (2, False), (3, False)),
    ((0, True), (1, True), (3, False), (2, False)),
    ((0, True), (2, False), (1, False), (3, True)),
)


def partition_triple(blocks: Sequence[Sequence[int]]) -> list[ConvexSet]:
    """The three convex labelings built from one ordered 4-block partition.

    Within-block order is ascending label, reversed where the layout says
    so; empty blocks are allowed.
    """
    if len(blocks) != 4:
        raise ValueError("exactly four blocks required")
    sets = []
    for layout in _FORCING_LAYOUTS:
        order: list[int] = []
        for bi, rev in layout:
            lab = sorted(blocks[bi])
            order.extend(reversed(lab) if rev else lab)
        sets.append(ConvexSet(order))
    return sets


def bit_partition_family(n: int) -> list[ConvexSet]:
    """Convex labelings forcing single-edge matchings, 3*C(b,2) of them.

    For every pair of bit positions i < j (b = ceil(log2 n) bits of the
    zero-based label value), the labels are split into four blocks by the
    values of those two bits, and the three layouts above are emitted.
    Any two independent edges both span blocks in the partition chosen
    for the bits where their endpoints differ, hence cross in one of its
    three drawings.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    b = (n - 1).bit_length()  # exact ceil(log2 n)
    family: list[ConvexSet] = []
    for i, j in itertools.combinations(range(b), 2):
        blocks: list[list[int]] = [[], [], [], []]
        for lab in range(1, n + 1):
            v = lab - 1
            blocks[((v >> i) & 1) << 1 | ((v >> j) & 1)].append(lab)
        family.extend(partition_triple(blocks))
    return family


def random_labeling(n: int, seed: int) -> tuple[int, ...]:
    """Uniform permutation of 1..n from a seeded shuffle."""
    rng = random.Random(seed)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)


def relabel_planar(pset: PlanarSet, perm: Sequence[int]) -> PlanarSet:
    """Apply a labeling: the point labeled i receives label perm[i-1]."""
    if sorted(perm) != list(range(1, pset.n + 1)):
        raise ValueError("labeling must be a permutation of 1..n")
    return PlanarSet(
        ((perm[lab - 1], p) for lab, p in pset.points), validate=False
    )


def random_planar_set(n: int, seed: int) -> PlanarSet:
    """n integer points in general position with identity labels.

    Rejection-samples on a grid wide enough that collinear triples are
    rare, re-drawing any point that would duplicate or align with two
    accepted ones.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    span = 8 * n * n + 64
    pts: list[Point] = []
    while len(pts) < n:
        cand = Point(rng.randrange(span), rng.randrange(span))
        if any(cand == p for p in pts):
            continue
        if any(
            (q[0] - p[0]) * (cand[1] - p[1]) == (q[1] - p[1]) * (cand[0] - p[0])
            for p, q in itertools.combinations(pts, 2)
        ):
            continue
        pts.append(cand)
    return PlanarSet(((i + 1, p) for i, p in enumerate(pts)), validate=False)


def convex_polygon_points(n: int) -> PlanarSet:
    """n integer points in convex position, labeled 1..n clockwise.

    Cosine/sine positions rounded to an integer grid, with the radius
    doubled until the exact validation (general position and convex
    cyclic order matching the labels) passes.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    radius = max(1 << 10, 4 * n * n)
    while True:
        pts = []
        for i in range(n):
            angle = -2.0 * math.pi * i / n  # clockwise in y-up coordinates
            pts.append(Point(round(radius * math.cos(angle)), round(radius * math.sin(angle))))
        if is_general_position(pts):
            pset = PlanarSet(((i + 1, p) for i, p in enumerate(pts)), validate=False)
            from .model import planar_to_convex

            cview = planar_to_convex(pset)
            if cview is not None and cview.order == tuple(range(1, n + 1)):
                return pset
        radius *= 2


def _independent_edge_pairs(n: int):
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    return [
        (e, f)
        for e, f in itertools.combinations(edges, 2)
        if not set(e) & set(f)
    ]


def has_crossing_quadruple(pset: PlanarSet) -> bool:
    """True iff some 4 points are in convex position (a crossing exists)."""
    coords = [p for _, p in pset.points]
    from .geom import convex_cyclic_order

    for quad in itertools.combinations(coords, 4):
        if convex_cyclic_order(quad) is not None:
            return True
    return False


def force_search_random(
    points: PlanarSet, max_rounds: int, seed: int
) -> tuple[int, list[tuple[int, ...]]]:
    """Randomized search for a forcing family over a fixed geometry.

    Adds independent uniform labelings of ``points`` until no pair of
    vertex-disjoint labeled edges is compatible across all copies, then
    certifies the family by the exhaustive pair check before returning
    (count, labelings).  Raises InfiniteForceError when the geometry has
    no crossing at all, and RuntimeError when max_rounds is exhausted.
    """
    n = points.n
    if n < 4:
        raise ValueError("need at least 4 points")
    if not has_crossing_quadruple(points):
        raise InfiniteForceError("no crossing quadruple: force is infinite")

    rng = random.Random(seed)
    surviving = _independent_edge_pairs(n)
    labelings: list[tuple[int, ...]] = []
    while surviving:
        if len(labelings) >= max_rounds:
            raise RuntimeError(f"no forcing family within {max_rounds} rounds")
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        labelings.append(tuple(perm))
        labeled = relabel_planar(points, perm)
        surviving = [
            (e, f) for e, f in surviving if not edges_cross_in_set(e, f, labeled)
        ]

    # The incremental filter already implies this, but the family must
    # never leave here uncertified.
    from .bounds import verify_force_family

    ok, witness = verify_force_family([relabel_planar(points, p) for p in labelings])
    if not ok:
        raise AssertionError(f"certification failed on pair {witness}")
    return len(labelings), labelings
