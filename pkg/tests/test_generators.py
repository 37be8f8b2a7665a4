import math

import pytest

from compatmatch.bounds import verify_force_family
from compatmatch.generators import (
    InfiniteForceError,
    bit_partition_family,
    convex_polygon_points,
    five_block_permutation,
    force_search_random,
    has_crossing_quadruple,
    random_labeling,
    random_planar_set,
    relabel_planar,
)
from compatmatch.geom import Point, is_general_position
from compatmatch.model import ConvexSet, PlanarSet, planar_to_convex
from compatmatch.solver import max_compatible_matching


def test_five_block_permutation_layout():
    inst = five_block_permutation(10)
    assert inst.sets[0].order == tuple(range(1, 11))
    assert inst.sets[1].order == (1, 5, 3, 7, 9, 6, 10, 8, 2, 4)  # (2,4,1,5,3,...) rotated to 1
    inst20 = five_block_permutation(20)
    raw = []
    for i in range(4):
        b = 5 * i
        raw += [b + 2, b + 4, b + 1, b + 5, b + 3]
    assert inst20.sets[1] == ConvexSet(raw)
    with pytest.raises(ValueError):
        five_block_permutation(15)


def test_five_block_solved_optimum():
    assert max_compatible_matching(five_block_permutation(10)).size == 4


def test_bit_partition_family_sizes_and_force():
    fam4 = bit_partition_family(4)
    assert len(fam4) == 3
    assert verify_force_family(fam4)[0]

    fam5 = bit_partition_family(5)
    assert len(fam5) == 9
    assert verify_force_family(fam5)[0]

    fam16 = bit_partition_family(16)
    assert len(fam16) == 3 * math.comb(4, 2)
    assert verify_force_family(fam16)[0]


def test_random_labeling_trivia():
    assert random_labeling(1, 123) == (1,)
    assert random_labeling(8, 42) == random_labeling(8, 42)
    assert sorted(random_labeling(8, 42)) == list(range(1, 9))


def test_random_labeling_uniformity():
    # chi-square style check: with 10^5 samples each of the 120 orderings
    # should appear 833 +- 5 sigma times (sigma ~ 28.7)
    from collections import Counter

    samples = 100_000
    counts = Counter(random_labeling(5, seed) for seed in range(samples))
    assert len(counts) == 120
    expect = samples / 120
    sigma = math.sqrt(samples * (1 / 120) * (119 / 120))
    for perm, c in counts.items():
        assert abs(c - expect) <= 5 * sigma, (perm, c)


def test_random_planar_set_properties():
    ps = random_planar_set(100, 9)
    assert is_general_position([p for _, p in ps.points])
    assert random_planar_set(30, 5) == random_planar_set(30, 5)
    assert random_planar_set(30, 5) != random_planar_set(30, 6)


def test_convex_polygon_points():
    for n in (3, 7, 16):
        ps = convex_polygon_points(n)
        cset = planar_to_convex(ps)
        assert cset is not None
        assert cset.order == tuple(range(1, n + 1))


def test_relabel_planar():
    ps = random_planar_set(5, 1)
    rl = relabel_planar(ps, (3, 1, 2, 5, 4))
    assert rl.coord(3) == ps.coord(1)
    assert rl.coord(4) == ps.coord(5)
    with pytest.raises(ValueError):
        relabel_planar(ps, (1, 1, 2, 3, 4))


def test_force_search_on_convex_quadrilateral():
    square = PlanarSet(
        [(1, Point(0, 0)), (2, Point(10, 1)), (3, Point(11, 10)), (4, Point(1, 11))]
    )
    l, labelings = force_search_random(square, max_rounds=500, seed=0)
    assert l >= 3  # three labelings are necessary for four convex points
    fam = [relabel_planar(square, p) for p in labelings]
    assert verify_force_family(fam)[0]


def test_force_search_infinite_detection():
    tri = PlanarSet(
        [(1, Point(0, 0)), (2, Point(10, 0)), (3, Point(5, 9)), (4, Point(5, 3))]
    )
    assert not has_crossing_quadruple(tri)
    with pytest.raises(InfiniteForceError):
        force_search_random(tri, max_rounds=10, seed=0)


def test_force_search_twelve_gon_hits_theory_bound():
    # ceil(log_{3/2}(3 C(12,4))) = 19 guarantees existence; a seeded run
    # finds a family of at most 18 labelings.
    poly = convex_polygon_points(12)
    l, labelings = force_search_random(poly, max_rounds=100, seed=2)
    assert l <= 18
    fam = [relabel_planar(poly, p) for p in labelings]
    assert verify_force_family(fam)[0]


def test_force_search_max_rounds():
    poly = convex_polygon_points(12)
    with pytest.raises(RuntimeError):
        force_search_random(poly, max_rounds=3, seed=0)
