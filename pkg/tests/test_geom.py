import itertools
import random

import pytest
from hypothesis import given, strategies as st

from compatmatch.geom import (
    CLOCKWISE,
    COLLINEAR,
    COUNTERCLOCKWISE,
    DegeneracyError,
    Point,
    convex_cyclic_order,
    convex_hull,
    is_general_position,
    orientation,
    segments_cross,
)

coords = st.integers(min_value=-1000, max_value=1000)
points = st.builds(Point, coords, coords)


def test_orientation_examples():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == COUNTERCLOCKWISE
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == COLLINEAR
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == CLOCKWISE


@given(points, points, points)
def test_orientation_antisymmetry(p, q, r):
    assert orientation(p, q, r) == -orientation(p, r, q)


def test_segments_cross_examples():
    assert segments_cross(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0))
    assert not segments_cross(Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1))
    # Orientation signs checked by hand: (0,0)-(3,1) separates (1,1) from
    # (2,0), and (1,1)-(2,0) separates (0,0) from (3,1).
    assert segments_cross(Point(0, 0), Point(3, 1), Point(1, 1), Point(2, 0))


def test_segments_cross_symmetry():
    rng = random.Random(20240901)
    done = 0
    while done < 300:
        pts = [Point(rng.randrange(50), rng.randrange(50)) for _ in range(4)]
        if not is_general_position(pts):
            continue
        a, b, c, d = pts
        base = segments_cross(a, b, c, d)
        assert base == segments_cross(b, a, c, d)
        assert base == segments_cross(a, b, d, c)
        assert base == segments_cross(c, d, a, b)
        done += 1


def test_segments_cross_degeneracy():
    with pytest.raises(DegeneracyError):
        segments_cross(Point(0, 0), Point(2, 0), Point(1, 0), Point(1, 1))
    with pytest.raises(DegeneracyError):
        segments_cross(Point(0, 0), Point(1, 1), Point(0, 0), Point(1, 0))


def test_is_general_position_examples():
    assert is_general_position([Point(0, 0), Point(1, 0), Point(0, 1)])
    assert not is_general_position([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert not is_general_position([Point(0, 0), Point(0, 0), Point(2, 3)])
    pentagon = [Point(0, 0), Point(4, 1), Point(5, 5), Point(1, 6), Point(-2, 3)]
    # oracle: exhaustive triple check
    assert all(
        orientation(p, q, r) != COLLINEAR
        for p, q, r in itertools.combinations(pentagon, 3)
    )
    assert is_general_position(pentagon)


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    i = b.index(a[0])
    return tuple(b[i:] + b[:i]) == tuple(a)


def _extreme_oracle(pts):
    """A point is extreme iff it is inside no triangle of the others."""
    out = []
    for i, z in enumerate(pts):
        inside = False
        for tri in itertools.combinations([p for j, p in enumerate(pts) if j != i], 3):
            s = {orientation(tri[0], tri[1], z), orientation(tri[1], tri[2], z), orientation(tri[2], tri[0], z)}
            if COLLINEAR not in s and len(s) == 1:
                inside = True
                break
        out.append(not inside)
    return out


def test_convex_cyclic_order_quadrilateral():
    pts = [Point(0, 0), Point(10, 1), Point(11, 10), Point(1, 11)]
    assert all(_extreme_oracle(pts))
    cyc = convex_cyclic_order(pts)
    assert cyc is not None
    assert _cyclic_equal(cyc, (0, 3, 2, 1))  # clockwise


def test_convex_cyclic_order_interior_point():
    pts = [Point(0, 0), Point(10, 0), Point(5, 9), Point(5, 3)]
    assert _extreme_oracle(pts) == [True, True, True, False]
    assert convex_cyclic_order(pts) is None


def test_convex_cyclic_order_triangle():
    cyc = convex_cyclic_order([Point(0, 0), Point(4, 0), Point(2, 5)])
    assert cyc is not None and len(cyc) == 3


def test_convex_hull_clockwise():
    pts = [Point(0, 0), Point(10, 0), Point(5, 9), Point(5, 3)]
    hull = convex_hull(pts)
    assert sorted(hull) == [0, 1, 2]
    # consecutive hull triples turn clockwise
    m = len(hull)
    for i in range(m):
        assert (
            orientation(pts[hull[i]], pts[hull[(i + 1) % m]], pts[hull[(i + 2) % m]])
            == CLOCKWISE
        )


def test_cross_agrees_with_interleaving_on_convex_quadruples():
    rng = random.Random(7)
    done = 0
    while done < 1000:
        pts = [Point(rng.randrange(200), rng.randrange(200)) for _ in range(4)]
        if not is_general_position(pts):
            continue
        done += 1
        cyc = convex_cyclic_order(pts)
        crosses = segments_cross(pts[0], pts[1], pts[2], pts[3])
        if cyc is None:
            assert not crosses  # one point inside the others' triangle
            continue
        pos = {idx: i for i, idx in enumerate(cyc)}
        interleaved = (pos[1] - pos[0]) % 4 == 2  # 0-1 split 2-3 on the cycle
        assert crosses == interleaved
