"""Exact planar predicates over integer coordinates.

Every predicate is decided by the sign of an arbitrary-precision integer
determinant, so there is no rounding anywhere.  Inputs are expected in
general position (all points distinct, no three collinear); predicates
that would have to break a degenerate tie raise DegeneracyError instead
of guessing.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Optional, Sequence

COUNTERCLOCKWISE = 1
CLOCKWISE = -1
COLLINEAR = 0


class DegeneracyError(ValueError):
    """A predicate met a collinear or duplicate configuration it must not decide."""


class Point(NamedTuple):
    x: int
    y: int


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    Returns COUNTERCLOCKWISE (+1) for a left turn, CLOCKWISE (-1) for a
    right turn, COLLINEAR (0) if the three points lie on one line.
    """
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if d > 0:
        return COUNTERCLOCKWISE
    if d < 0:
        return CLOCKWISE
    return COLLINEAR


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd intersect in one interior point.

    Requires the four endpoints to be pairwise distinct with no three
    collinear; otherwise DegeneracyError is raised.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if COLLINEAR in (o1, o2, o3, o4):
        raise DegeneracyError(f"degenerate segment pair: {a}-{b} vs {c}-{d}")
    return o1 != o2 and o3 != o4


def is_general_position(points: Sequence[Point]) -> bool:
    """True iff all points are distinct and no three are collinear.

    Exhaustive exact test, cubic in the number of points.
    """
    if len(set((p[0], p[1]) for p in points)) != len(points):
        return False
    for p, q, r in itertools.combinations(points, 3):
        if orientation(p, q, r) == COLLINEAR:
            return False
    return True


def convex_hull(points: Sequence[Point]) -> tuple[int, ...]:
    """Indices of the convex hull vertices, walked clockwise.

    Andrew's monotone chain with strict turns.  The starting index of
    the cycle is unspecified (callers normalize).  Raises DegeneracyError
    on duplicate points or collinear triples.
    """
    m = len(points)
    if not is_general_position(points):
        raise DegeneracyError("points are not in general position")
    if m <= 2:
        return tuple(range(m))

    idx = sorted(range(m), key=lambda i: (points[i][0], points[i][1]))

    def half(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and orientation(
                points[chain[-2]], points[chain[-1]], points[i]
            ) != COUNTERCLOCKWISE:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    # The chains come out counterclockwise; reverse for clockwise.
    return tuple(reversed(lower[:-1] + upper[:-1]))


def convex_cyclic_order(points: Sequence[Point]) -> Optional[tuple[int, ...]]:
    """Clockwise cyclic order of the point indices, or None if not convex.

    Returns the hull walk when every point is a hull vertex, None when
    some point is interior.  Raises DegeneracyError on degenerate input.
    """
    hull = convex_hull(points)
    if len(hull) != len(points):
        return None
    return hull
