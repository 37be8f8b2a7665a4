"""Labeled point sets, instances, matchings, and their JSON forms.

An instance bundles one or more labeled point sets over the common label
universe {1..n}.  A set is either purely combinatorial (a clockwise
cyclic order of the labels around a convex polygon) or coordinate-based
(labels attached to integer points in general position).  All value
types here are immutable and safe to share between threads.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable, Union

from .geom import Point, convex_cyclic_order, is_general_position


class InstanceError(ValueError):
    """Input violates the instance/matching schema or one of its invariants."""


def _normalize_cycle(order: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a cyclic label sequence so it starts at label 1."""
    i = order.index(1)
    return order[i:] + order[:i]


@dataclass(frozen=True)
class ConvexSet:
    """Convex-position point set given by its clockwise cyclic label order.

    The order is stored rotated to start at label 1, which makes the
    serialization of a cyclic sequence unique.
    """

    order: tuple[int, ...]

    def __init__(self, order: Iterable[int]):
        order = tuple(order)
        n = len(order)
        if n == 0 or sorted(order) != list(range(1, n + 1)):
            raise InstanceError(f"convex order is not a permutation of 1..{n}: {order}")
        object.__setattr__(self, "order", _normalize_cycle(order))

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> dict[int, int]:
        """Map each label to its index along the clockwise order."""
        return _positions_of(self.order)


@functools.lru_cache(maxsize=4096)
def _positions_of(order: tuple[int, ...]) -> dict[int, int]:
    return {lab: i for i, lab in enumerate(order)}


@dataclass(frozen=True)
class PlanarSet:
    """General-position point set with a bijective labeling.

    Stored as (label, point) pairs sorted by label; coordinates are exact
    integers.
    """

    points: tuple[tuple[int, Point], ...]

    def __init__(self, points: Iterable[tuple[int, Point]], validate: bool = True):
        pts = tuple(sorted(((lab, Point(int(p[0]), int(p[1]))) for lab, p in points)))
        n = len(pts)
        if [lab for lab, _ in pts] != list(range(1, n + 1)):
            raise InstanceError(f"planar labels are not a bijection with 1..{n}")
        if validate and not is_general_position([p for _, p in pts]):
            raise InstanceError("planar points are not in general position")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def coord(self, label: int) -> Point:
        return self.points[label - 1][1]

    def coords(self) -> dict[int, Point]:
        return {lab: p for lab, p in self.points}


LabeledSet = Union[ConvexSet, PlanarSet]


def planar_to_convex(pset: PlanarSet) -> ConvexSet | None:
    """Convex-combinatorial view of a planar set, or None if not convex.

    When every point is a hull vertex, the coordinate set carries no more
    information than the clockwise cyclic order of its labels, so the
    equivalent ConvexSet is returned.
    """
    cyc = convex_cyclic_order([p for _, p in pset.points])
    if cyc is None:
        return None
    return ConvexSet(pset.points[i][0] for i in cyc)


@dataclass(frozen=True)
class Instance:
    """One or more labeled sets over the same label universe {1..n}."""

    n: int
    sets: tuple[LabeledSet, ...]

    def __init__(self, n: int, sets: Iterable[LabeledSet]):
        sets = tuple(sets)
        if not sets:
            raise InstanceError("an instance needs at least one labeled set")
        for s in sets:
            if s.n != n:
                raise InstanceError(f"set has {s.n} labels, expected n={n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "sets", sets)

    @property
    def num_sets(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class Matching:
    """Set of vertex-disjoint label pairs, each stored as (a, b) with a < b."""

    edges: tuple[tuple[int, int], ...]

    def __init__(self, edges: Iterable[tuple[int, int]]):
        norm = []
        for e in edges:
            a, b = e
            if a == b:
                raise InstanceError(f"edge with equal endpoints: {e}")
            norm.append((min(a, b), max(a, b)))
        norm.sort()
        seen: set[int] = set()
        for a, b in norm:
            if a in seen or b in seen:
                raise InstanceError(f"matching reuses a vertex: {norm}")
            seen.add(a)
            seen.add(b)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def labels(self) -> set[int]:
        return {v for e in self.edges for v in e}


# ---------------------------------------------------------------------------
# JSON serialization.  Coordinates travel as decimal integer strings so that
# arbitrarily large values round-trip bit-exactly through any JSON tooling.

def _parse_coord(v) -> int:
    if isinstance(v, bool):
        raise InstanceError(f"bad coordinate: {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError:
            raise InstanceError(f"bad coordinate string: {v!r}") from None
    raise InstanceError(f"bad coordinate: {v!r}")


def _set_from_obj(obj) -> LabeledSet:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InstanceError("each set needs a 'type' field")
    kind = obj["type"]
    if kind == "convex":
        order = obj.get("order")
        if not isinstance(order, list) or not all(isinstance(v, int) for v in order):
            raise InstanceError("convex set needs an integer 'order' array")
        return ConvexSet(order)
    if kind == "planar":
        pts = obj.get("points")
        if not isinstance(pts, list):
            raise InstanceError("planar set needs a 'points' array")
        pairs = []
        for p in pts:
            if not isinstance(p, dict) or not isinstance(p.get("label"), int):
                raise InstanceError("each point needs an integer 'label' plus x, y")
            pairs.append((p["label"], Point(_parse_coord(p.get("x")), _parse_coord(p.get("y")))))
        return PlanarSet(pairs)
    raise InstanceError(f"unknown set type: {kind!r}")


def parse_instance(data: Union[bytes, str]) -> Instance:
    """Parse and fully validate an instance from its JSON form."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"syntax error: {exc}") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int):
        raise InstanceError("instance needs an integer 'n'")
    if not isinstance(obj.get("sets"), list):
        raise InstanceError("instance needs a 'sets' array")
    return Instance(obj["n"], [_set_from_obj(s) for s in obj["sets"]])


def _set_to_obj(s: LabeledSet):
    if isinstance(s, ConvexSet):
        return {"type": "convex", "order": list(s.order)}
    return {
        "type": "planar",
        "points": [{"label": lab, "x": str(p.x), "y": str(p.y)} for lab, p in s.points],
    }


def write_instance(inst: Instance) -> bytes:
    """Canonical JSON bytes; parse_instance(write_instance(x)) == x."""
    obj = {"n": inst.n, "sets": [_set_to_obj(s) for s in inst.sets]}
    return (json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n").encode("utf-8")


def parse_matching(data: Union[bytes, str]) -> Matching:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"syntax error: {exc}") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("edges"), list):
        raise InstanceError("matching needs an 'edges' array")
    edges = []
    for e in obj["edges"]:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) for v in e)
        ):
            raise InstanceError(f"bad edge entry: {e!r}")
        edges.append((e[0], e[1]))
    return Matching(edges)


def write_matching(m: Matching) -> bytes:
    obj = {"edges": [list(e) for e in m.edges]}
    return (json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n").encode("utf-8")
