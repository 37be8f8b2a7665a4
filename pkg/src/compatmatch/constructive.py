"""Constructive lower-bound algorithms for two convex sets.

Four polynomial-time constructions, each with a size guarantee expressed
as a threshold on n:

* shape-preserving matchings via a circular monotone subsequence
  (n >= (2k-2)^2 + 2 guarantees any k-chord shape in both sets),
* greedy maximal matchings (in the solver module; n >= k^2 + 2k - 1
  guarantees k edges),
* one edge per perimeter block, non-nested in both sets
  (n >= k^2 + k),
* the close-pair recursion on the permutation matrix (n >= k^2/2 + k),
  which gives the strongest size bound of the four.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .model import ConvexSet, Instance, Matching


@dataclass(frozen=True)
class Shape:
    """Canonical form of a non-crossing perfect matching on a cycle.

    Chords live on cyclic positions 1..2k.  Two chord diagrams describe
    the same shape when a rotation, possibly composed with a reflection,
    maps one onto the other; the stored representative is the
    lexicographically smallest sorted chord list over all 2k rotations
    and both reflections.
    """

    chords: tuple[tuple[int, int], ...]

    def __init__(self, chords: Iterable[tuple[int, int]]):
        object.__setattr__(self, "chords", _canonical_chords(chords))

    @property
    def size(self) -> int:
        return len(self.chords)


def _canonical_chords(chords: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    norm = sorted((min(c), max(c)) for c in chords)
    m = 2 * len(norm)
    flat = sorted(v for c in norm for v in c)
    if flat != list(range(1, m + 1)):
        raise ValueError(f"chords must perfectly match positions 1..{m}: {norm}")
    for (a, b), (c, d) in itertools.combinations(norm, 2):
        if a < c < b < d or c < a < d < b:
            raise ValueError(f"chords cross on the cycle: {(a, b)} vs {(c, d)}")
    best = None
    for direction in (1, -1):
        for s in range(m):
            mapped = sorted(
                tuple(sorted(((p - 1) * direction + s) % m + 1 for p in c)) for c in norm
            )
            if best is None or mapped < best:
                best = mapped
    return tuple(best)


def shape_of(matching: Matching, cset: ConvexSet) -> Shape:
    """Shape of a matching drawn on a convex set.

    The matched points are taken in the cyclic order of the set and
    renumbered 1..2k; the matching becomes a chord diagram on that cycle
    and is canonicalized.  Raises ValueError if the matching crosses
    itself on this set (its shape is undefined then).
    """
    labs = matching.labels()
    missing = labs - set(cset.order)
    if missing:
        raise ValueError(f"labels not present in the set: {sorted(missing)}")
    seq = [lab for lab in cset.order if lab in labs]
    rank = {lab: i + 1 for i, lab in enumerate(seq)}
    return Shape((rank[a], rank[b]) for a, b in matching.edges)


def is_non_nested(matching: Matching, cset: ConvexSet) -> bool:
    """True iff every edge joins cyclically adjacent matched points of cset."""
    labs = matching.labels()
    seq = [lab for lab in cset.order if lab in labs]
    m = len(seq)
    rank = {lab: i for i, lab in enumerate(seq)}
    return all((rank[a] - rank[b]) % m in (1, m - 1) for a, b in matching.edges)


def noncrossing_position_matchings(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All non-crossing perfect matchings of positions 1..m (m even).

    Chord crossing on the cycle coincides with interval interleaving on
    the line, so the classic split recursion enumerates them; there are
    Catalan(m/2) results.
    """
    if m % 2:
        raise ValueError("need an even number of positions")

    def rec(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not points:
            yield ()
            return
        first = points[0]
        for i in range(1, len(points), 2):
            left = points[1:i]
            right = points[i + 1 :]
            for ml in rec(left):
                for mr in rec(right):
                    yield ((first, points[i]),) + ml + mr

    return rec(tuple(range(1, m + 1)))


def all_shapes(k: int) -> list[Shape]:
    """The distinct k-chord shapes, lexicographically ordered."""
    found = {Shape(pm) for pm in noncrossing_position_matchings(2 * k)}
    return sorted(found, key=lambda s: s.chords)


# ---------------------------------------------------------------------------
# Circular monotone subsequences.

def _lis_prefix(vals: list[int], target: int) -> Optional[list[int]]:
    """Indices of an increasing subsequence of length ``target``, else None.

    Patience sorting with parent pointers; stops as soon as the target
    length is reached, returning the first such subsequence it can
    reconstruct.
    """
    import bisect

    tails: list[int] = []  # value of the smallest tail per length
    tails_idx: list[int] = []
    parent = [-1] * len(vals)
    for i, v in enumerate(vals):
        j = bisect.bisect_left(tails, v)
        if j == len(tails):
            tails.append(v)
            tails_idx.append(i)
        else:
            tails[j] = v
            tails_idx[j] = i
        parent[i] = tails_idx[j - 1] if j else -1
        if len(tails) >= target:
            out = []
            cur = tails_idx[target - 1]
            while cur != -1:
                out.append(cur)
                cur = parent[cur]
            return out[::-1]
    return None


def circular_monotone_subsequence(cset: ConvexSet, target_len: int) -> list[int]:
    """Cyclically monotone subsequence of the set's label order.

    Returns ``target_len`` labels that appear consecutively ordered both
    along the set's cyclic order (read from some start, in one of the two
    directions) and around the label cycle 1..n (from some starting
    value).  Equivalently: the cyclic order of the returned labels in
    this set agrees with their cyclic order by label value, up to
    direction.  Tries increasing before decreasing, reading starts
    0..n-1 in order, and returns the first hit.

    Existence is guaranteed whenever n >= (target_len - 2)^2 + 2; raises
    ValueError if nothing is found.
    """
    n = cset.n
    if target_len < 1 or target_len > n:
        raise ValueError(f"target length {target_len} out of range for n={n}")
    for direction in (1, -1):
        seq = cset.order if direction == 1 else tuple(reversed(cset.order))
        for r in range(n):
            rot = seq[r:] + seq[:r]
            for shift in range(n):
                vals = [(v - 1 - shift) % n for v in rot]
                idx = _lis_prefix(vals, target_len)
                if idx is not None:
                    return [rot[i] for i in idx]
    raise ValueError(
        f"no cyclically monotone subsequence of length {target_len} (n={n})"
    )


def _two_convex(inst: Instance) -> tuple[ConvexSet, ConvexSet]:
    if inst.num_sets != 2 or not all(isinstance(s, ConvexSet) for s in inst.sets):
        raise ValueError("this construction needs exactly two convex sets")
    return inst.sets  # type: ignore[return-value]


def same_shape_matching(inst: Instance, shape: Shape) -> Matching:
    """Compatible k-matching realizing ``shape`` in both convex sets.

    Finds 2k labels whose cyclic order agrees in both sets (up to
    direction) via a circular monotone subsequence of the relative
    order, then draws the requested chord diagram on them.  Requires
    n >= (2k-2)^2 + 2.
    """
    s1, s2 = _two_convex(inst)
    k = shape.size
    need = (2 * k - 2) ** 2 + 2
    if inst.n < need:
        raise ValueError(f"need n >= {need} for a {k}-chord shape, got n={inst.n}")
    pos1 = s1.positions()
    relative = ConvexSet(pos1[lab] + 1 for lab in s2.order)
    sub = circular_monotone_subsequence(relative, 2 * k)
    labels = [s1.order[v - 1] for v in sub]
    return Matching((labels[i - 1], labels[j - 1]) for i, j in shape.chords)


def block_non_nested_matching(inst: Instance, k: int) -> Matching:
    """Compatible k-matching, non-nested in both sets, one edge per block.

    The perimeter of the second set is split into k contiguous blocks of
    k+1 points each (points past position k(k+1) are ignored).  Points
    are then processed along the first set's order; the first time a
    block holds two processed points they are matched, all other
    processed points are discarded, and the block is closed.  Each edge
    drawn discards at most one point from every other block, so every
    block eventually produces its edge.  Requires n >= k^2 + k.
    """
    s1, s2 = _two_convex(inst)
    if k < 1:
        raise ValueError("k must be positive")
    if inst.n < k * (k + 1):
        raise ValueError(f"need n >= {k * (k + 1)} for {k} blocks, got n={inst.n}")

    block_of = {}
    for b in range(k):
        for t in range(k + 1):
            block_of[s2.order[b * (k + 1) + t]] = b

    block_done = [False] * k
    pool: list[int] = []  # processed, not yet matched or discarded
    edges: list[tuple[int, int]] = []
    for x in s1.order:
        b = block_of.get(x)
        if b is None or block_done[b]:
            continue
        partner = next((p for p in pool if block_of[p] == b), None)
        if partner is None:
            pool.append(x)
            continue
        edges.append((min(partner, x), max(partner, x)))
        block_done[b] = True
        pool = []  # everything processed so far is either matched or discarded
    if len(edges) != k:
        raise AssertionError(f"block procedure produced {len(edges)} of {k} edges")
    return Matching(edges)


def _rball_radius(m: int) -> int:
    """Smallest r with m <= 2r^2 + 2r (ball-covering pigeonhole radius)."""
    r = 1
    while 2 * r * r + 2 * r < m:
        r += 1
    return r


def _shorter_arc_interior(active: list[int], x: int, y: int) -> set[int]:
    px, py = active.index(x), active.index(y)
    if px > py:
        px, py = py, px
    inner = active[px + 1 : py]
    outer = active[py + 1 :] + active[:px]
    return set(inner) if len(inner) <= len(outer) else set(outer)


def rball_matching(inst: Instance) -> Matching:
    """Compatible matching via the close-pair recursion on two convex sets.

    View the pair of cyclic orders as a permutation matrix over the
    remaining points.  Covering the matrix with L1 balls of the minimal
    radius r satisfying m <= 2r^2 + 2r forces two 1-cells within cyclic
    L1 distance 2r; the corresponding labels are matched, the points on
    the shorter arcs between them are discarded in both sets (at most
    2r - 2 in total, leaving everything else on the far side of the new
    edge), and the process recurses.  Produces at least k edges whenever
    n >= k^2/2 + k.
    """
    s1, s2 = _two_convex(inst)
    act1 = list(s1.order)
    act2 = list(s2.order)
    edges: list[tuple[int, int]] = []
    while len(act1) >= 2:
        m = len(act1)
        labs = sorted(act1)
        rank = {lab: i for i, lab in enumerate(labs)}
        p1 = np.empty(m, dtype=np.int64)
        p2 = np.empty(m, dtype=np.int64)
        for pos, lab in enumerate(act1):
            p1[rank[lab]] = pos
        for pos, lab in enumerate(act2):
            p2[rank[lab]] = pos

        d1 = np.abs(p1[:, None] - p1[None, :])
        d1 = np.minimum(d1, m - d1)
        d2 = np.abs(p2[:, None] - p2[None, :])
        d2 = np.minimum(d2, m - d2)
        dist = d1 + d2
        iu, ju = np.triu_indices(m, 1)
        flat = dist[iu, ju]
        pick = int(np.argmin(flat))  # first minimum: lexicographic label pair
        x, y = labs[int(iu[pick])], labs[int(ju[pick])]

        r = _rball_radius(m)
        if int(flat[pick]) > 2 * r:
            raise AssertionError("pigeonhole violated: no close pair at radius r")

        drop = {x, y}
        drop |= _shorter_arc_interior(act1, x, y)
        drop |= _shorter_arc_interior(act2, x, y)
        edges.append((min(x, y), max(x, y)))
        act1 = [l for l in act1 if l not in drop]
        act2 = [l for l in act2 if l not in drop]
    return Matching(edges)
