"""Crossing semantics, the compatibility predicate, and the conflict graph.

A matching is compatible with an instance when its straight-line drawing
is crossing-free on every labeled set simultaneously.  On a convex set,
two disjoint edges cross exactly when their endpoints interleave in the
cyclic order; on a coordinate set the exact segment test decides.

The conflict graph has one vertex per candidate edge {a, b} and joins
two candidates whenever they share an endpoint or cross in at least one
set.  Compatible matchings are exactly the independent sets of this
graph, which is what the solver exploits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .geom import segments_cross
from .model import ConvexSet, Instance, LabeledSet, Matching, PlanarSet


def all_candidate_edges(n: int) -> list[tuple[int, int]]:
    """All C(n,2) label pairs (a, b) with a < b in lexicographic order."""
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def edges_cross_in_set(e: tuple[int, int], f: tuple[int, int], s: LabeledSet) -> bool:
    """True iff the vertex-disjoint edges e and f cross when drawn on s."""
    if isinstance(s, ConvexSet):
        pos = s.positions()
        return _convex_cross(pos, s.n, e, f)
    coords = s.coords()
    return segments_cross(coords[e[0]], coords[e[1]], coords[f[0]], coords[f[1]])


def _convex_cross(pos: dict[int, int], n: int, e, f) -> bool:
    # Interleaving test: exactly one endpoint of f lies on the open
    # clockwise arc from e[0] to e[1].
    pa = pos[e[0]]
    span = (pos[e[1]] - pa) % n
    c_in = 0 < (pos[f[0]] - pa) % n < span
    d_in = 0 < (pos[f[1]] - pa) % n < span
    return c_in != d_in


def is_compatible(inst: Instance, m: Matching) -> bool:
    """True iff no two edges of m cross in any set of the instance."""
    edges = m.edges
    for s in inst.sets:
        for e, f in itertools.combinations(edges, 2):
            if edges_cross_in_set(e, f, s):
                return False
    return True


@dataclass(frozen=True)
class ConflictGraph:
    """Conflict relation between all candidate edges of an instance.

    ``adj[i]`` is a bitset over vertex indices: bit j is set when
    candidate edges i and j share a label or cross somewhere.  The
    relation is symmetric and irreflexive.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.edges)

    def index(self, e: tuple[int, int]) -> int:
        a, b = min(e), max(e)
        # Lexicographic rank of (a, b) among all pairs of 1..n.
        return (a - 1) * self.n - a * (a - 1) // 2 + (b - a - 1)

    def are_adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)


def build_conflict_graph(inst: Instance) -> ConflictGraph:
    """Conflict graph over all candidate edges of the instance."""
    n = inst.n
    edges = all_candidate_edges(n)
    v = len(edges)
    adj = [0] * v

    convex = [(s.positions(), s.n) for s in inst.sets if isinstance(s, ConvexSet)]
    planar = [s.coords() for s in inst.sets if isinstance(s, PlanarSet)]

    for i in range(v):
        a, b = edges[i]
        row = 0
        for j in range(i + 1, v):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                row |= 1 << j
                continue
            hit = False
            for pos, nn in convex:
                if _convex_cross(pos, nn, (a, b), (c, d)):
                    hit = True
                    break
            if not hit:
                for coords in planar:
                    if segments_cross(coords[a], coords[b], coords[c], coords[d]):
                        hit = True
                        break
            if hit:
                row |= 1 << j
        adj[i] |= row
        # Mirror the upper triangle into the lower one.
        while row:
            low = row & -row
            adj[low.bit_length() - 1] |= 1 << i
            row ^= low

    return ConflictGraph(n=n, edges=tuple(edges), adj=tuple(adj))
