"""Exact and greedy computation of compatible matchings.

The exact solver runs branch and bound for a maximum independent set on
the conflict graph: the branching vertex is the candidate edge of
maximum conflict degree in the residual graph (ties to the lowest edge
index), and the upper bound is a greedy clique cover of the residual
graph, since an independent set meets every clique at most once.  The
brute-force solver is an intentionally independent oracle that recurses
over all compatible matchings directly on the crossing predicate.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .conflict import all_candidate_edges, build_conflict_graph, edges_cross_in_set
from .model import Instance, Matching


@dataclass(frozen=True)
class SolveResult:
    size: int
    matching: Matching
    optimal: bool
    nodes_explored: int


def max_compatible_matching(inst: Instance, good_enough: Optional[int] = None) -> SolveResult:
    """Maximum compatible matching via branch and bound, with witness.

    If ``good_enough`` is given, the search may stop as soon as it holds a
    matching of at least that size; the result is then a valid witness
    but is only guaranteed optimal when ``optimal`` says so.
    """
    g = build_conflict_graph(inst)
    v_count = g.num_vertices
    adj = g.adj
    full = (1 << v_count) - 1

    # Greedy independent set in lexicographic vertex order seeds the incumbent.
    best: list[int] = []
    r = full
    while r:
        v = (r & -r).bit_length() - 1
        best.append(v)
        r &= ~(adj[v] | (1 << v))
    best_size = len(best)

    nodes = 0
    aborted = False
    if good_enough is not None and best_size >= good_enough:
        aborted = True

    if not aborted and v_count:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * v_count + 100))
        chosen: list[int] = []

        def expand(residual: int, size: int) -> None:
            nonlocal best, best_size, nodes, aborted
            if aborted:
                return
            nodes += 1
            if residual == 0:
                if size > best_size:
                    best_size = size
                    best = chosen.copy()
                    if good_enough is not None and best_size >= good_enough:
                        aborted = True
                return
            budget = best_size - size
            if residual.bit_count() <= budget:
                return
            # Greedy clique cover of the residual graph; an independent set
            # picks at most one vertex per clique, so the class count bounds
            # what is still achievable.  Stop covering once the bound can no
            # longer prune.
            count = 0
            u = residual
            while u:
                if count > budget:
                    break
                low = u & -u
                vi = low.bit_length() - 1
                cand = u & adj[vi]
                clique = low
                while cand:
                    c = cand & -cand
                    clique |= c
                    cand &= adj[c.bit_length() - 1]
                u &= ~clique
                count += 1
            if count <= budget:
                return

            # Branch on the residual vertex of maximum conflict degree.
            pick = -1
            pick_deg = -1
            u = residual
            while u:
                low = u & -u
                vi = low.bit_length() - 1
                deg = (adj[vi] & residual).bit_count()
                if deg > pick_deg:
                    pick_deg = deg
                    pick = vi
                u ^= low
            if pick_deg == 0:
                # Residual is conflict-free: take all of it.
                size += residual.bit_count()
                if size > best_size:
                    best_size = size
                    taken = chosen.copy()
                    u = residual
                    while u:
                        low = u & -u
                        taken.append(low.bit_length() - 1)
                        u ^= low
                    best = taken
                    if good_enough is not None and best_size >= good_enough:
                        aborted = True
                return

            chosen.append(pick)
            expand(residual & ~(adj[pick] | (1 << pick)), size + 1)
            chosen.pop()
            if aborted:
                return
            expand(residual & ~(1 << pick), size)

        expand(full, 0)

    matching = Matching(g.edges[i] for i in best)
    return SolveResult(
        size=best_size, matching=matching, optimal=not aborted, nodes_explored=nodes
    )


def brute_force_max_matching(inst: Instance) -> SolveResult:
    """Exact optimum by exhaustive recursion over all compatible matchings.

    Deliberately independent of the conflict graph and of the branch and
    bound machinery; guards against instances beyond desk scale.
    """
    if inst.n > 10:
        raise ValueError(f"brute force is guarded to n <= 10, got n={inst.n}")
    sets = inst.sets
    best: list[tuple[int, int]] = []
    nodes = 0

    def rec(avail: tuple[int, ...], current: list[tuple[int, int]]) -> None:
        nonlocal best, nodes
        nodes += 1
        if len(current) > len(best):
            best = current.copy()
        if not avail:
            return
        a = avail[0]
        rest = avail[1:]
        rec(rest, current)
        for i, b in enumerate(rest):
            e = (a, b)
            ok = True
            for f in current:
                for s in sets:
                    if edges_cross_in_set(e, f, s):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                current.append(e)
                rec(rest[:i] + rest[i + 1 :], current)
                current.pop()

    rec(tuple(range(1, inst.n + 1)), [])
    return SolveResult(
        size=len(best), matching=Matching(best), optimal=True, nodes_explored=nodes
    )


def greedy_maximal_matching(
    inst: Instance, order: Optional[Sequence[tuple[int, int]]] = None
) -> SolveResult:
    """Greedy maximal compatible matching.

    Repeatedly adds the first candidate edge (in ``order``, default
    lexicographic) that is vertex-disjoint from and crossing-free with
    the matching so far, until no edge can be added.  The result is
    maximal but not necessarily maximum.
    """
    lex = all_candidate_edges(inst.n)
    if order is None:
        cands = lex
    else:
        cands = [(min(e), max(e)) for e in order]
        if sorted(cands) != lex:
            raise ValueError("tie-break order must list every candidate edge exactly once")
    sets = inst.sets
    chosen: list[tuple[int, int]] = []
    steps = 0
    while cands:
        e = cands[0]
        chosen.append(e)
        kept = []
        for f in cands[1:]:
            steps += 1
            if e[0] in f or e[1] in f:
                continue
            if any(edges_cross_in_set(e, f, s) for s in sets):
                continue
            kept.append(f)
        cands = kept
    return SolveResult(
        size=len(chosen), matching=Matching(chosen), optimal=False, nodes_explored=steps
    )
