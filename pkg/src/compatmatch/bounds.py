"""Bound evaluators, exact counting, the ccm search, and forcing checkers.

All counting is exact big-integer arithmetic; nothing here rounds.  The
headline computation is ``ccm_search``: the minimum, over all labelings
of the second of two convex n-point sets, of the maximum compatible
matching size.  Fixing the first set to the identity labeling is
lossless, and the remaining permutations are reduced to one canonical
representative per orbit of the symmetries that leave the answer
unchanged: composing with rotations/reflections of either cyclic order
and inverting the permutation.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, log
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .conflict import all_candidate_edges, edges_cross_in_set, is_compatible
from .geom import COUNTERCLOCKWISE, convex_hull, orientation
from .model import ConvexSet, Instance, LabeledSet, Matching, PlanarSet
from .solver import max_compatible_matching

Edge = tuple[int, int]

# Proportion of convex 4-tuples: every 5 points contain one, so 1/5 is a
# universal floor; point sets with many crossings do better.  The best
# known asymptotic floor (tied to the rectilinear crossing constant) is
# just under 0.3800 and can be passed explicitly where it applies.
UNIVERSAL_ALPHA_LOWER = Fraction(1, 5)
RECTILINEAR_ALPHA_LOWER = Fraction(37997256, 10**8)


# ---------------------------------------------------------------------------
# Closed-form guarantees.

@dataclass(frozen=True)
class GuaranteedSizes:
    """Largest k each constructive guarantee certifies for given n (and l)."""

    same_shape: int       # any k-chord shape in both sets:  n >= (2k-2)^2 + 2
    greedy_two_sets: int  # any maximal matching, 2 sets:    n >= k^2 + 2k - 1
    non_nested: int       # one edge per block:              n >= k^2 + k
    close_pair: int       # ball-covering recursion:         n >= k^2/2 + k
    greedy_multi: int     # any maximal matching, l sets:    n >= k^l + 2k - 1


def _largest_k(pred) -> int:
    k = 1
    while pred(k + 1):
        k += 1
    return k


def lb_formulas(n: int, l: int) -> GuaranteedSizes:
    """Largest guaranteed matching size under each threshold formula."""
    if n < 2 or l < 1:
        raise ValueError("need n >= 2 and l >= 1")
    return GuaranteedSizes(
        same_shape=_largest_k(lambda k: (2 * k - 2) ** 2 + 2 <= n),
        greedy_two_sets=_largest_k(lambda k: k * k + 2 * k - 1 <= n),
        non_nested=_largest_k(lambda k: k * k + k <= n),
        close_pair=_largest_k(lambda k: k * k + 2 * k <= 2 * n),
        greedy_multi=_largest_k(lambda k: k**l + 2 * k - 1 <= n),
    )


# ---------------------------------------------------------------------------
# Exact counting for the probabilistic upper bound.

def count_plane_k_matchings_convex(n: int, k: int) -> int:
    """Number of plane k-matchings on n convex points.

    Choose the 2k matched points, then one of Catalan(k) non-crossing
    perfect matchings on them: C(n, 2k) * C(2k, k) / (k + 1), exactly.
    """
    if k < 0 or 2 * k > n:
        raise ValueError(f"need 0 <= 2k <= n, got n={n} k={k}")
    return comb(n, 2 * k) * comb(2 * k, k) // (k + 1)


def labelings_realizing_pair(n: int, k: int) -> int:
    """Labelings of the second set turning two fixed plane k-matchings
    into a compatible pair: (n-2k)! ways to label the unmatched points,
    k! to pair up the edges, 2^k to orient each edge."""
    if k < 0 or 2 * k > n:
        raise ValueError(f"need 0 <= 2k <= n, got n={n} k={k}")
    return factorial(n - 2 * k) * factorial(k) * (1 << k)


def _iroot_floor(x: int, k: int) -> int:
    if x < 0 or k < 1:
        raise ValueError("bad root arguments")
    if x == 0:
        return 0
    r = 1 << -(-x.bit_length() // k)  # certainly >= the true root
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def _iroot_ceil(x: int, k: int) -> int:
    r = _iroot_floor(x, k)
    return r if r**k == x else r + 1


@dataclass(frozen=True)
class ThresholdReport:
    """Matching-size thresholds beyond which some labeling defeats every
    compatible matching, plus the counting certificate for two convex sets."""

    k_convex: int                      # ceil(4 * n^(2/3))
    k_general: int                     # ceil(125 * n^(2/(l+1)))
    inequality_holds: Optional[bool]   # f(k)^2 g(k) < n!  (two convex sets)
    convex_vacuous: bool               # k_convex already exceeds n/2


def prob_threshold(n: int, l: int) -> ThresholdReport:
    """Evaluate the probabilistic size thresholds exactly.

    k_convex = ceil(4 n^(2/3)) via integer cube root of 64 n^2;
    k_general = ceil(125 n^(2/(l+1))) likewise.  For two sets the
    counting inequality f(k)^2 g(k) < n! is checked with exact big
    integers at k = k_convex; when that k already exceeds n/2 the report
    is flagged vacuous (no k-matching exists at all).
    """
    if n < 1 or l < 2:
        raise ValueError("need n >= 1 and l >= 2")
    k_convex = _iroot_ceil(64 * n * n, 3)
    k_general = _iroot_ceil(125 ** (l + 1) * n * n, l + 1)
    vacuous = 2 * k_convex > n
    holds: Optional[bool] = None
    if l == 2:
        if vacuous:
            holds = True  # zero k-matchings: the count comparison is trivial
        else:
            f = count_plane_k_matchings_convex(n, k_convex)
            holds = f * f * labelings_realizing_pair(n, k_convex) < factorial(n)
    return ThresholdReport(
        k_convex=k_convex,
        k_general=k_general,
        inequality_holds=holds,
        convex_vacuous=vacuous,
    )


# ---------------------------------------------------------------------------
# The ccm search.

@dataclass(frozen=True)
class CcmRecord:
    n: int
    ccm: int
    witness_permutation: tuple[int, ...]
    labelings_examined: int


def _dihedral_position_maps(n: int) -> list[np.ndarray]:
    maps = []
    base = np.arange(n)
    for s in range(n):
        maps.append(((base + s) % n).astype(np.int8))
        maps.append(((s - base) % n).astype(np.int8))
    return maps


def canonical_labelings(n: int, chunk_size: int = 2_000_000) -> list[tuple[int, ...]]:
    """One representative per orbit of second-set labelings.

    Two permutations give the same maximum compatible matching when they
    differ by rotations/reflections of either cyclic order or by
    inversion; the representative kept is the lexicographically smallest
    permutation of its orbit.  Returned in lexicographic order.
    """
    if n == 1:
        return [(1,)]
    maps = _dihedral_position_maps(n)
    pow_vec = (n ** np.arange(n - 1, -1, -1)).astype(np.int64)
    reps: list[tuple[int, ...]] = []
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, chunk_size))
        if not block:
            break
        perms = np.array(block, dtype=np.int8)
        own = perms.astype(np.int64) @ pow_vec
        best = own.copy()
        inverse = np.argsort(perms, axis=1).astype(np.int8)
        for variant in (perms, inverse):
            for pos_map in maps:
                composed = variant[:, pos_map]
                for val_map in maps:
                    cand = val_map[composed].astype(np.int64) @ pow_vec
                    np.minimum(best, cand, out=best)
        for row in perms[own == best]:
            reps.append(tuple(int(x) + 1 for x in row))
    return reps


def _scan_labelings(
    n: int, perms: Sequence[tuple[int, ...]]
) -> tuple[Optional[int], Optional[tuple[int, ...]]]:
    """Min optimum over the given labelings, with its first achiever.

    Each solve may stop early once it matches the running minimum, since
    such labelings cannot improve it; anything strictly below the running
    minimum is solved exactly.
    """
    ident = tuple(range(1, n + 1))
    cur: Optional[int] = None
    wit: Optional[tuple[int, ...]] = None
    for perm in perms:
        inst = Instance(n, (ConvexSet(ident), ConvexSet(perm)))
        res = max_compatible_matching(inst, good_enough=cur)
        if cur is None or res.size < cur:
            cur, wit = res.size, perm
    return cur, wit


def _scan_chunk(payload):
    n, perms = payload
    return _scan_labelings(n, perms)


_CHUNK = 64  # fixed chunk size keeps results independent of the worker count


def ccm_search(n: int, mode: str = "reduced", jobs: int = 1) -> CcmRecord:
    """Minimum over second-set labelings of the maximum compatible matching.

    The first convex set is fixed to the identity labeling (lossless).
    ``full`` mode iterates all n! second labelings (guarded to n <= 10);
    ``reduced`` mode iterates one canonical representative per symmetry
    orbit (guarded to n <= 12; n = 11, 12 take long).  The witness is
    the lexicographically smallest orbit-minimal labeling achieving the
    minimum, identical in both modes and for any ``jobs``.
    """
    if mode not in ("full", "reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "full" and not 1 <= n <= 10:
        raise ValueError(f"full mode is guarded to n <= 10, got {n}")
    if mode == "reduced" and not 1 <= n <= 12:
        raise ValueError(f"reduced mode is guarded to n <= 12, got {n}")

    if mode == "reduced":
        labelings: Iterable[tuple[int, ...]] = canonical_labelings(n)
    else:
        labelings = itertools.permutations(range(1, n + 1))

    examined = 0
    best: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None

    def absorb(result):
        nonlocal best, witness
        size, wit = result
        if size is not None and (best is None or size < best):
            best, witness = size, wit

    chunks = []
    it = iter(labelings)
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            break
        examined += len(chunk)
        chunks.append((n, chunk))

    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_scan_chunk, chunks):
                absorb(result)
    else:
        for payload in chunks:
            absorb(_scan_chunk(payload))

    assert best is not None and witness is not None
    return CcmRecord(
        n=n, ccm=best, witness_permutation=witness, labelings_examined=examined
    )


# ---------------------------------------------------------------------------
# Forcing-family checkers.

def independent_edge_pairs(n: int) -> list[tuple[Edge, Edge]]:
    """All unordered pairs of vertex-disjoint edges, lexicographic."""
    edges = all_candidate_edges(n)
    return [
        (e, f) for e, f in itertools.combinations(edges, 2) if not set(e) & set(f)
    ]


def _convex_cross_mask(order: tuple[int, ...], quads: np.ndarray) -> np.ndarray:
    """Vectorized interleaving test: quads columns are labels a, b, c, d."""
    n = len(order)
    pos = np.empty(n + 1, dtype=np.int64)
    for i, lab in enumerate(order):
        pos[lab] = i
    pa = pos[quads[:, 0]]
    span = (pos[quads[:, 1]] - pa) % n
    rc = (pos[quads[:, 2]] - pa) % n
    rd = (pos[quads[:, 3]] - pa) % n
    return ((0 < rc) & (rc < span)) != ((0 < rd) & (rd < span))


def verify_force_family(
    sets: Sequence[LabeledSet],
) -> tuple[bool, Optional[tuple[Edge, Edge]]]:
    """Does every vertex-disjoint labeled edge pair cross in some set?

    True means the largest matching compatible with the whole family is a
    single edge.  On False, the first (lexicographic) pair compatible
    with every set is returned as witness.
    """
    if not sets:
        raise ValueError("empty family")
    ns = {s.n for s in sets}
    if len(ns) != 1:
        raise ValueError("family sets disagree on n")
    n = ns.pop()
    pairs = independent_edge_pairs(n)
    if not pairs:
        return True, None
    quads = np.array([(e[0], e[1], f[0], f[1]) for e, f in pairs], dtype=np.int64)
    alive = np.ones(len(pairs), dtype=bool)
    for s in sets:
        if isinstance(s, ConvexSet):
            alive &= ~_convex_cross_mask(s.order, quads)
        else:
            coords = s.coords()
            for i in np.nonzero(alive)[0]:
                e, f = pairs[i]
                if edges_cross_in_set(e, f, s):
                    alive[i] = False
        if not alive.any():
            return True, None
    first = int(np.nonzero(alive)[0][0])
    return False, pairs[first]


def _hull_edges(s: LabeledSet) -> list[Edge]:
    if isinstance(s, ConvexSet):
        cyc = s.order
    else:
        pts = [p for _, p in s.points]
        walk = convex_hull(pts)
        cyc = tuple(s.points[i][0] for i in walk)
    m = len(cyc)
    return [
        (min(cyc[i], cyc[(i + 1) % m]), max(cyc[i], cyc[(i + 1) % m]))
        for i in range(m)
    ]


def _same_side_split(s: LabeledSet, a: int, b: int, x: int) -> bool:
    """Which side of the a-b line the point labeled x falls on."""
    if isinstance(s, ConvexSet):
        pos = s.positions()
        n = s.n
        return 0 < (pos[x] - pos[a]) % n < (pos[b] - pos[a]) % n
    coords = s.coords()
    return orientation(coords[a], coords[b], coords[x]) == COUNTERCLOCKWISE


def two_matching_exists(inst: Instance) -> Matching:
    """Compatible 2-matching for k+1 sets of n = 2^k + 3 points.

    Take the lexicographically smallest hull edge ab of the last set;
    every other point gets a side-of-line signature across the first k
    sets, and with 2^k + 1 points over 2^k signatures two of them, x and
    y, agree everywhere.  Then {ab, xy} never crosses: not in the first k
    sets (same side), not in the last (ab is a hull edge).
    """
    k = inst.num_sets - 1
    if k < 1:
        raise ValueError("need at least two sets")
    if inst.n != 2**k + 3:
        raise ValueError(f"need n = 2^{k} + 3 = {2**k + 3}, got n={inst.n}")
    a, b = min(_hull_edges(inst.sets[-1]))
    seen: dict[tuple[bool, ...], int] = {}
    pair: Optional[Edge] = None
    for x in range(1, inst.n + 1):
        if x in (a, b):
            continue
        sig = tuple(_same_side_split(s, a, b, x) for s in inst.sets[:-1])
        if sig in seen:
            pair = (seen[sig], x)
            break
        seen[sig] = x
    assert pair is not None, "pigeonhole violated"
    m = Matching([(a, b), pair])
    assert is_compatible(inst, m)
    return m


def force_bounds(
    n: int, alpha_lower: Union[Fraction, float] = UNIVERSAL_ALPHA_LOWER
) -> tuple[int, int]:
    """Bracket on the number of labeled copies needed to force one edge.

    Lower bound: k + 2 for the largest k with 2^k + 3 <= n (a hull-edge
    plus pigeonhole construction finds a 2-matching against any k+1
    labelings).  Upper bound: ceil(log_c(3 C(n, 4))) with
    c = (1 - alpha/3)^{ -1}, alpha being a lower bound on the proportion
    of convex 4-tuples (1/5 universally; 1 for convex position).  The
    ceiling is resolved by exact rational powering.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    alpha = Fraction(alpha_lower)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must be in (0, 1]")
    lower = (n - 3).bit_length() - 1 + 2

    target = 3 * comb(n, 4)
    c = 1 / (1 - alpha / 3)
    u = max(1, int(log(target) / log(float(c))) - 2)
    power = c**u
    while power < target:
        u += 1
        power *= c
    while u > 1 and power / c >= target:
        u -= 1
        power /= c
    return lower, u
