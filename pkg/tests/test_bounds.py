import itertools
import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from compatmatch.bounds import (
    canonical_labelings,
    ccm_search,
    count_plane_k_matchings_convex,
    force_bounds,
    labelings_realizing_pair,
    lb_formulas,
    prob_threshold,
    two_matching_exists,
    verify_force_family,
)
from compatmatch.conflict import is_compatible
from compatmatch.generators import convex_polygon_points, random_labeling, relabel_planar
from compatmatch.model import ConvexSet, Instance, Matching
from compatmatch.solver import brute_force_max_matching
from tests.helpers import FORCING_TRIPLE_4


def test_lb_formulas_examples():
    g = lb_formulas(12, 2)
    assert (g.same_shape, g.greedy_two_sets, g.non_nested, g.close_pair) == (2, 2, 3, 4)
    assert lb_formulas(11, 3).greedy_multi == 2
    g2 = lb_formulas(2, 2)
    assert (
        g2.same_shape,
        g2.greedy_two_sets,
        g2.non_nested,
        g2.close_pair,
        g2.greedy_multi,
    ) == (1, 1, 1, 1, 1)


def all_plane_partial_matchings(points):
    """Enumeration oracle: every non-crossing partial matching, exactly once.

    Non-crossing chords of a convex polygon interleave exactly as
    intervals on the cut-open line, so the linear recursion is faithful.
    """
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    yield from all_plane_partial_matchings(rest)
    for idx in range(len(rest)):
        inside, outside = rest[:idx], rest[idx + 1 :]
        for mi in all_plane_partial_matchings(inside):
            for mo in all_plane_partial_matchings(outside):
                yield ((first, rest[idx]),) + mi + mo


def test_count_plane_matchings_trivia():
    assert count_plane_k_matchings_convex(4, 1) == 6
    assert count_plane_k_matchings_convex(4, 2) == 2
    with pytest.raises(ValueError):
        count_plane_k_matchings_convex(4, 3)


def test_count_plane_matchings_against_enumeration():
    n = 8
    counts = Counter(len(m) for m in all_plane_partial_matchings(tuple(range(1, n + 1))))
    for k in range(0, n // 2 + 1):
        assert counts.get(k, 0) == count_plane_k_matchings_convex(n, k)


def test_labelings_realizing_pair_values():
    assert labelings_realizing_pair(4, 2) == 8
    assert labelings_realizing_pair(4, 1) == 4


def test_counting_bound_dominates_enumeration():
    # Every labeling of the second convex 6-set admitting a compatible
    # 2-matching is counted at most once per (matching, matching, gluing)
    # triple, so the product bound must dominate the true count.
    n, k = 6, 2
    ident = ConvexSet(range(1, n + 1))
    admitting = 0
    for perm in itertools.permutations(range(1, n + 1)):
        inst = Instance(n, (ident, ConvexSet(perm)))
        if brute_force_max_matching(inst).size >= k:
            admitting += 1
    bound = count_plane_k_matchings_convex(n, k) ** 2 * labelings_realizing_pair(n, k)
    assert admitting <= bound
    assert admitting == math.factorial(6)  # every labeling of 6 admits 2 edges


def test_prob_threshold_examples():
    t = prob_threshold(1000, 2)
    assert t.k_convex == 400
    assert t.k_general == 12500
    assert t.inequality_holds is True
    assert not t.convex_vacuous

    t4 = prob_threshold(4, 2)
    assert t4.k_convex == 11  # ceil(4 * 4^(2/3)) = ceil(10.08)
    assert t4.convex_vacuous
    assert t4.inequality_holds is True

    t3 = prob_threshold(1000, 3)
    assert t3.inequality_holds is None


# ---------------------------------------------------------------------------
# ccm search.

TABLE_SMALL = {4: 2, 5: 2, 6: 2, 7: 3}


def test_ccm_reduced_matches_table_small():
    for n, want in TABLE_SMALL.items():
        rec = ccm_search(n, mode="reduced")
        assert rec.ccm == want
        assert rec.labelings_examined == len(canonical_labelings(n))
        # witness achieves the minimum
        inst = Instance(
            n, (ConvexSet(range(1, n + 1)), ConvexSet(rec.witness_permutation))
        )
        assert brute_force_max_matching(inst).size == want


def test_ccm_reduced_equals_full():
    for n in range(2, 8):
        full = ccm_search(n, mode="full")
        red = ccm_search(n, mode="reduced")
        assert full.ccm == red.ccm
        assert full.witness_permutation == red.witness_permutation
        assert full.labelings_examined == math.factorial(n)


def test_ccm_jobs_deterministic():
    a = ccm_search(6, mode="reduced", jobs=1)
    b = ccm_search(6, mode="reduced", jobs=4)
    assert a == b


def test_ccm_guards():
    with pytest.raises(ValueError):
        ccm_search(11, mode="full")
    with pytest.raises(ValueError):
        ccm_search(13, mode="reduced")
    with pytest.raises(ValueError):
        ccm_search(5, mode="fast")


def test_canonical_labelings_are_orbit_minimal():
    # every orbit representative is lex-minimal under the symmetry group
    n = 5
    reps = set(canonical_labelings(n))
    rots = [tuple((i + s) % n for i in range(n)) for s in range(n)]
    refl = [tuple((s - i) % n for i in range(n)) for s in range(n)]
    group = rots + refl
    seen = set()
    for perm in itertools.permutations(range(n)):
        orbit_min = None
        inv = tuple(sorted(range(n), key=lambda i: perm[i]))
        for variant in (perm, inv):
            for b in group:
                comp = tuple(variant[b[i]] for i in range(n))
                for a in group:
                    cand = tuple(a[v] for v in comp)
                    if orbit_min is None or cand < orbit_min:
                        orbit_min = cand
        canon = tuple(v + 1 for v in orbit_min)
        seen.add(canon)
        if tuple(v + 1 for v in perm) in reps:
            assert canon == tuple(v + 1 for v in perm)
    assert seen == reps


# ---------------------------------------------------------------------------
# Forcing checkers.

def test_verify_force_family_examples():
    ok, _ = verify_force_family(list(FORCING_TRIPLE_4))
    assert ok
    for drop in range(3):
        pair = [s for i, s in enumerate(FORCING_TRIPLE_4) if i != drop]
        ok, witness = verify_force_family(pair)
        assert not ok and witness is not None
        e, f = witness
        inst = Instance(4, tuple(pair))
        assert is_compatible(inst, Matching([e, f]))
    ok, witness = verify_force_family([ConvexSet(range(1, 7))])
    assert not ok and witness == ((1, 2), (3, 4))


def test_two_matching_exists_small():
    rng = random.Random(1)
    # two labelings of five points: a compatible 2-matching always exists
    poly = convex_polygon_points(5)
    for _ in range(50):
        sets = [
            relabel_planar(poly, random_labeling(5, rng.randrange(10**9)))
            for _ in range(2)
        ]
        inst = Instance(5, tuple(sets))
        m = two_matching_exists(inst)
        assert m.size == 2 and is_compatible(inst, m)
    # three convex labelings of seven points
    for _ in range(50):
        sets = [ConvexSet(random_labeling(7, rng.randrange(10**9))) for _ in range(3)]
        inst = Instance(7, tuple(sets))
        m = two_matching_exists(inst)
        assert m.size == 2 and is_compatible(inst, m)


def test_two_matching_guards():
    with pytest.raises(ValueError):
        two_matching_exists(Instance(6, (ConvexSet(range(1, 7)), ConvexSet(range(1, 7)))))


def test_force_bounds():
    lo, hi = force_bounds(5)
    assert lo == 3
    assert lo <= 15 <= hi  # the triangular-hull five-point set needs exactly 15
    lo16, hi16 = force_bounds(16, Fraction(1))
    assert (lo16, hi16) == (5, 22)
    with pytest.raises(ValueError):
        force_bounds(4)
    with pytest.raises(ValueError):
        force_bounds(10, 0)
