"""Triple classifier, equivalence decision, witnesses, canonical forms."""

import random
from itertools import combinations, permutations

import pytest

from posetrot import (
    RotationSpec,
    SizeError,
    SizeMismatch,
    TripleClass,
    antichain,
    are_equivalent,
    canonical_form,
    chain,
    classify_triple,
    cut,
    disjoint_union,
    enumerate_class,
    equivalent_upto_iso,
    find_rotation,
    from_pairs,
    linear_sum,
    max_elements,
    random_poset,
    reverse,
    rotate,
    rotate_to_unique_max,
)

from helpers import all_valid_specs, random_spec


def rev3(P):
    return reverse(P)


# the classifier against the cut-closure oracle, n = 3


def test_triple_classes_match_the_cut_bfs_classes(posets_by_n):
    seen = {}
    for P in posets_by_n[3]:
        if P not in seen:
            members = enumerate_class(P).labeled_members
            for M in members:
                seen[M] = members[0]
    for P in posets_by_n[3]:
        for Q in posets_by_n[3]:
            same = classify_triple(P, 0, 1, 2) == classify_triple(Q, 0, 1, 2)
            assert same == (seen[P] == seen[Q]), (P, Q)


def test_triple_partition_sizes_and_anchors(posets_by_n):
    buckets = {c: [] for c in TripleClass}
    for P in posets_by_n[3]:
        buckets[classify_triple(P, 0, 1, 2)].append(P)
    assert {c.value: len(v) for c, v in buckets.items()} == {
        "O1": 7,
        "O2": 6,
        "O3": 6,
    }
    assert classify_triple(antichain(3), 0, 1, 2) is TripleClass.O1
    assert classify_triple(chain(3), 0, 1, 2) is TripleClass.O2
    assert classify_triple(reverse(chain(3)), 0, 1, 2) is TripleClass.O3


def test_classify_depends_on_argument_order():
    # chains split by the cyclic orientation of (a, b, c) along the chain
    C = chain(3)
    assert classify_triple(C, 0, 1, 2) is TripleClass.O2
    assert classify_triple(C, 1, 2, 0) is TripleClass.O2
    assert classify_triple(C, 2, 1, 0) is TripleClass.O3
    assert classify_triple(C, 0, 2, 1) is TripleClass.O3
    # non-chains sit in O1 whatever the order
    V = from_pairs(3, [(0, 1), (0, 2)])
    for a, b, c in permutations(range(3)):
        assert classify_triple(V, a, b, c) is TripleClass.O1


def test_classify_requires_distinct_elements():
    with pytest.raises(ValueError, match="distinct"):
        classify_triple(chain(3), 0, 0, 1)
    with pytest.raises(IndexError):
        classify_triple(chain(3), 0, 1, 5)


def test_duality_exhaustive_n3(posets_by_n):
    """Swapping the outer arguments swaps O2 and O3; reversal does the same."""
    swap = {
        TripleClass.O1: TripleClass.O1,
        TripleClass.O2: TripleClass.O3,
        TripleClass.O3: TripleClass.O2,
    }
    for P in posets_by_n[3]:
        for a, b, c in permutations(range(3)):
            got = classify_triple(P, a, b, c)
            assert classify_triple(P, c, b, a) is swap[got]
            assert classify_triple(reverse(P), a, b, c) is swap[got]


def test_duality_random_n8():
    rng = random.Random(41)
    for _ in range(25):
        P = random_poset(8, rng.random(), seed=rng.randrange(2**30))
        for a, b, c in combinations(range(8), 3):
            got = classify_triple(P, a, b, c)
            want = {
                TripleClass.O1: TripleClass.O1,
                TripleClass.O2: TripleClass.O3,
                TripleClass.O3: TripleClass.O2,
            }[got]
            assert classify_triple(P, c, b, a) is want


# the equivalence decision


def test_are_equivalent_small_domains():
    # every poset on two points is reachable from every other
    two = [antichain(2), chain(2), reverse(chain(2))]
    for P in two:
        for Q in two:
            assert are_equivalent(P, Q)
    assert are_equivalent(chain(1), chain(1))
    assert are_equivalent(chain(0), chain(0))


def test_are_equivalent_rejects_size_mismatch():
    with pytest.raises(SizeMismatch):
        are_equivalent(chain(2), chain(3))


def test_are_equivalent_matches_bfs_partition_exhaustive_n3(posets_by_n):
    cid = {}
    for P in posets_by_n[3]:
        if P not in cid:
            for M in enumerate_class(P).labeled_members:
                cid[M] = P
    for P in posets_by_n[3]:
        for Q in posets_by_n[3]:
            assert are_equivalent(P, Q) == (cid[P] == cid[Q])


def test_are_equivalent_matches_bfs_partition_sampled_n4(posets_by_n, partition4):
    cid, _ = partition4
    rng = random.Random(17)
    P4 = posets_by_n[4]
    for _ in range(3000):
        P, Q = rng.choice(P4), rng.choice(P4)
        assert are_equivalent(P, Q) == (cid[P] == cid[Q]), (P, Q)


def test_equivalence_is_invariant_under_any_single_rotation(posets_by_n):
    for P in posets_by_n[4]:
        for r in list(all_valid_specs(P))[:5]:
            assert are_equivalent(P, rotate(P, r))


# witnesses


def test_find_rotation_golden():
    r = find_rotation(chain(3), cut(chain(3), {0}))
    assert r == RotationSpec({0}, ())
    assert rotate(chain(3), r) == cut(chain(3), {0})


def test_find_rotation_none_for_inequivalent():
    assert find_rotation(chain(3), antichain(3)) is None


def test_find_rotation_empty_domain():
    assert find_rotation(chain(0), chain(0)) == RotationSpec((), ())


def test_find_rotation_identity_accepts_trivial_spec():
    P = from_pairs(3, [(0, 1)])
    r = find_rotation(P, P)
    assert r is not None and rotate(P, r) == P


def test_find_rotation_exhaustive_n3(posets_by_n):
    for P in posets_by_n[3]:
        for Q in posets_by_n[3]:
            r = find_rotation(P, Q)
            if are_equivalent(P, Q):
                assert r is not None and rotate(P, r) == Q, (P, Q)
            else:
                assert r is None


def test_find_rotation_undoes_composed_rotations_random():
    rng = random.Random(23)
    for _ in range(60):
        P = random_poset(6, rng.random(), seed=rng.randrange(2**30))
        Q = P
        for _ in range(3):
            Q = rotate(Q, random_spec(rng, Q))
        r = find_rotation(P, Q)
        assert r is not None and rotate(P, r) == Q


# canonical forms


def test_rotate_to_unique_max_goldens():
    Q = rotate_to_unique_max(chain(3), 0)
    assert max_elements(Q) == {0}
    assert Q == from_pairs(3, [(1, 2), (2, 0), (1, 0)])
    Q2 = rotate_to_unique_max(antichain(3), 1)
    assert Q2 == from_pairs(3, [(0, 1), (2, 1)])


def test_rotate_to_unique_max_stays_in_the_class(posets_by_n):
    for P in posets_by_n[4]:
        for p in range(4):
            Q = rotate_to_unique_max(P, p)
            assert max_elements(Q) == {p}
            assert are_equivalent(P, Q)


def test_rotate_to_unique_max_out_of_range():
    with pytest.raises(IndexError):
        rotate_to_unique_max(chain(2), 2)


def test_canonical_form_goldens():
    assert canonical_form(chain(4)) == canonical_form(
        disjoint_union(chain(2), chain(2))
    )
    assert canonical_form(antichain(4)) == canonical_form(
        linear_sum(antichain(2), antichain(2))
    )
    assert canonical_form(chain(3)) != canonical_form(antichain(3))


def test_canonical_form_invariance(posets_by_n):
    for P in posets_by_n[3]:
        want = canonical_form(P)
        for r in all_valid_specs(P):
            assert canonical_form(rotate(P, r)) == want


def test_canonical_form_guard():
    with pytest.raises(SizeError):
        canonical_form(antichain(11))
    canonical_form(antichain(11), guard=11)


def test_equivalent_upto_iso(posets_by_n):
    assert equivalent_upto_iso(chain(4), disjoint_union(chain(2), chain(2)))
    assert not equivalent_upto_iso(chain(3), antichain(3))
    for P in posets_by_n[3]:
        for Q in posets_by_n[3]:
            if are_equivalent(P, Q):
                assert equivalent_upto_iso(P, Q)
            assert equivalent_upto_iso(P, Q) == equivalent_upto_iso(Q, P)
