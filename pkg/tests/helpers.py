"""Brute-force oracles and exhaustive generators shared by the test modules.

Everything here is deliberately naive: permutation search for isomorphism,
powerset sweeps for downsets and specs.  Slow but obviously correct, which is
the point of an oracle.
"""

from itertools import combinations, permutations

from posetrot import RotationSpec, graph_from_edges, is_downset, is_upset


def brute_poset_iso(P, Q):
    if P.n != Q.n:
        return False
    idx = range(P.n)
    for p in permutations(idx):
        if all(P.less(x, y) == Q.less(p[x], p[y]) for x in idx for y in idx if x != y):
            return True
    return False


def brute_graph_iso(G, H):
    if G.n != H.n:
        return False
    idx = range(G.n)
    for p in permutations(idx):
        if all(
            (G.adj[u] >> v & 1) == (H.adj[p[u]] >> p[v] & 1)
            for u in idx
            for v in idx
            if u != v
        ):
            return True
    return False


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edges(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def all_downsets(P):
    for mask in range(1 << P.n):
        xs = [x for x in range(P.n) if mask >> x & 1]
        if is_downset(P, xs):
            yield frozenset(xs)


def all_valid_specs(P):
    """Every (A, C) with A a downset, C an up-set, and A entirely below C."""
    for A in all_downsets(P):
        rest = [
            x for x in range(P.n) if x not in A and all(P.less(a, x) for a in A)
        ]
        for mask in range(1 << len(rest)):
            C = frozenset(rest[i] for i in range(len(rest)) if mask >> i & 1)
            if is_upset(P, C):
                yield RotationSpec(A, C)


def random_spec(rng, P):
    """One uniform-ish valid spec: close a random seed set down for A, then
    close a random subset of the part strictly above A up for C.

    The up-closure of a set lying strictly above the downset A stays strictly
    above A and outside it, so the result always validates.
    """
    seed = [x for x in range(P.n) if rng.random() < 0.4]
    A = {y for y in range(P.n) if any(y == x or P.less(y, x) for x in seed)}
    above = [x for x in range(P.n) if x not in A and all(P.less(a, x) for a in A)]
    cseed = [x for x in above if rng.random() < 0.4]
    C = {y for y in range(P.n) if y in cseed or any(P.less(c, y) for c in cseed)}
    return RotationSpec(frozenset(A), frozenset(C))
