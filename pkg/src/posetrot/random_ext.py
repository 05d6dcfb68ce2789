"""Random posets, one-point-extension witnesses, and the pivot construction.

The sampler thins a random linear order, which guarantees acyclicity without
rejection.  The pivot construction deletes an element and rotates what is left
around it; on the countable homogeneous order this rebuilds the whole
structure, and here its finite fingerprints are exposed for testing.
"""

import random
from dataclasses import dataclass

from .errors import InvalidTriple, NotAnEmbedding
from .poset import Poset, from_pairs
from .rotation import ExtendibleTriple, RotationSpec, rotate, to_extension, validate


def _fz(xs):
    return xs if isinstance(xs, frozenset) else frozenset(xs)


@dataclass(frozen=True)
class ExtensionType:
    """Desired relations of a new point to the subset A | B | C: above A,
    below C, incomparable to B."""

    A: frozenset
    B: frozenset
    C: frozenset

    def __init__(self, A=(), B=(), C=()):
        object.__setattr__(self, "A", _fz(A))
        object.__setattr__(self, "B", _fz(B))
        object.__setattr__(self, "C", _fz(C))

    @property
    def domain(self):
        return self.A | self.B | self.C


def random_poset(n, p, seed=None):
    """Thin a uniformly random linear order, keeping each pair with chance p."""
    if not 0 <= p <= 1:
        raise ValueError("p must be a probability, got %r" % p)
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pairs.append((perm[i], perm[j]))
    return from_pairs(n, pairs)


def _check_type(P, t):
    # the triple must be extendible for the induced order on its domain
    dom = t.domain
    for x in dom:
        if not 0 <= x < P.n:
            raise IndexError("element %d outside the domain" % x)
    if t.A & t.B or t.A & t.C or t.B & t.C:
        raise InvalidTriple("blocks overlap")
    for x in t.A:
        for y in t.C:
            if not P.less(x, y):
                raise InvalidTriple("%d is not below %d" % (x, y))
    for x in t.A:
        for y in dom:
            if P.less(y, x) and y not in t.A:
                raise InvalidTriple("A is not a downset of the subset: %d < %d" % (y, x))
    for x in t.C:
        for y in dom:
            if P.less(x, y) and y not in t.C:
                raise InvalidTriple("C is not an up-set of the subset: %d < %d" % (x, y))


def ext_witness(P, t):
    """Least element of P realizing the extension type, or None.

    Finite posets usually miss some witnesses; this probes how close a sample
    comes to the extension property.
    """
    _check_type(P, t)
    dom = t.domain
    for a in range(P.n):
        if a in dom:
            continue
        if (
            all(P.less(x, a) for x in t.A)
            and all(P.less(a, y) for y in t.C)
            and not any(P.comparable(a, z) for z in t.B)
        ):
            return a
    return None


def pivot_rotation(P, a):
    """Delete a and rotate around it: below-a becomes the downset block,
    above-a the up-set block.

    Built directly from the block case analysis rather than through rotate(),
    so the round trip against from_extension stays a real cross-check.
    """
    if not 0 <= a < P.n:
        raise IndexError("element %d outside the domain" % a)
    rest = [x for x in range(P.n) if x != a]

    def block(x):
        if P.less(x, a):
            return 0  # below the pivot
        if P.less(a, x):
            return 2  # above the pivot
        return 1

    rows = []
    for x in rest:
        row = 0
        bx = block(x)
        for j, y in enumerate(rest):
            if x == y:
                continue
            by = block(y)
            if bx == by:
                keep = P.less(x, y)
            elif bx == 1 and by == 0:
                keep = not P.comparable(x, y)
            elif bx == 2 and by == 0:
                keep = True
            elif bx == 2 and by == 1:
                keep = not P.comparable(x, y)
            else:
                keep = False
            if keep:
                row |= 1 << j
        rows.append(row)
    return Poset(len(rest), tuple(rows))


def _check_embedding(name, e, X, P):
    if set(e) != set(range(X.n)):
        raise NotAnEmbedding("%s is not defined on the whole domain" % name)
    if len(set(e.values())) != X.n:
        raise NotAnEmbedding("%s is not injective" % name)
    for v in e.values():
        if not 0 <= v < P.n:
            raise NotAnEmbedding("%s leaves the codomain" % name)
    for x in range(X.n):
        for y in range(X.n):
            if x != y and X.less(x, y) != P.less(e[x], e[y]):
                raise NotAnEmbedding(
                    "%s does not preserve the relation on (%d, %d)" % (name, x, y)
                )


def restriction_check(X, r, P, e1, e2):
    """Verify that the rotation r of the embedded copy of X extends into P.

    e1 embeds X, e2 embeds rotate(X, r).  The triple of r pushed through e1
    grows to an extendible triple of P by closing downward and upward, and the
    resulting one-point extension must carry the pushed relations and satisfy
    the order axioms.  Empty X is vacuously fine.
    """
    _check_embedding("e1", e1, X, P)
    Y = rotate(X, r)
    _check_embedding("e2", e2, Y, P)
    t = validate(X, r)
    A2 = {e1[x] for x in t.A}
    B2 = {e1[x] for x in t.B}
    C2 = {e1[x] for x in t.C}
    abar = {y for y in range(P.n) if any(y == x or P.less(y, x) for x in A2)}
    cbar = {y for y in range(P.n) if any(y == x or P.less(x, y) for x in C2)}
    if abar & cbar or B2 & (abar | cbar):
        return False
    bbar = set(range(P.n)) - abar - cbar
    ext, a = to_extension(P, ExtendibleTriple(abar, bbar, cbar))
    ok = (
        all(ext.less(x, a) for x in A2)
        and all(ext.less(a, y) for y in C2)
        and not any(ext.comparable(a, z) for z in B2)
    )
    return ok
