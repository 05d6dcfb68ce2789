"""Triple classification and rotation-equivalence decisions.

Two posets on the same labeled domain are rotation-equivalent exactly when
every 3-element subset induces triples of the same class, and in that case a
single rotation already maps one onto the other.
"""

from enum import Enum
from itertools import combinations

from .errors import SizeError, SizeMismatch
from .poset import Poset, iso_canonical, max_elements, below
from .rotation import RotationSpec, rotate


class TripleClass(Enum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"


# One ordered relation of the labeled triple (a,b,c) per bit:
#   1 a<b, 2 b<a, 4 a<c, 8 c<a, 16 b<c, 32 c<b.
# Every strict order on three labeled points appears exactly once below;
# 7 + 6 + 6 = 19 patterns.
_TABLE = {
    0: TripleClass.O1,              # antichain
    1 | 4: TripleClass.O1,          # a<b, a<c
    2 | 16: TripleClass.O1,         # b<a, b<c
    8 | 32: TripleClass.O1,         # c<a, c<b
    2 | 8: TripleClass.O1,          # a>b, a>c
    1 | 32: TripleClass.O1,         # b>a, b>c
    4 | 16: TripleClass.O1,         # c>a, c>b
    1 | 4 | 16: TripleClass.O2,     # a<b<c
    2 | 8 | 16: TripleClass.O2,     # b<c<a
    1 | 8 | 32: TripleClass.O2,     # c<a<b
    1: TripleClass.O2,              # a<b only
    16: TripleClass.O2,             # b<c only
    8: TripleClass.O2,              # c<a only
    2 | 8 | 32: TripleClass.O3,     # a>b>c
    1 | 4 | 32: TripleClass.O3,     # b>c>a
    2 | 4 | 16: TripleClass.O3,     # c>a>b
    2: TripleClass.O3,              # a>b only
    32: TripleClass.O3,             # b>c only
    4: TripleClass.O3,              # c>a only
}


def classify_triple(P, a, b, c):
    """Class of the labeled triple (a, b, c) of P."""
    if a == b or a == c or b == c:
        raise ValueError("triple elements must be distinct")
    pattern = (
        P.less(a, b)
        | P.less(b, a) << 1
        | P.less(a, c) << 2
        | P.less(c, a) << 3
        | P.less(b, c) << 4
        | P.less(c, b) << 5
    )
    return _TABLE[pattern]


def are_equivalent(P, Q):
    """Rotation-equivalence on a common labeled domain.

    Decided by comparing triple classes over all 3-subsets under their
    ascending labeling; one labeling per subset suffices since the class of a
    fixed labeling determines the classes of its permutations.  Below three
    elements the criterion is vacuous and the cut-closure oracle decides.
    """
    if P.n != Q.n:
        raise SizeMismatch("domains differ: %d vs %d" % (P.n, Q.n))
    if P.n < 3:
        from .class_explorer import oracle_equivalent

        return oracle_equivalent(P, Q)
    return all(
        classify_triple(P, a, b, c) == classify_triple(Q, a, b, c)
        for a, b, c in combinations(range(P.n), 3)
    )


def _antichain_in(P, X):
    return not any(P.comparable(x, y) for x, y in combinations(sorted(X), 2))


def find_rotation(P, Q):
    """A single spec r with rotate(P, r) == Q, or None.

    The target's maximal set M splits inside P into the layer T of elements
    above another M element and the antichain S below it; the spec is then
    read off as A = down-closure of S and C = everything above S avoiding T.
    The candidate is verified exactly before it is returned.
    """
    if P.n != Q.n:
        raise SizeMismatch("domains differ: %d vs %d" % (P.n, Q.n))
    if P.n == 0:
        return RotationSpec((), ())
    M = max_elements(Q)
    T = {m for m in M if any(P.less(x, m) for x in M)}
    S = M - T
    if not (S and _antichain_in(P, S) and _antichain_in(P, T) and below(P, S, T)):
        return None
    A = {x for x in range(P.n) if any(x == s or P.less(x, s) for s in S)}
    C = {
        x
        for x in range(P.n)
        if all(P.less(s, x) for s in S)
        and not any(x == t or P.less(x, t) for t in T)
    }
    spec = RotationSpec(A, C)
    return spec if rotate(P, spec) == Q else None


def rotate_to_unique_max(P, p):
    """The unique poset in P's class whose only maximal element is p."""
    if not 0 <= p < P.n:
        raise IndexError("element %d outside the domain" % p)
    A = {x for x in range(P.n) if x == p or P.less(x, p)}
    C = {x for x in range(P.n) if P.less(p, x)}
    return rotate(P, RotationSpec(A, C))


def canonical_form(P, guard=10):
    """Joint invariant of rotation-equivalence and isomorphism.

    Minimum canonical matrix of the unique-maximum representatives over all
    choices of the maximum.  Two posets get equal forms iff one is
    rotation-equivalent to an isomorphic copy of the other.
    """
    if P.n > guard:
        raise SizeError("canonical_form(n=%d) exceeds guard %d" % (P.n, guard))
    if P.n == 0:
        return P
    return min(
        (iso_canonical(rotate_to_unique_max(P, p)) for p in range(P.n)),
        key=lambda R: R.lt,
    )


def equivalent_upto_iso(P, Q, guard=10):
    return canonical_form(P, guard) == canonical_form(Q, guard)
