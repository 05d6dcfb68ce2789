"""Rotations and cuts of finite posets.

A rotation is given by a downset A and an up-set C with A < C; the middle
block B is everything else.  The rotated order keeps all relations inside each
block, puts every C element below every A element, and flips incomparability
into comparability between B and A and between C and B.
"""

import re
from dataclasses import dataclass

from .errors import InvalidRotation, NotDownset
from .poset import Poset, bits, induced, is_downset, is_upset, below


def _fz(xs):
    return xs if isinstance(xs, frozenset) else frozenset(xs)


@dataclass(frozen=True)
class RotationSpec:
    """The defining pair (A, C); B is implicit."""

    A: frozenset
    C: frozenset

    def __init__(self, A=(), C=()):
        object.__setattr__(self, "A", _fz(A))
        object.__setattr__(self, "C", _fz(C))


@dataclass(frozen=True)
class ExtendibleTriple:
    """Partition (A, B, C) of a domain with A a downset, C an up-set, A < C."""

    A: frozenset
    B: frozenset
    C: frozenset

    def __init__(self, A=(), B=(), C=()):
        object.__setattr__(self, "A", _fz(A))
        object.__setattr__(self, "B", _fz(B))
        object.__setattr__(self, "C", _fz(C))


def validate(P, r):
    """Check the rotation preconditions on P; returns the full triple."""
    A, C = r.A, r.C
    for x in A | C:
        if not 0 <= x < P.n:
            raise IndexError("element %d outside the domain" % x)
    if A & C:
        raise InvalidRotation("overlap: A and C share %s" % sorted(A & C))
    if not is_downset(P, A):
        raise InvalidRotation("not-downset: A=%s" % sorted(A))
    if not is_upset(P, C):
        raise InvalidRotation("not-upset: C=%s" % sorted(C))
    if not below(P, A, C):
        raise InvalidRotation("not-below: A=%s is not entirely below C=%s"
                              % (sorted(A), sorted(C)))
    B = frozenset(range(P.n)) - A - C
    return ExtendibleTriple(A, B, C)


def rotate(P, r):
    """Apply the rotation; the result is again a poset (checked on build)."""
    t = validate(P, r)
    a, c = bits(t.A), bits(t.C)
    full = (1 << P.n) - 1
    b = full & ~a & ~c
    cols = P.downs()
    rows = []
    for x in range(P.n):
        incomp = full & ~P.lt[x] & ~cols[x] & ~(1 << x)
        if a >> x & 1:
            row = P.lt[x] & a
        elif b >> x & 1:
            row = (P.lt[x] & b) | (incomp & a)
        else:
            row = (P.lt[x] & c) | a | (incomp & b)
        rows.append(row)
    return Poset(P.n, tuple(rows))


def cut(P, A):
    """The rotation with empty C."""
    return rotate(P, RotationSpec(A, ()))


def from_extension(P_ext, a):
    """Delete a; the elements below and above it define a rotation spec.

    Returns (poset on n-1 elements with labels shifted down past a, spec).
    The spec always validates on the returned poset.
    """
    if not 0 <= a < P_ext.n:
        raise IndexError("element %d outside the domain" % a)
    rest = [x for x in range(P_ext.n) if x != a]
    Q = induced(P_ext, rest)
    relabel = {x: i for i, x in enumerate(rest)}
    A = frozenset(relabel[x] for x in rest if P_ext.less(x, a))
    C = frozenset(relabel[x] for x in rest if P_ext.less(a, x))
    return Q, RotationSpec(A, C)


def to_extension(P, t):
    """Adjoin one element a with A < a < C and a incomparable to B.

    Inverse of from_extension up to the relabeling; the new element gets the
    label n.  The raw relation is already transitive because A is a downset,
    C is an up-set, and A < C.
    """
    validate(P, RotationSpec(t.A, t.C))
    if t.B != frozenset(range(P.n)) - t.A - t.C:
        raise InvalidRotation("malformed triple: B must be the complement of A and C")
    a = P.n
    abit = 1 << a
    rows = [row | (abit if x in t.A else 0) for x, row in enumerate(P.lt)]
    rows.append(bits(t.C))
    return Poset(P.n + 1, tuple(rows)), a


def decompose_to_two_cuts(P, r):
    """Cut sets (A, A+B) whose composition equals the rotation."""
    t = validate(P, r)
    return t.A, t.A | t.B


def decompose_to_single_cuts(P, A):
    """Order A so that cutting one element at a time composes to cut(P, A).

    Later elements are never below earlier ones; among the valid orders this
    returns the lexicographically least (greedy smallest minimal element).
    """
    if not is_downset(P, A):
        raise NotDownset("%s is not a downset" % sorted(A))
    remaining = set(A)
    out = []
    while remaining:
        m = min(x for x in remaining
                if not any(P.less(y, x) for y in remaining))
        remaining.remove(m)
        out.append(m)
    return out


# -- text form ---------------------------------------------------------------

_SET = r"\{([0-9,\s]*)\}"
_SPEC = re.compile(r"^rot\s+A=" + _SET + r"\s+C=" + _SET + r"$")


def format_rotation_spec(r):
    def fmt(xs):
        return "{%s}" % ",".join(str(x) for x in sorted(xs))

    return "rot A=%s C=%s" % (fmt(r.A), fmt(r.C))


def parse_rotation_spec(text):
    m = _SPEC.match(text.strip())
    if not m:
        raise ValueError("expected `rot A={..} C={..}`, got %r" % text)

    def grab(group):
        items = [s for s in group.replace(",", " ").split() if s]
        return frozenset(int(s) for s in items)

    return RotationSpec(grab(m.group(1)), grab(m.group(2)))
