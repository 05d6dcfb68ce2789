"""Brute-force side of the story: class enumeration by cut closure.

Cutting a single minimal element is enough to reach a whole equivalence
class: every rotation is a composition of such cuts, and anything reachable
by a series of rotations is reachable by one.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import SizeError, SizeMismatch
from .poset import enumerate_all_posets, iso_canonical, min_elements
from .rotation import cut


@dataclass(frozen=True)
class ClassReport:
    representative: "Poset"
    labeled_members: tuple
    labeled_size: int
    iso_types: tuple
    iso_count: int


def enumerate_class(P, guard=7):
    """Breadth-first closure of {P} under single-minimal-element cuts."""
    if P.n > guard:
        raise SizeError("enumerate_class(n=%d) exceeds guard %d" % (P.n, guard))
    seen = {P}
    frontier = [P]
    order = [P]
    while frontier:
        nxt = []
        for Q in frontier:
            for m in sorted(min_elements(Q)):
                R = cut(Q, (m,))
                if R not in seen:
                    seen.add(R)
                    nxt.append(R)
                    order.append(R)
        frontier = nxt
    types = sorted({iso_canonical(Q) for Q in order}, key=lambda Q: Q.lt)
    return ClassReport(
        representative=P,
        labeled_members=tuple(order),
        labeled_size=len(order),
        iso_types=tuple(types),
        iso_count=len(types),
    )


def oracle_equivalent(P, Q, guard=7):
    """Membership of Q in the cut closure of P; independent of the fast path."""
    if P.n != Q.n:
        raise SizeMismatch("domains differ: %d vs %d" % (P.n, Q.n))
    return Q in set(enumerate_class(P, guard).labeled_members)


@dataclass(frozen=True)
class ClassStatsRow:
    class_id: int
    representative: "Poset"
    labeled: int
    iso: int


@dataclass(frozen=True)
class ClassStats:
    n: int
    rows: tuple
    total: int
    min_labeled: int
    max_labeled: int


def _classes_of(seeds, guard):
    classes = {}
    visited = set()
    for P in seeds:
        if P in visited:
            continue
        report = enumerate_class(P, guard)
        members = frozenset(report.labeled_members)
        visited |= members
        classes[members] = report
    return classes


def class_stats(n, guard=5, jobs=1):
    """Partition all labeled posets on n elements into classes.

    Exploratory report on the class-size spectrum; no closed form for the
    sizes is known, so only the partition itself and the bounds are asserted
    elsewhere.  Workers deduplicate independently and the merge is exact, so
    the result does not depend on the schedule.
    """
    if n > guard:
        raise SizeError("class_stats(%d) exceeds guard %d" % (n, guard))
    seeds = list(enumerate_all_posets(n, guard=max(n, 5)))
    if jobs > 1:
        chunks = [seeds[i::jobs] for i in range(jobs)]
        classes = {}
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(lambda c: _classes_of(c, n), chunks):
                classes.update(part)
    else:
        classes = _classes_of(seeds, n)
    # the key must not depend on discovery order: classes are compared by
    # size, then by iso content, then by their exact labeled member sets
    reports = sorted(
        classes.values(),
        key=lambda r: (
            -r.labeled_size,
            -r.iso_count,
            tuple(t.lt for t in r.iso_types),
            tuple(sorted(m.lt for m in r.labeled_members)),
        ),
    )
    rows = tuple(
        ClassStatsRow(
            class_id=i,
            representative=r.iso_types[0] if r.iso_types else r.representative,
            labeled=r.labeled_size,
            iso=r.iso_count,
        )
        for i, r in enumerate(reports)
    )
    sizes = [r.labeled for r in rows] or [0]
    return ClassStats(
        n=n,
        rows=rows,
        total=sum(sizes),
        min_labeled=min(sizes),
        max_labeled=max(sizes),
    )
