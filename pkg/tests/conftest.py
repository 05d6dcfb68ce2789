"""Shared fixtures: exhaustive poset lists and the BFS-cut class partition.

The partition fixtures are the independent oracle for equivalence questions.
They are built from enumerate_class (breadth-first closure under single-point
cuts) and never consult the triple classifier, so agreement between the two
is a real cross-check and not a tautology.
"""

import pytest

from posetrot import enumerate_all_posets, enumerate_class


def _partition(posets):
    cid = {}
    classes = []
    for P in posets:
        if P in cid:
            continue
        members = enumerate_class(P).labeled_members
        k = len(classes)
        classes.append(members)
        for M in members:
            cid[M] = k
    return cid, classes


@pytest.fixture(scope="session")
def posets_by_n():
    return {n: list(enumerate_all_posets(n)) for n in range(5)}


@pytest.fixture(scope="session")
def posets5():
    return list(enumerate_all_posets(5))


@pytest.fixture(scope="session")
def partition4(posets_by_n):
    return _partition(posets_by_n[4])


@pytest.fixture(scope="session")
def partition5(posets5):
    return _partition(posets5)
