"""Finite strict partial orders and simple graphs over dense labels 0..n-1.

Relations are stored as tuples of row bitmasks: bit y of lt[x] means x < y.
All values are immutable and hashable; every operation returns fresh objects.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .errors import CycleError, SizeError


def bits(xs):
    """Pack an iterable of labels into a bitmask."""
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def elems(mask):
    """Unpack a bitmask into a sorted list of labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _close(rows):
    # bit-parallel Warshall; rows is mutated and returned
    n = len(rows)
    for k in range(n):
        kbit = 1 << k
        for x in range(n):
            if rows[x] & kbit:
                rows[x] |= rows[k]
    return rows


@dataclass(frozen=True)
class Poset:
    """Strict order on {0..n-1}: lt[x] is the bitmask of elements above x."""

    n: int
    lt: tuple

    def __post_init__(self):
        if len(self.lt) != self.n:
            raise ValueError("matrix size disagrees with n")
        for x, row in enumerate(self.lt):
            if row >> self.n:
                raise ValueError("relation leaves the domain")
            if row >> x & 1:
                raise ValueError("irreflexivity violated at %d" % x)
            rest = row
            while rest:
                y = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if self.lt[y] & ~row:
                    raise ValueError("transitivity violated at %d < %d" % (x, y))
                if self.lt[y] >> x & 1:
                    raise ValueError("antisymmetry violated at %d, %d" % (x, y))

    def less(self, x, y):
        return bool(self.lt[x] >> y & 1)

    def comparable(self, x, y):
        return bool(self.lt[x] >> y & 1 or self.lt[y] >> x & 1)

    def downs(self):
        """Column masks: downs()[x] is the bitmask of elements below x."""
        cols = [0] * self.n
        for x, row in enumerate(self.lt):
            rest = row
            while rest:
                y = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                cols[y] |= 1 << x
        return tuple(cols)

    def pairs(self):
        """All strict relations (x, y) with x < y, in lexicographic order."""
        for x in range(self.n):
            for y in elems(self.lt[x]):
                yield (x, y)

    def __repr__(self):
        body = ", ".join("%d<%d" % p for p in self.pairs())
        return "Poset(%d, {%s})" % (self.n, body)


def from_pairs(n, pairs):
    """Transitive closure of the given strict relations as a Poset."""
    rows = [0] * n
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise IndexError("pair (%d, %d) out of range for n=%d" % (x, y, n))
        if x == y:
            raise CycleError("reflexive pair (%d, %d)" % (x, y))
        rows[x] |= 1 << y
    _close(rows)
    for x in range(n):
        if rows[x] >> x & 1:
            raise CycleError("input relation has a directed cycle through %d" % x)
    return Poset(n, tuple(rows))


def chain(n):
    """The chain 0 < 1 < ... < n-1."""
    full = (1 << n) - 1
    return Poset(n, tuple(full & ~((1 << (x + 1)) - 1) for x in range(n)))


def antichain(n):
    return Poset(n, (0,) * n)


def is_downset(P, X):
    m = bits(X)
    if m >> P.n:
        raise IndexError("set leaves the domain")
    cols = P.downs()
    for x in elems(m):
        if cols[x] & ~m:
            return False
    return True


def is_upset(P, X):
    m = bits(X)
    if m >> P.n:
        raise IndexError("set leaves the domain")
    for x in elems(m):
        if P.lt[x] & ~m:
            return False
    return True


def below(P, X, Y):
    """Set-level X < Y: every x in X is below every y in Y; vacuous on empty sets."""
    ym = bits(Y)
    return all(P.lt[x] & ym == ym for x in X)


def max_elements(P):
    return {x for x in range(P.n) if not P.lt[x]}


def min_elements(P):
    cols = P.downs()
    return {x for x in range(P.n) if not cols[x]}


def induced(P, S):
    """Subposet on the listed elements; position i of S becomes label i."""
    S = list(S)
    if len(set(S)) != len(S):
        raise ValueError("induced substrate must list distinct elements")
    rows = []
    for x in S:
        row = 0
        for j, y in enumerate(S):
            if P.less(x, y):
                row |= 1 << j
        rows.append(row)
    return Poset(len(S), tuple(rows))


def delete(P, a):
    """P with element a removed and higher labels shifted down by one."""
    return induced(P, [x for x in range(P.n) if x != a])


def reverse(P):
    """Order dual: x < y becomes y < x."""
    return Poset(P.n, P.downs())


def disjoint_union(P, Q):
    rows = list(P.lt) + [row << P.n for row in Q.lt]
    return Poset(P.n + Q.n, tuple(rows))


def linear_sum(P, Q):
    """P below Q: every P element under every Q element."""
    top = ((1 << Q.n) - 1) << P.n
    rows = [row | top for row in P.lt] + [row << P.n for row in Q.lt]
    return Poset(P.n + Q.n, tuple(rows))


def height(P, x):
    """1 + number of elements in a longest chain strictly below x."""
    cols = P.downs()
    memo = {}

    def h(v):
        if v not in memo:
            memo[v] = 1 + max((h(u) for u in elems(cols[v])), default=0)
        return memo[v]

    return h(x)


def levels(P):
    """height(P, x) for every x, computed in one pass."""
    cols = P.downs()
    lev = [0] * P.n
    for x in sorted(range(P.n), key=lambda v: bin(cols[v]).count("1")):
        lev[x] = 1 + max((lev[u] for u in elems(cols[x])), default=0)
    return lev


# -- isomorphism ------------------------------------------------------------
#
# Backtracking over candidate maps pruned by per-element invariants.  The
# invariant labels come from iterated neighborhood refinement seeded with
# (outdeg, indeg, height, depth); refinement is isomorphism-invariant, so
# elements may only map to elements with equal labels.


def _refine(n, rows, cols, seed):
    labels = _rank(seed)
    while True:
        keys = [
            (
                labels[x],
                tuple(sorted(labels[y] for y in elems(rows[x]))),
                tuple(sorted(labels[y] for y in elems(cols[x]))),
            )
            for x in range(n)
        ]
        nxt = _rank(keys)
        if nxt == labels:
            return labels
        labels = nxt


def _rank(keys):
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _poset_labels(P):
    cols = P.downs()
    up = levels(P)
    down = levels(reverse(P))
    seed = [
        (bin(P.lt[x]).count("1"), bin(cols[x]).count("1"), up[x], down[x])
        for x in range(P.n)
    ]
    return _refine(P.n, P.lt, cols, seed)


def invariant_profile(P):
    """Hashable isomorphism invariant; unequal profiles mean non-isomorphic."""
    labels = _poset_labels(P)
    cols = P.downs()
    keys = sorted(
        (
            labels[x],
            tuple(sorted(labels[y] for y in elems(P.lt[x]))),
            tuple(sorted(labels[y] for y in elems(cols[x]))),
        )
        for x in range(P.n)
    )
    return (P.n, tuple(keys))


def _backtrack_iso(n, rows1, cols1, lab1, rows2, cols2, lab2):
    # matches structure 1 onto structure 2; labels must already agree as multisets
    slots = {}
    for y in range(n):
        slots.setdefault(lab2[y], []).append(y)
    cands = [slots.get(lab1[x], []) for x in range(n)]
    if any(not c for c in cands):
        return None
    order = sorted(range(n), key=lambda x: len(cands[x]))
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        x = order[k]
        rx, cx = rows1[x], cols1[x]
        for y in cands[x]:
            if used[y]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                v = image[u]
                if (rx >> u & 1) != (rows2[y] >> v & 1) or (cx >> u & 1) != (cols2[y] >> v & 1):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
        return False

    return list(image) if extend(0) else None


def isomorphic(P, Q):
    """A relation-preserving bijection P -> Q as a list, or None."""
    if P.n != Q.n:
        return None
    if invariant_profile(P) != invariant_profile(Q):
        return None
    colsP, colsQ = P.downs(), Q.downs()
    return _backtrack_iso(
        P.n, P.lt, colsP, _poset_labels(P), Q.lt, colsQ, _poset_labels(Q)
    )


# -- canonical relabeling ---------------------------------------------------
#
# Minimum relabeled matrix over all permutations that respect the refinement
# classes (classes sorted by label, elements of class k fill the k-th block of
# positions).  The class structure is isomorphism-invariant, so the minimum is
# a complete invariant: equal canonical matrices iff isomorphic.  Entries are
# compared in placement order: after placing element k the comparison key grows
# by the relations between position k and positions 0..k-1.


def _twin_orbits(P, labels):
    # x, y interchangeable when incomparable with identical rows and columns
    # elsewhere; swapping such a pair is an automorphism
    cols = P.downs()
    orbit = list(range(P.n))
    for x, y in combinations(range(P.n), 2):
        if labels[x] != labels[y] or P.comparable(x, y):
            continue
        off = ~((1 << x) | (1 << y))
        if P.lt[x] & off == P.lt[y] & off and cols[x] & off == cols[y] & off:
            root = orbit[x]
            for z in range(P.n):
                if orbit[z] == orbit[y]:
                    orbit[z] = root
    return orbit


def iso_canonical(P):
    """Canonical relabeling of P; equal outputs characterize isomorphism."""
    n = P.n
    if n == 0:
        return P
    labels = _poset_labels(P)
    orbit = _twin_orbits(P, labels)
    position_label = sorted(labels)
    best = {"shells": None, "perm": None}
    placed = [0] * n

    def shell(x, k):
        s = 0
        for i in range(k):
            u = placed[i]
            s = s << 2 | (P.lt[u] >> x & 1) << 1 | (P.lt[x] >> u & 1)
        return s

    def search(k, prefix):
        if k == n:
            if best["shells"] is None or prefix < best["shells"]:
                best["shells"] = list(prefix)
                best["perm"] = list(placed[:])
            return
        want = position_label[k]
        usedmask = bits(placed[:k])
        tried = set()
        options = []
        for x in range(n):
            if usedmask >> x & 1 or labels[x] != want:
                continue
            if orbit[x] in tried:
                continue
            tried.add(orbit[x])
            options.append((shell(x, k), x))
        options.sort()
        for s, x in options:
            # compare against the incumbent afresh each time; a subtree is
            # pruned only when its prefix already exceeds the incumbent
            ref = best["shells"]
            if ref is not None:
                prefix.append(s)
                worse = prefix > ref[: k + 1]
                prefix.pop()
                if worse:
                    continue
            placed[k] = x
            prefix.append(s)
            search(k + 1, prefix)
            prefix.pop()

    search(0, [])
    perm = best["perm"]
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if P.less(perm[i], perm[j]):
                row |= 1 << j
        rows.append(row)
    return Poset(n, tuple(rows))


def enumerate_all_posets(n, guard=5):
    """Every labeled poset on n elements, exactly once.

    Each unordered pair is oriented one of three ways (incomparable, <, >) and
    the candidates are filtered by transitivity; counts: 1, 1, 3, 19, 219, 4231
    for n = 0..5.
    """
    if n > guard:
        raise SizeError("enumerate_all_posets(%d) exceeds guard %d" % (n, guard))
    pairs = list(combinations(range(n), 2))
    for choice in product((0, 1, 2), repeat=len(pairs)):
        rows = [0] * n
        for (x, y), c in zip(pairs, choice):
            if c == 1:
                rows[x] |= 1 << y
            elif c == 2:
                rows[y] |= 1 << x
        ok = True
        for x in range(n):
            rest = rows[x]
            while rest:
                y = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if rows[y] & ~rows[x]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield Poset(n, tuple(rows))


# -- graphs -----------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: adj[u] is the neighbor bitmask of u."""

    n: int
    adj: tuple

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("matrix size disagrees with n")
        for u, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError("edge leaves the domain")
            if row >> u & 1:
                raise ValueError("loop at %d" % u)
            for v in elems(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError("adjacency not symmetric at %d, %d" % (u, v))

    def edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        for u in range(self.n):
            for v in elems(self.adj[u]):
                if u < v:
                    yield (u, v)

    def __repr__(self):
        body = ", ".join("%d-%d" % e for e in self.edges())
        return "Graph(%d, {%s})" % (self.n, body)


def graph_from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError("edge (%d, %d) out of range for n=%d" % (u, v, n))
        if u == v:
            raise ValueError("loop at %d" % u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# -- text formats -----------------------------------------------------------


def format_poset(P):
    lines = ["poset %d" % P.n]
    lines += ["%d < %d" % p for p in P.pairs()]
    return "\n".join(lines) + "\n"


def format_graph(G):
    lines = ["graph %d" % G.n]
    lines += ["%d -- %d" % e for e in G.edges()]
    return "\n".join(lines) + "\n"


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_poset(text):
    """Read the `poset n` header plus `x < y` lines; closure is taken."""
    lines = list(_content_lines(text))
    if not lines or len(lines[0].split()) != 2 or lines[0].split()[0] != "poset":
        raise ValueError("expected a `poset <n>` header line")
    n = int(lines[0].split()[1])
    pairs = []
    for line in lines[1:]:
        tok = line.split()
        if len(tok) != 3 or tok[1] != "<":
            raise ValueError("expected `x < y`, got %r" % line)
        pairs.append((int(tok[0]), int(tok[2])))
    return from_pairs(n, pairs)


def parse_graph(text):
    lines = list(_content_lines(text))
    if not lines or len(lines[0].split()) != 2 or lines[0].split()[0] != "graph":
        raise ValueError("expected a `graph <n>` header line")
    n = int(lines[0].split()[1])
    edges = []
    for line in lines[1:]:
        tok = line.split()
        if len(tok) != 3 or tok[1] != "--":
            raise ValueError("expected `u -- v`, got %r" % line)
        edges.append((int(tok[0]), int(tok[2])))
    return graph_from_edges(n, edges)
