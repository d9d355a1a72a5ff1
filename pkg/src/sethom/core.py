"""The s-digraph data model.

An s-digraph on vertices ``0..n-1`` assigns to every ordered pair ``(i, j)``,
``i != j``, one of four pair states.  The matrix is kept flip-consistent:
``state(j, i)`` is always ``flip(state(i, j))``.
"""

from enum import IntEnum
from itertools import product

import numpy as np


class PairState(IntEnum):
    UNRELATED = 0
    ARC = 1  # i -> j
    REVARC = 2  # j -> i
    EDGE = 3  # i ~ j

    def flip(self):
        return PairState(FLIP[self])


# index by state value
FLIP = (0, 2, 1, 3)
_FLIP_ARR = np.array(FLIP, dtype=np.uint8)
_COMPLEMENT_ARR = np.array([3, 2, 1, 0], dtype=np.uint8)


class DigraphError(ValueError):
    pass


class IndexOutOfRange(DigraphError, IndexError):
    pass


class DuplicatePair(DigraphError):
    pass


class SelfLoop(DigraphError):
    pass


class SDigraph:
    """Finite symmetric digraph stored as an ``n x n`` matrix of pair states.

    The matrix is read-only; the diagonal holds zeros and carries no meaning.
    Instances compare and hash by content.
    """

    __slots__ = ("_m", "_rows", "_hash")

    def __init__(self, matrix):
        m = np.array(matrix, dtype=np.uint8)
        if m.size == 0:
            m = m.reshape(0, 0)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DigraphError("state matrix must be square")
        n = m.shape[0]
        if n and m.max(initial=0) > 3:
            raise DigraphError("pair states must lie in 0..3")
        if np.any(np.diagonal(m)):
            raise SelfLoop("diagonal entries must be zero")
        if not np.array_equal(m.T, _FLIP_ARR[m]):
            raise DigraphError("state matrix is not flip-consistent")
        m.setflags(write=False)
        self._m = m
        self._rows = None
        self._hash = None

    @classmethod
    def _trusted(cls, m):
        # internal constructor: skip validation for matrices built consistently
        obj = cls.__new__(cls)
        m = np.ascontiguousarray(m, dtype=np.uint8)
        m.setflags(write=False)
        obj._m = m
        obj._rows = None
        obj._hash = None
        return obj

    @property
    def n(self):
        return self._m.shape[0]

    def __len__(self):
        return self.n

    @property
    def matrix(self):
        return self._m

    @property
    def rows(self):
        """Pair states as a tuple of tuples of ints (fast pure-Python access)."""
        if self._rows is None:
            self._rows = tuple(tuple(r) for r in self._m.tolist())
        return self._rows

    def state(self, i, j):
        n = self.n
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise SelfLoop(f"no state is stored for ({i}, {i})")
        return PairState(int(self._m[i, j]))

    def __eq__(self, other):
        if not isinstance(other, SDigraph):
            return NotImplemented
        return self._m.shape == other._m.shape and np.array_equal(self._m, other._m)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._m.tobytes()))
        return self._hash

    def __repr__(self):
        c = census(self)
        return (f"SDigraph(n={self.n}, arcs={c['arcs']}, edges={c['edges']}, "
                f"unrelated={c['unrelated']})")

    def arcs(self):
        """Ordered pairs ``(i, j)`` with ``i -> j``, in row-major order."""
        return [tuple(p) for p in np.argwhere(self._m == PairState.ARC).tolist()]

    def edges(self):
        """Unordered pairs ``(i, j)``, ``i < j``, with ``i ~ j``."""
        return [tuple(p) for p in np.argwhere(np.triu(self._m == PairState.EDGE)).tolist()]

    def unrelated_pairs(self):
        m = self._m == PairState.UNRELATED
        return [tuple(p) for p in np.argwhere(np.triu(m, k=1)).tolist()]

    def relabel(self, perm):
        """Return the digraph ``d^perm``: vertex ``i`` becomes ``perm[i]``."""
        perm = np.asarray(perm, dtype=np.intp)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        return SDigraph._trusted(self._m[np.ix_(inv, inv)])

    def is_adigraph(self):
        return not np.any(self._m == PairState.EDGE)

    def is_graph(self):
        return not np.any((self._m == PairState.ARC) | (self._m == PairState.REVARC))

    def is_tournament(self):
        off = ~np.eye(self.n, dtype=bool)
        return bool(np.all((self._m[off] == 1) | (self._m[off] == 2)))


def new_sdigraph(n, assignments=()):
    """Build an s-digraph from ``(i, j, state)`` assignments.

    Unlisted pairs are unrelated.  Each unordered pair may be assigned once.
    """
    if n < 0:
        raise DigraphError("vertex count must be non-negative")
    m = np.zeros((n, n), dtype=np.uint8)
    seen = set()
    for i, j, s in assignments:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise SelfLoop(f"self pair ({i}, {i})")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicatePair(f"pair {key} assigned twice")
        seen.add(key)
        s = PairState(s)
        m[i, j] = s
        m[j, i] = FLIP[s]
    return SDigraph._trusted(m)


def from_relations(n, arcs=(), edges=()):
    """Convenience constructor from arc and edge lists."""
    return new_sdigraph(n, [(i, j, PairState.ARC) for i, j in arcs]
                        + [(i, j, PairState.EDGE) for i, j in edges])


def census(d):
    m = d.matrix
    arcs = int(np.count_nonzero(m == PairState.ARC))
    edges = int(np.count_nonzero(m == PairState.EDGE)) // 2
    n = d.n
    return {"arcs": arcs, "edges": edges, "unrelated": n * (n - 1) // 2 - arcs - edges}


# --- vertex sets ---------------------------------------------------------

def to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def vertex_set(vertices, n=None):
    """Sorted, duplicate-free tuple of vertices, range-checked against ``n``."""
    vs = tuple(sorted(set(int(v) for v in vertices)))
    if vs and (vs[0] < 0 or (n is not None and vs[-1] >= n)):
        raise IndexOutOfRange(f"vertex set {vs} outside 0..{n - 1 if n else -1}")
    return vs


# --- neighbourhoods and derived digraphs --------------------------------

def neighborhoods(d, v):
    """Return ``(out, in, edge, unrelated)`` neighbour tuples of ``v``."""
    if not 0 <= v < d.n:
        raise IndexOutOfRange(f"vertex {v} outside 0..{d.n - 1}")
    row = d.rows[v]
    groups = ([], [], [], [])
    for w, s in enumerate(row):
        if w != v:
            groups[s].append(w)
    unrel, out, inn, edge = groups
    return tuple(out), tuple(inn), tuple(edge), tuple(unrel)


def out_neighbors(d, v):
    return neighborhoods(d, v)[0]


def in_neighbors(d, v):
    return neighborhoods(d, v)[1]


def complement(d):
    """Swap edges with unrelated pairs and reverse every arc."""
    m = _COMPLEMENT_ARR[d.matrix]
    np.fill_diagonal(m, 0)
    return SDigraph._trusted(m)


def weak_complement(d):
    """Reverse every arc; edges and unrelated pairs stay put."""
    return SDigraph._trusted(_FLIP_ARR[d.matrix])


converse = weak_complement


def comp_product(u, v):
    """Compositional product ``U[V]``; vertex ``(a, b)`` has index ``a*|V| + b``."""
    nu, nv = u.n, v.n
    # between-copy relations come from U; diagonal blocks of U are zero
    big = np.repeat(np.repeat(u.matrix, nv, axis=0), nv, axis=1)
    big += np.kron(np.eye(nu, dtype=np.uint8), v.matrix)
    return SDigraph._trusted(big)


def direct_product(u, v):
    """Categorical product ``U x V``: a relation holds iff it holds in both coordinates."""
    nu, nv = u.n, v.n
    mu, mv = u.matrix, v.matrix
    m = np.zeros((nu * nv, nu * nv), dtype=np.uint8)
    for s in (PairState.ARC, PairState.REVARC, PairState.EDGE):
        m[np.kron(mu == s, mv == s)] = s
    return SDigraph._trusted(m)


def induced(d, vertices):
    """Induced s-digraph on ``vertices`` relabelled in increasing order."""
    vs = vertex_set(vertices, d.n)
    idx = np.array(vs, dtype=np.intp)
    return SDigraph._trusted(d.matrix[np.ix_(idx, idx)])


def _components(n, adjacent):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if adjacent(i, j):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    classes = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return sorted(tuple(c) for c in classes.values())


def gamma_components(d):
    """Components of the graph whose adjacency is "joined by an arc"."""
    rows = d.rows
    return _components(d.n, lambda i, j: rows[i][j] in (1, 2))


def same_out_congruence(d, dual=False):
    """Partition vertices by equality of out-neighbourhoods (in-neighbourhoods if ``dual``)."""
    target = PairState.REVARC if dual else PairState.ARC
    classes = {}
    for v, row in enumerate(d.rows):
        key = frozenset(w for w, s in enumerate(row) if s == target and w != v)
        classes.setdefault(key, []).append(v)
    return sorted(tuple(c) for c in classes.values())


def relation_pairs(d, rel):
    """Ordered pairs satisfying ``rel``.

    ``rel`` is a :class:`PairState` or any container of ordered pairs (for
    instance an orbital from :mod:`sethom.perm`).
    """
    if isinstance(rel, (PairState, int)) and not isinstance(rel, bool):
        m = d.matrix == int(rel)
        np.fill_diagonal(m, False)
        return {tuple(p) for p in np.argwhere(m).tolist()}
    return {tuple(p) for p in rel}


def relation_compose(d, r1, r2):
    """``{(a, b) : exists c with r1(a, c) and r2(c, b)}``."""
    n = d.n
    a = np.zeros((n, n), dtype=bool)
    b = np.zeros((n, n), dtype=bool)
    for i, j in relation_pairs(d, r1):
        a[i, j] = True
    for i, j in relation_pairs(d, r2):
        b[i, j] = True
    c = (a.astype(np.int64) @ b.astype(np.int64)) > 0
    return {tuple(p) for p in np.argwhere(c).tolist()}


def all_labeled(n):
    """Every labelled s-digraph on ``n`` vertices (``4**(n*(n-1)/2)`` of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for states in product(range(4), repeat=len(pairs)):
        m = np.zeros((n, n), dtype=np.uint8)
        for (i, j), s in zip(pairs, states):
            m[i, j] = s
            m[j, i] = FLIP[s]
        yield SDigraph._trusted(m)
