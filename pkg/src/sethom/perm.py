"""Permutations and permutation groups.

Permutations are plain tuples of images: ``p[i]`` is the image of ``i``.
They act on the right, so ``mul(g, h)`` means "apply ``g``, then ``h``".

A :class:`PermGroup` is given by generators; a base and strong generating set
(Schreier-Sims) are built on demand and give the exact order, membership
testing and, for small groups, the full element list.
"""

from collections import deque
from itertools import combinations, permutations
from math import comb, prod

import numpy as np

#: groups up to this order are enumerated element by element
ENUMERATION_LIMIT = 10_000


class PermError(ValueError):
    pass


class DegreeMismatch(PermError):
    pass


class NotABijection(PermError):
    pass


class NotAutomorphism(PermError):
    pass


def as_perm(images, degree=None):
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise NotABijection(f"{p} is not a bijection on 0..{len(p) - 1}")
    if degree is not None and len(p) != degree:
        raise DegreeMismatch(f"expected degree {degree}, got {len(p)}")
    return p


def identity(n):
    return tuple(range(n))


def mul(g, h):
    return tuple(h[x] for x in g)


def inverse(g):
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def power(g, k):
    out = identity(len(g))
    for _ in range(k):
        out = mul(out, g)
    return out


def is_identity(g):
    return all(i == x for i, x in enumerate(g))


def cycles(g):
    seen = set()
    out = []
    for i in range(len(g)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = g[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = g[j]
        out.append(tuple(cyc))
    return out


def cycle_notation(g):
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(g) if len(c) > 1]
    return "".join(parts) or "()"


def from_cycles(n, cycs):
    img = list(range(n))
    for c in cycs:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return as_perm(img)


def perm_order(g):
    o = 1
    for c in cycles(g):
        o = o * len(c) // _gcd(o, len(c))
    return o


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def is_automorphism(d, g):
    rows = d.rows
    n = d.n
    for i in range(n):
        ri, gi = rows[i], rows[g[i]]
        for j in range(n):
            if ri[j] != gi[g[j]]:
                return False
    return True


class _Chain:
    """Base, strong generators per level, and transversals (dict point -> perm)."""

    def __init__(self, n, gens, base_prefix=()):
        self.n = n
        self.base = list(base_prefix)
        self.strong = []
        self.trans = []
        gens = [g for g in gens if not is_identity(g)]
        for g in gens:
            if all(g[b] == b for b in self.base):
                self.base.append(self._moved_point(g, gens))
        for i in range(len(self.base)):
            fixed = self.base[:i]
            self.strong.append([g for g in gens if all(g[b] == b for b in fixed)])
            self.trans.append(self._orbit(self.base[i], self.strong[i]))
        self._schreier_sims()

    def _moved_point(self, g, gens):
        # greedy: among points moved by g, the one with largest orbit under gens
        moved = [x for x in range(self.n) if g[x] != x]
        sizes = {}
        for x in moved:
            sizes[x] = len(_orbit_points(x, gens))
        return max(moved, key=lambda x: (sizes[x], -x))

    def _orbit(self, b, gens):
        ident = identity(self.n)
        tr = {b: ident}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            ux = tr[x]
            for s in gens:
                y = s[x]
                if y not in tr:
                    tr[y] = mul(ux, s)
                    queue.append(y)
        return tr

    def sift(self, g, start=0):
        for level in range(start, len(self.base)):
            b = g[self.base[level]]
            u = self.trans[level].get(b)
            if u is None:
                return g, level
            g = mul(g, inverse(u))
        return g, len(self.base)

    def _schreier_sims(self):
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            for beta, u_beta in list(self.trans[i].items()):
                for s in self.strong[i]:
                    u_next = self.trans[i][s[beta]]
                    schreier = mul(mul(u_beta, s), inverse(u_next))
                    h, j = self.sift(schreier, i + 1)
                    if is_identity(h):
                        continue
                    if j == len(self.base):
                        self.base.append(self._moved_point(h, [h] + self.strong[i]))
                        self.strong.append([])
                        self.trans.append({})
                    for level in range(i + 1, j + 1):
                        self.strong[level].append(h)
                        self.trans[level] = self._orbit(self.base[level], self.strong[level])
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    @property
    def order(self):
        return prod(len(t) for t in self.trans)


def _orbit_points(x, gens):
    seen = {x}
    queue = [x]
    while queue:
        y = queue.pop()
        for g in gens:
            z = g[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


class PermGroup:
    """Permutation group on ``0..degree-1`` given by generators."""

    def __init__(self, degree, generators=()):
        gens = []
        for g in generators:
            g = as_perm(g)
            if len(g) != degree:
                raise DegreeMismatch(f"generator of degree {len(g)} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = None
        self._elements = None

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={len(self.generators)})"

    @property
    def chain(self):
        if self._chain is None:
            self._chain = _Chain(self.degree, self.generators)
        return self._chain

    @property
    def order(self):
        return self.chain.order

    @property
    def base(self):
        return tuple(self.chain.base)

    def __contains__(self, g):
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self.chain.sift(g)
        return is_identity(h)

    def stabilizer_chain(self, base_prefix):
        """Chain whose base starts with ``base_prefix``."""
        return _Chain(self.degree, self.generators, base_prefix)

    def pointwise_stabilizer_order(self, points):
        points = list(points)
        if not points:
            return self.order
        ch = self.stabilizer_chain(points)
        return prod(len(t) for t in ch.trans[len(points):])

    def pointwise_stabilizer(self, points):
        """Subgroup fixing every point in ``points``."""
        points = list(points)
        ch = self.stabilizer_chain(points)
        k = len(points)
        gens = ch.strong[k] if k < len(ch.strong) else []
        return PermGroup(self.degree, gens)

    def element_array(self):
        """All elements as an ``(order, degree)`` int array (small groups only)."""
        if self._elements is None:
            if self.order > ENUMERATION_LIMIT * 40:
                raise PermError(f"refusing to enumerate a group of order {self.order}")
            ch = self.chain
            elems = np.arange(self.degree, dtype=np.int16)[None, :]
            for level in reversed(range(len(ch.base))):
                us = np.array(list(ch.trans[level].values()), dtype=np.int16)
                # right action: element then coset representative
                elems = np.concatenate([u[elems] for u in us], axis=0)
            elems.setflags(write=False)
            self._elements = elems
        return self._elements

    def elements(self):
        return [tuple(r) for r in self.element_array().tolist()]

    def is_transitive(self):
        return len(orbits_on_points(self)) <= 1


def group_from_generators(gens, degree=None):
    gens = [as_perm(g) for g in gens]
    if degree is None:
        if not gens:
            raise DegreeMismatch("degree is required when no generators are given")
        degree = len(gens[0])
    return PermGroup(degree, gens)


def symmetric_group(n):
    gens = []
    if n >= 2:
        gens.append(from_cycles(n, [tuple(range(n))]))
        gens.append(from_cycles(n, [(0, 1)]))
    return PermGroup(n, gens)


def cyclic_group(n):
    return PermGroup(n, [from_cycles(n, [tuple(range(n))])] if n >= 2 else [])


def orbits_on_points(G):
    seen = set()
    out = []
    for x in range(G.degree):
        if x not in seen:
            orb = _orbit_points(x, G.generators)
            seen |= orb
            out.append(tuple(sorted(orb)))
    return out


class OrbitalDecomposition:
    """Orbit labels on ordered pairs ``(i, j)``, ``i != j``, plus the pairing map."""

    def __init__(self, degree, labels, pairing):
        self.degree = degree
        self.labels = labels
        self.pairing = pairing

    @property
    def count(self):
        return len(self.pairing)

    def orbital(self, k):
        return sorted(p for p, lab in self.labels.items() if lab == k)

    def section(self, k, v):
        """``Lambda(v)`` for orbital ``k``."""
        return tuple(sorted(j for (i, j), lab in self.labels.items() if lab == k and i == v))

    def self_paired(self, k):
        return self.pairing[k] == k


def orbital_decomposition(G):
    n = G.degree
    labels = {}
    next_label = 0
    for i in range(n):
        for j in range(n):
            if i == j or (i, j) in labels:
                continue
            labels[(i, j)] = next_label
            queue = [(i, j)]
            while queue:
                a, b = queue.pop()
                for g in G.generators:
                    q = (g[a], g[b])
                    if q not in labels:
                        labels[q] = next_label
                        queue.append(q)
            next_label += 1
    pairing = {}
    for (i, j), lab in labels.items():
        pairing.setdefault(lab, labels[(j, i)])
    return OrbitalDecomposition(n, labels, [pairing[k] for k in range(next_label)])


def check_automorphisms(G, d):
    for g in G.generators:
        if not is_automorphism(d, g):
            raise NotAutomorphism(f"{cycle_notation(g)} does not preserve the digraph")


def suborbit_sizes(G, d, v):
    """Return ``(|out(v)|, |in(v)|, {orbital index: |Lambda(v)|})``."""
    check_automorphisms(G, d)
    rows = d.rows
    out = sum(1 for w in range(d.n) if w != v and rows[v][w] == 1)
    inn = sum(1 for w in range(d.n) if w != v and rows[v][w] == 2)
    orb = orbital_decomposition(G)
    sizes = {}
    for (i, j), lab in orb.labels.items():
        if i == v:
            sizes[lab] = sizes.get(lab, 0) + 1
    return out, inn, dict(sorted(sizes.items()))


# --- subsets ---------------------------------------------------------------

def lex_key(vertices):
    """Sort key realising the representative order: lexicographic on sorted tuples."""
    return tuple(sorted(vertices))


def subset_orbit(G, S):
    """The orbit of the set ``S`` under ``G`` as a set of frozensets (BFS)."""
    start = frozenset(S)
    seen = {start}
    queue = [start]
    while queue:
        T = queue.pop()
        for g in G.generators:
            U = frozenset(g[x] for x in T)
            if U not in seen:
                seen.add(U)
                queue.append(U)
    return seen


def min_subset_in_orbit(G, S):
    """Orbit representative of ``S``: the image whose sorted tuple is lexicographically least."""
    S = tuple(sorted(S))
    if not S or not G.generators:
        return S
    if G.order <= ENUMERATION_LIMIT:
        imgs = np.sort(G.element_array()[:, list(S)], axis=1)
        best = imgs[np.lexsort(imgs.T[::-1])[0]]
        return tuple(int(x) for x in best)
    return min(tuple(sorted(T)) for T in subset_orbit(G, S))


def group_k_homogeneity(G, k):
    """``(k_homogeneous, k_transitive)`` for the action of ``G`` on its points."""
    n = G.degree
    if not 0 <= k <= n:
        raise PermError(f"k={k} outside 0..{n}")
    kk = min(k, n - k)  # orbits on k-sets correspond to orbits on complements
    total = comb(n, kk)
    homog = total <= 1 or len(subset_orbit(G, range(kk))) == total
    ch = G.stabilizer_chain(list(range(k)))
    trans = all(len(ch.trans[i]) == n - i for i in range(k))
    return homog, trans


def count_orbits_on_tuples(G, k):
    """Brute-force number of orbits on injective ``k``-tuples (oracle use)."""
    seen = set()
    orbits = 0
    for t in permutations(range(G.degree), k):
        if t in seen:
            continue
        orbits += 1
        queue = [t]
        seen.add(t)
        while queue:
            u = queue.pop()
            for g in G.generators:
                v = tuple(g[x] for x in u)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return orbits


def count_orbits_on_subsets(G, k):
    seen = set()
    orbits = 0
    for S in combinations(range(G.degree), k):
        if frozenset(S) not in seen:
            orbits += 1
            seen |= subset_orbit(G, S)
    return orbits


def burnside_subset_count(G):
    """Number of orbits on all subsets: ``(1/|G|) * sum_g 2**cycles(g)``."""
    elems = G.element_array()
    total = 0
    for g in elems.tolist():
        total += 1 << len(cycles(g))
    q, r = divmod(total, G.order)
    if r:
        raise PermError("Burnside sum not divisible by the group order")
    return q

