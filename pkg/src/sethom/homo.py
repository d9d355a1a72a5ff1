"""Set-homogeneity, k-set-homogeneity, k-homogeneity and homogeneity checks.

Subset orbits are listed by an orderly algorithm: a (k+1)-set is kept iff it
is the representative of its orbit and dropping its largest vertex leaves a
kept k-set.  The representative of an orbit is the member whose sorted vertex
tuple is lexicographically least; with that order the parent of a
representative is again a representative, which is what makes the orderly
scheme complete.

Set-homogeneity then amounts to: within each cardinality, the induced
digraphs on the representatives are pairwise non-isomorphic.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .core import induced
from .iso import (automorphism_generators, automorphism_group, canonical_code,
                  extend_isomorphism, find_isomorphism)
from .perm import ENUMERATION_LIMIT, check_automorphisms, min_subset_in_orbit, orbits_on_points

_M64 = np.uint64(0xFFFFFFFFFFFFFFFF)


@dataclass
class SubsetOrbitCatalog:
    """Orbit representatives per cardinality, each with its induced canonical code."""

    group_order: int
    levels: list = field(default_factory=list)  # levels[k] = [(rep tuple, code or None), ...]

    def reps(self, k):
        return [r for r, _ in self.levels[k]]

    def count(self, k=None):
        if k is None:
            return sum(len(lv) for lv in self.levels)
        return len(self.levels[k])

    @property
    def total(self):
        return self.count()


@dataclass
class Witness:
    U: tuple
    V: tuple
    mapping: tuple = None  # pairs (u, image) when the witness is a non-extending isomorphism

    def as_dict(self):
        out = {"U": list(self.U), "V": list(self.V)}
        if self.mapping is not None:
            out["map"] = [list(p) for p in self.mapping]
        return out


@dataclass
class HomogeneityVerdict:
    holds: bool
    predicate: str
    k: int = None
    witness: Witness = None

    def __bool__(self):
        return self.holds

    def describe(self):
        head = f"{self.predicate}: {'holds' if self.holds else 'fails'}"
        if self.holds:
            return head
        w = self.witness
        text = f"{head} at k={self.k}; U={list(w.U)} V={list(w.V)}"
        if w.mapping is not None:
            text += " map " + ", ".join(f"{a}->{b}" for a, b in w.mapping)
        return text


# --- orderly generation ------------------------------------------------------------

class _Orderly:
    """Level-by-level orderly generation of subset orbit representatives."""

    def __init__(self, n, G):
        self.n = n
        self.G = G
        self.small = G.order <= ENUMERATION_LIMIT
        if self.small and n > 62:
            raise ValueError("vectorised orderly generation supports n <= 62")
        if self.small:
            self._tables()

    def _tables(self):
        n = self.n
        elems = self.G.element_array().astype(np.int64)
        self.nbytes = (n + 7) // 8
        # tables[p][g, b]: reversed-bit image of byte value b at byte position p
        rev_bit = np.left_shift(np.uint64(1), (n - 1 - elems).astype(np.uint64))
        byte_vals = np.arange(256, dtype=np.uint64)
        self.tables = []
        for p in range(self.nbytes):
            t = np.zeros((len(elems), 256), dtype=np.uint64)
            for b in range(8):
                v = 8 * p + b
                if v >= n:
                    break
                has = ((byte_vals >> np.uint64(b)) & np.uint64(1)).astype(bool)
                t[:, has] |= rev_bit[:, v][:, None]
            self.tables.append(t)
        # a small, spread-out probe set catches most non-canonical candidates cheaply
        order = len(elems)
        step = max(1, order // 64)
        self.probe = np.arange(0, order, step)

    def _rev(self, masks):
        n = self.n
        out = np.zeros_like(masks)
        for v in range(n):
            bit = (masks >> np.uint64(v)) & np.uint64(1)
            out |= bit << np.uint64(n - 1 - v)
        return out

    def _max_image(self, masks, rows):
        best = None
        for p, t in enumerate(self.tables):
            byte = ((masks >> np.uint64(8 * p)) & np.uint64(0xFF)).astype(np.intp)
            part = t[rows][:, byte] if rows is not None else t[:, byte]
            best = part if best is None else best | part
        return best.max(axis=0)

    def _canonical_mask(self, masks):
        rev = self._rev(masks)
        keep = np.ones(len(masks), dtype=bool)
        chunk = max(1, 4_000_000 // max(1, len(self.probe)))
        for s in range(0, len(masks), chunk):
            sl = slice(s, s + chunk)
            keep[sl] = self._max_image(masks[sl], self.probe) <= rev[sl]
        idx = np.nonzero(keep)[0]
        chunk = max(1, 4_000_000 // self.G.order)
        for s in range(0, len(idx), chunk):
            part = idx[s:s + chunk]
            keep[part] = self._max_image(masks[part], None) <= rev[part]
        return keep

    def levels(self, max_k=None):
        """Yield ``(k, sorted list of rep tuples)`` for k = 0, 1, ..."""
        n = self.n
        max_k = n if max_k is None else min(max_k, n)
        if self.small:
            reps = np.zeros(1, dtype=np.uint64)
            tops = np.full(1, -1, dtype=np.int64)
            yield 0, [()]
            for k in range(1, max_k + 1):
                cands, ctops = [], []
                for e in range(n):
                    sel = tops < e
                    if sel.any():
                        cands.append(reps[sel] | np.uint64(1 << e))
                        ctops.append(np.full(int(sel.sum()), e, dtype=np.int64))
                if not cands:
                    return
                cands = np.concatenate(cands)
                ctops = np.concatenate(ctops)
                keep = self._canonical_mask(cands)
                reps, tops = cands[keep], ctops[keep]
                # lexicographic order of sorted tuples = descending reversed masks
                order = np.argsort(self._rev(reps))[::-1]
                reps, tops = reps[order], tops[order]
                yield k, [_mask_tuple(int(m)) for m in reps]
        else:
            reps = [()]
            yield 0, reps
            for k in range(1, max_k + 1):
                nxt = []
                for r in reps:
                    top = r[-1] if r else -1
                    for e in range(top + 1, n):
                        T = r + (e,)
                        if min_subset_in_orbit(self.G, T) == T:
                            nxt.append(T)
                if not nxt:
                    return
                reps = sorted(nxt)
                yield k, reps


def _mask_tuple(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def subset_orbit_reps(d, G=None, max_k=None, codes=True):
    """Orbit representatives of ``G`` (default ``Aut(d)``) on vertex subsets.

    With ``codes`` each representative carries the canonical code of the
    digraph it induces; otherwise the code slot is ``None``.
    """
    if G is None:
        G = automorphism_group(d)
    else:
        check_automorphisms(G, d)
    cat = SubsetOrbitCatalog(group_order=G.order)
    for k, reps in _Orderly(d.n, G).levels(max_k):
        cat.levels.append([(r, canonical_code(induced(d, r)) if codes else None) for r in reps])
    return cat


# --- induced-structure invariants -----------------------------------------------

def _mix(x):
    # splitmix64 finaliser, on uint64 arrays (wrapping arithmetic is exact)
    x = x ^ (x >> np.uint64(30))
    x = x * np.uint64(0xBF58476D1CE4E5B9)
    x = x ^ (x >> np.uint64(27))
    x = x * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


def induced_invariants(d, reps, rounds=3):
    """Isomorphism invariants of the digraphs induced on ``reps`` (equal size).

    Colour refinement carried out with wrapping uint64 arithmetic on the whole
    batch: equal invariants are necessary for isomorphism, so distinct rows
    prove non-isomorphism.
    """
    n = d.n
    k = len(reps[0]) if reps else 0
    if k == 0:
        return np.zeros((len(reps), 0), dtype=np.uint64)
    idx = np.array(reps, dtype=np.intp)
    member = np.zeros((len(reps), n), dtype=np.uint64)
    np.put_along_axis(member, idx, np.uint64(1), axis=1)
    mats = [(d.matrix == s).astype(np.uint64) for s in (1, 2, 3)]
    with np.errstate(over="ignore"):
        degs = [member @ m.T for m in mats]
        color = _mix(degs[0] + (degs[1] << np.uint64(8)) + (degs[2] << np.uint64(16))
                     + np.uint64(0x9E3779B97F4A7C15))
        for r in range(rounds):
            h = _mix(color + np.uint64(r + 1)) * member
            total = h.sum(axis=1, keepdims=True)
            sums = [h @ m.T for m in mats]
            color = _mix(color * np.uint64(0x100000001B3)
                         + _mix(sums[0] + np.uint64(1)) * np.uint64(3)
                         + _mix(sums[1] + np.uint64(2)) * np.uint64(5)
                         + _mix(sums[2] + np.uint64(3)) * np.uint64(7)
                         + _mix(total - h + np.uint64(4)))
    picked = np.take_along_axis(color, idx, axis=1)
    picked.sort(axis=1)
    return picked


def _duplicate_groups(inv):
    """Index groups of rows of ``inv`` that coincide."""
    if len(inv) < 2:
        return []
    _, inverse_idx, counts = np.unique(inv, axis=0, return_inverse=True, return_counts=True)
    inverse_idx = inverse_idx.ravel()
    groups = {}
    for i, g in enumerate(inverse_idx.tolist()):
        if counts[g] > 1:
            groups.setdefault(g, []).append(i)
    return list(groups.values())


def _level_collision(d, reps):
    """Least pair ``(U, V)`` of representatives with isomorphic induced digraphs, if any."""
    if len(reps) < 2:
        return None
    best = None
    for grp in _duplicate_groups(induced_invariants(d, reps)):
        codes = {}
        for i in grp:
            codes.setdefault(canonical_code(induced(d, reps[i])), []).append(reps[i])
        for members in codes.values():
            if len(members) > 1:
                pair = tuple(sorted(members)[:2])
                if best is None or pair < best:
                    best = pair
    return best


def _set_witness(d, U, V):
    g = find_isomorphism(induced(d, U), induced(d, V))
    return Witness(U, V, tuple((U[i], V[g[i]]) for i in range(len(U))))


# --- public checks -------------------------------------------------------------------

def _sweep(d, G, max_k):
    """Run the orderly levels, stopping at the first cardinality with a collision."""
    for k, reps in _Orderly(d.n, G).levels(max_k):
        pair = _level_collision(d, reps)
        if pair is not None:
            return k, pair, reps
    return None, None, None


def check_set_homogeneous(d, G=None):
    """Set-homogeneity: isomorphic induced subdigraphs always lie in one orbit."""
    return _check_set(d, G, None, "set-homogeneous")


def check_k_set_homogeneous(d, k, G=None):
    """The size-``k`` slice of :func:`check_set_homogeneous`."""
    name = f"{k}-set-homogeneous"
    if not 0 <= k <= d.n:
        raise ValueError(f"k={k} outside 0..{d.n}")
    if k == 0:
        return HomogeneityVerdict(True, name, k)
    pair = _level_collision(d, _level(d, G or automorphism_group(d), k))
    if pair is None:
        return HomogeneityVerdict(True, name, k)
    return HomogeneityVerdict(False, name, k, _set_witness(d, *pair))


def _level(d, G, k):
    for kk, reps in _Orderly(d.n, G).levels(k):
        if kk == k:
            return reps
    return []


def _check_set(d, G, max_k, name):
    if G is None:
        G = automorphism_group(d)
    else:
        check_automorphisms(G, d)
    k, pair, _ = _sweep(d, G, max_k)
    if pair is None:
        return HomogeneityVerdict(True, name)
    return HomogeneityVerdict(False, name, k, _set_witness(d, *pair))


def _extends(d, mapping):
    return extend_isomorphism(d, d, list(mapping)) is not None


def _nice_witness(d, G, U, sigma):
    """Compose ``sigma`` (a map U -> U) with group elements, preferring many fixed points."""
    base = tuple((u, sigma[u]) for u in U)
    if G.order > ENUMERATION_LIMIT:
        return Witness(U, U, base)
    best = None
    for g in G.element_array().tolist():
        mp = tuple((u, g[sigma[u]]) for u in U)
        V = tuple(sorted(b for _, b in mp))
        fixed = sum(1 for a, b in mp if a == b)
        key = (-fixed, V, tuple(b for _, b in mp))
        if best is None or key < best[0]:
            best = (key, V, mp)
    return Witness(U, best[1], best[2])


def check_k_homogeneous(d, k, G=None):
    """Every isomorphism between induced substructures of size ``k`` extends.

    Equivalent to the ordered-tuple orbit count matching the number of
    ordered isomorphism types: each type forms one subset orbit, and the
    set stabiliser of each representative induces its full automorphism group.
    """
    name = f"{k}-homogeneous"
    if not 0 <= k <= d.n:
        raise ValueError(f"k={k} outside 0..{d.n}")
    if k == 0:
        return HomogeneityVerdict(True, name, k)
    G = G or automorphism_group(d)
    reps = _level(d, G, k)
    pair = _level_collision(d, reps)
    if pair is not None:
        return HomogeneityVerdict(False, name, k, _set_witness(d, *pair))
    for U in reps:
        gens, _ = automorphism_generators(induced(d, U))
        for g in gens:
            sigma = {U[i]: U[g[i]] for i in range(k)}
            if not _extends(d, sigma.items()):
                return HomogeneityVerdict(False, name, k, _nice_witness(d, G, U, sigma))
    return HomogeneityVerdict(True, name, k)


def check_homogeneous(d, max_k=None):
    """Conjunction of k-homogeneity for k = 1..max_k (default: all of ``d``)."""
    max_k = d.n if max_k is None else max_k
    if not 0 <= max_k <= d.n:
        raise ValueError(f"max_k={max_k} outside 0..{d.n}")
    G = automorphism_group(d)
    for k in range(1, max_k + 1):
        v = check_k_homogeneous(d, k, G)
        if not v.holds:
            return HomogeneityVerdict(False, "homogeneous", k, v.witness)
    return HomogeneityVerdict(True, "homogeneous", max_k)


def first_failing_k(d, max_k=None):
    """Smallest k at which k-homogeneity fails, or ``None``."""
    v = check_homogeneous(d, max_k)
    return None if v.holds else v.k


# --- witness verification and brute-force oracles ----------------------------

def verify_witness(d, verdict):
    """Recheck a failure witness against the full automorphism group."""
    if verdict.holds:
        return False
    w = verdict.witness
    G = automorphism_group(d)
    U, V = tuple(w.U), tuple(w.V)
    if len(U) != len(V):
        return False
    mp = dict(w.mapping) if w.mapping is not None else None
    if mp is None:
        return False
    # the map is an isomorphism of induced structures
    rows = d.rows
    for a in U:
        for b in U:
            if a != b and rows[a][b] != rows[mp[a]][mp[b]]:
                return False
    if sorted(mp.values()) != sorted(V):
        return False
    elems = G.elements() if G.order <= 40 * ENUMERATION_LIMIT else None
    if elems is None:
        return not _extends(d, mp.items())
    if verdict.predicate.endswith("set-homogeneous"):
        target = set(V)
        return not any({g[u] for u in U} == target for g in elems)
    return not any(all(g[a] == b for a, b in mp.items()) for g in elems)


def brute_k_set_homogeneous(d, k, elems=None):
    """Oracle: compare every pair of k-subsets directly (small ``d`` only)."""
    if elems is None:
        elems = automorphism_group(d).elements()
    subsets = list(combinations(range(d.n), k))
    seen = set()
    classes = {}
    for S in subsets:
        if S in seen:
            continue
        orbit = {tuple(sorted(g[x] for x in S)) for g in elems}
        seen |= orbit
        code = canonical_code(induced(d, S))
        if code in classes:
            return False
        classes[code] = S
    return True


def brute_k_homogeneous(d, k, elems=None):
    """Oracle: count orbits on injective k-tuples against ordered isomorphism types."""
    if elems is None:
        elems = automorphism_group(d).elements()
    rows = d.rows
    tuples = list(permutations(range(d.n), k))
    types = {tuple(rows[t[i]][t[j]] for i in range(k) for j in range(k)) for t in tuples}
    seen = set()
    orbits = 0
    for t in tuples:
        if t in seen:
            continue
        orbits += 1
        seen |= {tuple(g[x] for x in t) for g in elems}
    return orbits == len(types)
