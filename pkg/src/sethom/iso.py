"""Canonical forms, isomorphism testing and automorphism groups.

The engine is individualisation-refinement over the 4-valued pair-state
matrix.  Refinement splits each cell by the sorted multiset of
``(neighbour colour, pair state)`` until the ordered partition is equitable;
every split is recorded in a *trace* that is compared across branches.

Canonical codes have a stable byte layout: ``0x01``, ``n`` as one byte, then
the upper triangle of the relabelled state matrix in row-major order, two
bits per pair, most significant bits first.
"""

from dataclasses import dataclass

from .core import SDigraph
from .perm import PermGroup, inverse

CODE_VERSION = 1


@dataclass(frozen=True)
class CanonicalForm:
    relabeling: tuple  # relabeling[v] = canonical position of input vertex v
    code: bytes

    @property
    def n(self):
        return self.code[1]


def refine(rows, cells):
    """Refine an ordered partition to an equitable one.

    Returns ``(cells, trace)``.  Both depend only on the isomorphism type of
    ``(rows, cells)``, never on vertex names.
    """
    n = len(rows)
    cells = [list(c) for c in cells]
    trace = []
    while True:
        color = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                color[v] = ci
        new_cells = []
        changed = False
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                r = rows[v]
                key = tuple(sorted([color[w] * 4 + r[w] for w in range(n) if w != v]))
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
                trace.append((ci, key, len(groups[key])))
        cells = new_cells
        if not changed:
            return cells, tuple(trace)


def individualize(cells, v):
    out = []
    for cell in cells:
        if v in cell:
            out.append([v])
            rest = [w for w in cell if w != v]
            if rest:
                out.append(rest)
        else:
            out.append(cell)
    return out


def _target(cells):
    # smallest non-singleton cell, ties by position
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


def _code_for(rows, order):
    n = len(order)
    return tuple(rows[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))


def pack_code(n, states):
    out = bytearray([CODE_VERSION, n])
    acc = 0
    k = 0
    for s in states:
        acc = (acc << 2) | s
        k += 1
        if k == 4:
            out.append(acc)
            acc = k = 0
    if k:
        out.append(acc << (2 * (4 - k)))
    return bytes(out)


def unpack_code(code):
    if not code or code[0] != CODE_VERSION:
        raise ValueError("unknown canonical code version")
    n = code[1]
    m = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            byte = code[2 + idx // 4]
            s = (byte >> (2 * (3 - idx % 4))) & 3
            m[i][j] = s
            m[j][i] = (0, 2, 1, 3)[s]
            idx += 1
    return SDigraph(m)


class _CanonSearch:
    def __init__(self, rows):
        self.rows = rows
        self.n = len(rows)
        self.best = None  # (trace_path, code, order, seq)
        self.first = None  # (code, order, seq)
        self.autos = []

    def run(self):
        cells, tr = refine(self.rows, [list(range(self.n))])
        self._search(cells, [tr], [])
        return self.best

    def _leaf(self, cells, traces, seq):
        order = [c[0] for c in cells]
        code = _code_for(self.rows, order)
        jump = None
        if self.first is None:
            self.first = (code, order, list(seq))
        elif code == self.first[0]:
            self._record_auto(self.first[1], order)
            jump = _common_prefix(seq, self.first[2])
        if self.best is None or (traces, code) > (self.best[0], self.best[1]):
            self.best = (list(traces), code, order, list(seq))
        elif (traces, code) == (self.best[0], self.best[1]) and jump is None:
            self._record_auto(self.best[2], order)
            jump = _common_prefix(seq, self.best[3])
        return jump

    def _record_auto(self, order_a, order_b):
        # vertex at position p of leaf a maps to vertex at position p of leaf b
        g = [0] * self.n
        for a, b in zip(order_a, order_b):
            g[a] = b
        g = tuple(g)
        if any(i != x for i, x in enumerate(g)):
            self.autos.append(g)

    def _search(self, cells, traces, seq):
        t = _target(cells)
        if t is None:
            return self._leaf(cells, traces, seq)
        depth = len(seq)
        done = []
        for w in list(cells[t]):
            if done and _in_orbit(w, done, [g for g in self.autos if all(g[u] == u for u in seq)]):
                continue
            done.append(w)
            child, tr = refine(self.rows, individualize(cells, w))
            new_traces = traces + [tr]
            if self.best is not None and new_traces < self.best[0][:len(new_traces)]:
                continue
            jump = self._search(child, new_traces, seq + [w])
            if jump is not None and jump < depth:
                return jump
        return None


def _common_prefix(a, b):
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def _in_orbit(w, reps, gens):
    if not gens:
        return False
    seen = set(reps)
    stack = list(reps)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y == w:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def canonical_form(d):
    """Canonical relabelling and code; isomorphic inputs get byte-equal codes."""
    n = d.n
    if n == 0:
        return CanonicalForm((), pack_code(0, ()))
    _, code, order, _ = _CanonSearch(d.rows).run()
    relabeling = [0] * n
    for pos, v in enumerate(order):
        relabeling[v] = pos
    return CanonicalForm(tuple(relabeling), pack_code(n, code))


def canonical_code(d):
    return canonical_form(d).code


def canonical_digraph(d):
    cf = canonical_form(d)
    return d.relabel(cf.relabeling)


# --- isomorphism search ------------------------------------------------------

def _extend(rows_a, rows_b, cells_a, cells_b):
    """Search for an isomorphism mapping cell ``i`` of ``a`` onto cell ``i`` of ``b``."""
    t = _target(cells_a)
    if t is None:
        g = [0] * len(rows_a)
        for ca, cb in zip(cells_a, cells_b):
            g[ca[0]] = cb[0]
        return tuple(g) if _is_iso(rows_a, rows_b, g) else None
    v = cells_a[t][0]
    child_a, tr_a = refine(rows_a, individualize(cells_a, v))
    for w in cells_b[t]:
        child_b, tr_b = refine(rows_b, individualize(cells_b, w))
        if tr_a != tr_b:
            continue
        g = _extend(rows_a, rows_b, child_a, child_b)
        if g is not None:
            return g
    return None


def _is_iso(rows_a, rows_b, g):
    n = len(rows_a)
    for i in range(n):
        ra, rb = rows_a[i], rows_b[g[i]]
        for j in range(n):
            if ra[j] != rb[g[j]]:
                return False
    return True


def extend_isomorphism(d1, d2, partial):
    """Extend ``partial`` (list of ``(u, v)`` pairs) to an isomorphism ``d1 -> d2``.

    Returns the full map as a tuple, or ``None`` when no extension exists.
    """
    if d1.n != d2.n:
        return None
    ra, rb = d1.rows, d2.rows
    ca, ta = refine(ra, [list(range(d1.n))])
    cb, tb = refine(rb, [list(range(d2.n))])
    if ta != tb:
        return None
    for u, v in partial:
        ia = next(i for i, c in enumerate(ca) if u in c)
        ib = next(i for i, c in enumerate(cb) if v in c)
        if ia != ib:
            return None
        ca, ta = refine(ra, individualize(ca, u))
        cb, tb = refine(rb, individualize(cb, v))
        if ta != tb:
            return None
    return _extend(ra, rb, ca, cb)


def find_isomorphism(d1, d2):
    """A vertex bijection ``g`` with ``state1(i, j) == state2(g[i], g[j])``, or ``None``."""
    return extend_isomorphism(d1, d2, [])


def is_isomorphism(d1, d2, g):
    return d1.n == d2.n and sorted(g) == list(range(d1.n)) and _is_iso(d1.rows, d2.rows, g)


def automorphism_generators(d):
    """Generators of ``Aut(d)`` and the first-path base.

    Works down a first path of individualised vertices; at each level the
    orbit of the chosen vertex under the pointwise stabiliser of the earlier
    ones is completed by searching for automorphisms onto every remaining
    candidate in its cell.
    """
    rows = d.rows
    n = d.n
    if n == 0:
        return [], []
    path = []
    cells, tr = refine(rows, [list(range(n))])
    seq = []
    while True:
        t = _target(cells)
        if t is None:
            break
        v = cells[t][0]
        child, ctr = refine(rows, individualize(cells, v))
        path.append((cells, t, v, child, ctr))
        seq.append(v)
        cells = child
    gens = []
    for level in reversed(range(len(path))):
        node, t, v, child, ctr = path[level]
        orbit = _orbit_of(v, gens)
        for w in node[t]:
            if w in orbit:
                continue
            other, otr = refine(rows, individualize(node, w))
            if otr != ctr:
                continue
            g = _extend(rows, rows, child, other)
            if g is not None:
                gens.append(g)
                orbit = _orbit_of(v, gens)
    return gens, seq


def _orbit_of(v, gens):
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_group(d):
    gens, _ = automorphism_generators(d)
    return PermGroup(d.n, gens)


def are_isomorphic(d1, d2):
    return d1.n == d2.n and canonical_code(d1) == canonical_code(d2)


__all__ = [
    "CanonicalForm", "canonical_form", "canonical_code", "canonical_digraph",
    "find_isomorphism", "extend_isomorphism", "is_isomorphism",
    "automorphism_group", "automorphism_generators", "are_isomorphic",
    "pack_code", "unpack_code", "refine", "inverse",
]
