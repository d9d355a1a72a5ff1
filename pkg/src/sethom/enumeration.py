"""Isomorph-free generation of small s-digraphs and the classification cross-check.

Generation is by canonical augmentation.  Each class on ``n - 1`` vertices is
stored in canonical form and extended by a new vertex in all ``4**(n-1)``
ways (the new row read as a base-4 number, ascending).  A child is kept when
the new vertex lies in the automorphism orbit of the vertex that the
canonical labelling places last.  Since that vertex always falls in the cell
of vertices with the lexicographically largest sorted row, children whose
new vertex is outside that cell are rejected before any canonical labelling.
"""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .catalog import theorem_list
from .core import FLIP, SDigraph, complement, weak_complement
from .homo import check_set_homogeneous
from .iso import canonical_code, canonical_form, extend_isomorphism, unpack_code

MAX_N = 6


class CapExceeded(ValueError):
    pass


def _check_cap(max_n):
    if max_n > MAX_N:
        raise CapExceeded(f"enumeration is capped at n={MAX_N}, got {max_n}")
    if max_n < 0:
        raise ValueError("max_n must be non-negative")


def _row_keys(mats):
    """Per-vertex sort keys (larger = later canonical cell) for a batch of matrices."""
    n = mats.shape[1]
    counts = np.stack([(mats == s).sum(axis=2) for s in range(4)], axis=2)
    counts[:, :, 0] -= 1  # the diagonal is not a pair
    # ascending sorted rows compare like (-c0, -c1, -c2) lexicographically
    return -(counts[:, :, 0] * (n + 1) ** 2 + counts[:, :, 1] * (n + 1) + counts[:, :, 2])


def _children(parent):
    """All one-vertex extensions of ``parent`` that pass the cell prefilter."""
    m = parent.matrix
    p = m.shape[0]
    ext = np.array(list(product(range(4), repeat=p)), dtype=np.uint8).reshape(-1, p)
    c = len(ext)
    mats = np.zeros((c, p + 1, p + 1), dtype=np.uint8)
    mats[:, :p, :p] = m
    mats[:, p, :p] = ext
    mats[:, :p, p] = np.array(FLIP, dtype=np.uint8)[ext]
    keys = _row_keys(mats)
    keep = keys[:, p] == keys.max(axis=1)
    return mats[keep]


def _accept(child):
    n = child.n
    cf = canonical_form(child)
    last = cf.relabeling.index(n - 1)
    if last != n - 1 and extend_isomorphism(child, child, [(n - 1, last)]) is None:
        return None
    return cf.code


def enumerate_all(max_n, progress=None):
    """Canonical codes of every s-digraph class on 1..``max_n`` vertices.

    Returns a dict ``{n: sorted list of codes}``.
    """
    _check_cap(max_n)
    out = {}
    if max_n < 1:
        return out
    level = [SDigraph(np.zeros((1, 1), dtype=np.uint8))]
    out[1] = [canonical_code(level[0])]
    for n in range(2, max_n + 1):
        codes = set()
        for i, parent in enumerate(level):
            local = set()
            for mat in _children(parent):
                code = _accept(SDigraph._trusted(mat))
                if code is not None:
                    local.add(code)
            if local & codes:
                raise AssertionError("canonical augmentation produced a class twice")
            codes |= local
            if progress is not None:
                progress(n, i + 1, len(level))
        out[n] = sorted(codes)
        if n < max_n:
            level = [unpack_code(c) for c in out[n]]
    return out


def brute_force_counts(max_n):
    """Class counts from canonicalising every labelled s-digraph (tiny ``n`` only)."""
    from .core import all_labeled

    if max_n > 4:
        raise CapExceeded("the labelled oracle is limited to n <= 4")
    return {n: len({canonical_code(d) for d in all_labeled(n)}) for n in range(1, max_n + 1)}


def _vertex_regular(d):
    m = d.matrix
    counts = np.stack([(m == s).sum(axis=1) for s in (1, 2, 3)], axis=1)
    return bool(np.all(counts == counts[0]))


@dataclass
class CrossCheckReport:
    max_n: int
    counts: dict
    survivors: list = field(default_factory=list)  # (n, code, label or None)
    missing: list = field(default_factory=list)  # theorem-list labels not found among survivors
    closure_failures: list = field(default_factory=list)

    @property
    def discrepancies(self):
        return [s for s in self.survivors if s[2] is None] + self.missing + self.closure_failures

    @property
    def ok(self):
        return not self.discrepancies

    def lines(self):
        out = [f"n={n}: {c} classes" for n, c in sorted(self.counts.items())]
        out.append(f"set-homogeneous survivors: {len(self.survivors)}")
        for n, code, label in self.survivors:
            out.append(f"  n={n} {code.hex()} {label if label else 'UNMATCHED'}")
        for label in self.missing:
            out.append(f"  missing from survivors: {label}")
        for item in self.closure_failures:
            out.append(f"  not closed: {item}")
        out.append("cross-check: " + ("ok" if self.ok else f"{len(self.discrepancies)} discrepancies"))
        return out

    def as_dict(self):
        return {
            "max_n": self.max_n,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "survivors": [{"n": n, "code": code.hex(), "label": label}
                          for n, code, label in self.survivors],
            "missing": list(self.missing),
            "closure_failures": list(self.closure_failures),
            "ok": self.ok,
        }


def set_homogeneous_survivors(classes):
    """Codes (from :func:`enumerate_all` output) whose digraph is set-homogeneous."""
    out = []
    for n in sorted(classes):
        for code in classes[n]:
            d = unpack_code(code)
            # set-homogeneous digraphs are vertex-transitive, hence regular
            if _vertex_regular(d) and check_set_homogeneous(d).holds:
                out.append((n, code))
    return out


def classify_cross_check(max_n, classes=None):
    """Compare the set-homogeneous classes up to ``max_n`` with the classification list."""
    _check_cap(max_n)
    if classes is None:
        classes = enumerate_all(max_n)
    known = {canonical_code(d): label for label, d in theorem_list(max_n)}
    surv = set_homogeneous_survivors(classes)
    report = CrossCheckReport(max_n, {n: len(c) for n, c in classes.items()})
    found = set()
    for n, code in surv:
        report.survivors.append((n, code, known.get(code)))
        found.add(code)
    report.missing = [label for code, label in known.items() if code not in found]
    for n, code in surv:
        d = unpack_code(code)
        for name, op in (("complement", complement), ("weak complement", weak_complement)):
            if canonical_code(op(d)) not in found:
                report.closure_failures.append(f"{name} of {code.hex()}")
    return report


def burnside_class_count(n):
    """Number of s-digraph classes on ``n`` vertices, by counting fixed labellings.

    A permutation fixes a labelling iff the labelling is constant along each
    cycle of unordered pairs; a cycle that carries some pair ``(i, j)`` onto
    ``(j, i)`` allows only the two flip-invariant states.
    """
    from itertools import permutations
    from math import factorial

    total = 0
    for g in permutations(range(n)):
        seen = set()
        fixed = 1
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) in seen:
                    continue
                a, b = i, j
                reversed_ = False
                while True:
                    seen.add((min(a, b), max(a, b)))
                    a, b = g[a], g[b]
                    if (a, b) == (j, i):
                        reversed_ = True
                    if {a, b} == {i, j}:
                        break
                fixed *= 2 if reversed_ else 4
        total += fixed
    return total // factorial(n)
