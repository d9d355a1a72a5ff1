"""Named s-digraphs and a small expression language for combining them.

Grammar (whitespace ignored, names case-insensitive)::

    expr    := term ('*' term)*                 direct product, left-assoc
    term    := primary ('[' expr ']')*          compositional product
    primary := NAME | NAME '(' INT (',' INT)? ')'
             | ('comp' | 'wcomp' | 'conv') '(' expr ')'
             | '(' expr ')'

Algebraic digraphs (H0, H3, X) number their vertices lexicographically by
coordinates over GF(3) with ``0 < 1 < 2``; the field element -1 is stored as 2.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .core import (PairState, SDigraph, comp_product, complement, direct_product,
                   from_relations, new_sdigraph, weak_complement)


class CatalogError(ValueError):
    pass


class MalformedExpr(CatalogError):
    pass


class ParamOutOfRange(CatalogError):
    pass


class UnknownName(CatalogError):
    pass


class ExprSyntaxError(CatalogError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    name: str
    params: tuple = ()

    def __str__(self):
        if self.params:
            return f"{ATOMS[self.name][0]}({','.join(map(str, self.params))})"
        return ATOMS[self.name][0]


@dataclass(frozen=True)
class Unary:
    op: str  # comp | wcomp | conv
    arg: object

    def __str__(self):
        return f"{self.op}({self.arg})"


@dataclass(frozen=True)
class Binary:
    op: str  # "[]" compositional, "*" direct
    left: object
    right: object

    def __str__(self):
        if self.op == "[]":
            return f"{_wrap(self.left, '[]')}[{self.right}]"
        return f"{_wrap(self.left, '*')}*{_wrap(self.right, '*', right=True)}"


def _wrap(e, ctx, right=False):
    if isinstance(e, Binary) and (e.op == "*" and (ctx == "[]" or right)):
        return f"({e})"
    return str(e)


# --- GF(3) helpers -----------------------------------------------------------

def det2(u, v):
    """Determinant of the 2x2 matrix with columns u and v, mod 3."""
    return (u[0] * v[1] - v[0] * u[1]) % 3


VECTORS = list(product(range(3), repeat=2))
NONZERO = VECTORS[1:]
COVER_VERTICES = [(u, a) for u in VECTORS for a in range(3)]


def cover_index(u, a):
    return (u[0] * 3 + u[1]) * 3 + a % 3


# --- constructors ------------------------------------------------------------

def complete(n):
    return from_relations(n, edges=[(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n):
    return new_sdigraph(n)


def complete_bipartite(m, n):
    return from_relations(m + n, edges=[(i, m + j) for i in range(m) for j in range(n)])


def cycle(n):
    if n < 3:
        raise ParamOutOfRange("C(n) needs n >= 3")
    return from_relations(n, edges=[(i, (i + 1) % n) for i in range(n)])


def directed_cycle(n):
    if n == 2 or n < 1:
        raise ParamOutOfRange("D(n) needs n = 1 or n >= 3")
    if n == 1:
        return new_sdigraph(1)
    return from_relations(n, arcs=[(i, (i + 1) % n) for i in range(n)])


def p3():
    return from_relations(3, arcs=[(0, 1), (1, 2), (0, 2)])


def e6():
    return from_relations(6, arcs=[(i, (i + 1) % 6) for i in range(6)],
                          edges=[(i, i + 3) for i in range(3)])


def e7():
    return from_relations(7, arcs=[(i, (i + 1) % 7) for i in range(7)],
                          edges=[(i, (i + 3) % 7) for i in range(7)])


def f6():
    # x1 y1 z1 x2 y2 z2 -> 0..5
    arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    return from_relations(6, arcs=arcs, edges=[(0, 3), (1, 4), (2, 5)])


def j_digraph(n):
    """Three independent blocks of size n; block i sends arcs to block i+1 except along the matching."""
    if n < 1:
        raise ParamOutOfRange("J(n) needs n >= 1")
    arcs, edges = [], []
    for b in range(3):
        nb = (b + 1) % 3
        for x in range(n):
            for y in range(n):
                if x == y:
                    edges.append((b * n + x, nb * n + y))
                else:
                    arcs.append((b * n + x, nb * n + y))
    return from_relations(3 * n, arcs=arcs, edges=edges)


def h0():
    """The 8 nonzero vectors of GF(3)^2, arc u -> v iff det(u, v) = 1."""
    arcs = [(i, j) for i, u in enumerate(NONZERO) for j, v in enumerate(NONZERO)
            if det2(u, v) == 1]
    return from_relations(8, arcs=arcs)


# H1 as drawn: node names are the vector labels of the H0 figure (digit 2 = -1),
# numbered in the same lexicographic order as H0.
H1_LABELS = ["01", "02", "10", "11", "12", "20", "21", "22"]
H1_EDGES = [("11", "01"), ("10", "21"), ("12", "20"), ("02", "22")]
H1_ARCS = [
    ("01", "10"), ("01", "20"), ("10", "11"), ("10", "02"),
    ("21", "22"), ("21", "01"), ("22", "10"), ("22", "12"),
    ("02", "21"), ("02", "20"), ("20", "22"), ("20", "11"),
    ("12", "01"), ("12", "02"), ("11", "21"), ("11", "12"),
]


def h1():
    ix = {lab: i for i, lab in enumerate(H1_LABELS)}
    return from_relations(8, arcs=[(ix[a], ix[b]) for a, b in H1_ARCS],
                          edges=[(ix[a], ix[b]) for a, b in H1_EDGES])


# H2 vertices 1..12 as drawn (stored as 0..11); mates are 2i-1 ~ 2i
H2_BASE_ARCS = [(1, 12), (1, 10), (2, 5), (3, 2), (4, 5), (4, 7),
                (6, 7), (8, 9), (9, 6), (11, 8), (11, 10), (12, 3)]


def h2_completion(base_arcs):
    """Close ``base_arcs`` (1-based) under: v -> w implies w -> v' and v' -> ... dual."""
    def mate(v):
        return v + 1 if v % 2 else v - 1

    arcs = set(base_arcs)
    frontier = list(arcs)
    while frontier:
        v, w = frontier.pop()
        for new in ((w, mate(v)), (mate(w), v)):
            if new not in arcs:
                if (new[1], new[0]) in arcs or new[0] == new[1] or mate(new[0]) == new[1]:
                    raise MalformedExpr(f"completion produced an inconsistent pair {new}")
                arcs.add(new)
                frontier.append(new)
    return arcs


def h2():
    arcs = h2_completion(H2_BASE_ARCS)
    return from_relations(12, arcs=[(a - 1, b - 1) for a, b in sorted(arcs)],
                          edges=[(2 * i, 2 * i + 1) for i in range(6)])


def cover_graph():
    """The 27-vertex 3-fold cover of K9: (u,a) ~ (v,b) iff det(u,v) = a - b."""
    edges = []
    for i, (u, a) in enumerate(COVER_VERTICES):
        for j, (v, b) in enumerate(COVER_VERTICES):
            if i < j and det2(u, v) == (a - b) % 3:
                edges.append((i, j))
    return from_relations(27, edges=edges)


def h3():
    """Fibre triangles as edges, det(u,v) = a - b + 1 as arcs, det = a - b unrelated."""
    m = np.zeros((27, 27), dtype=np.uint8)
    for i, (u, a) in enumerate(COVER_VERTICES):
        for j, (v, b) in enumerate(COVER_VERTICES):
            if i == j:
                continue
            if u == v:
                m[i, j] = PairState.EDGE
            elif det2(u, v) == (a - b + 1) % 3:
                m[i, j] = PairState.ARC
            elif det2(u, v) == (a - b - 1) % 3:
                m[i, j] = PairState.REVARC
    return SDigraph(m)


# name -> (display name, arity, builder)
ATOMS = {
    "K": ("K", 1, complete),
    "KBAR": ("Kbar", 1, empty),
    "KMN": ("Kmn", 2, complete_bipartite),
    "C": ("C", 1, cycle),
    "D": ("D", 1, directed_cycle),
    "J": ("J", 1, j_digraph),
    "P3": ("P3", 0, p3),
    "E6": ("E6", 0, e6),
    "E7": ("E7", 0, e7),
    "F6": ("F6", 0, f6),
    "H0": ("H0", 0, h0),
    "H1": ("H1", 0, h1),
    "H2": ("H2", 0, h2),
    "H3": ("H3", 0, h3),
    "X": ("X", 0, cover_graph),
}
UNARY = {"COMP": "comp", "WCOMP": "wcomp", "CONV": "conv"}


def size_of(expr):
    """Vertex count of ``expr`` without building it."""
    if isinstance(expr, Atom):
        fixed = {"P3": 3, "E6": 6, "E7": 7, "F6": 6, "H0": 8, "H1": 8, "H2": 12,
                 "H3": 27, "X": 27}
        if expr.name in fixed:
            return fixed[expr.name]
        if expr.name == "KMN":
            return sum(expr.params)
        if expr.name == "J":
            return 3 * expr.params[0]
        return expr.params[0]
    if isinstance(expr, Unary):
        return size_of(expr.arg)
    return size_of(expr.left) * size_of(expr.right)


def build(expr):
    if isinstance(expr, str):
        expr = parse_expr(expr)
    if isinstance(expr, Atom):
        if expr.name not in ATOMS:
            raise UnknownName(expr.name)
        _, arity, fn = ATOMS[expr.name]
        if len(expr.params) != arity:
            raise MalformedExpr(f"{expr.name} takes {arity} parameter(s)")
        if any((not isinstance(p, int)) or p < 1 for p in expr.params):
            raise ParamOutOfRange(f"{expr.name} parameters must be positive integers")
        return fn(*expr.params)
    if isinstance(expr, Unary):
        inner = build(expr.arg)
        return complement(inner) if expr.op == "comp" else weak_complement(inner)
    if isinstance(expr, Binary):
        left, right = build(expr.left), build(expr.right)
        return comp_product(left, right) if expr.op == "[]" else direct_product(left, right)
    raise MalformedExpr(f"not an expression: {expr!r}")


# --- parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ExprSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if start == self.pos:
            self.error("expected a name")
        return self.text[start:self.pos], start

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self):
        e = self.expr()
        if self.peek():
            self.error("unexpected trailing input")
        return e

    def expr(self):
        e = self.term()
        while self.peek() == "*":
            self.pos += 1
            e = Binary("*", e, self.term())
        return e

    def term(self):
        e = self.primary()
        while self.peek() == "[":
            self.pos += 1
            inner = self.expr()
            self.expect("]")
            e = Binary("[]", e, inner)
        return e

    def primary(self):
        if self.peek() == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        raw, start = self.name()
        key = raw.upper()
        if key in UNARY:
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Unary(UNARY[key], arg)
        if key not in ATOMS:
            raise UnknownName(f"unknown name {raw!r} at offset {start}")
        params = ()
        if self.peek() == "(":
            self.pos += 1
            params = [self.integer()]
            if self.peek() == ",":
                self.pos += 1
                params.append(self.integer())
            self.expect(")")
            params = tuple(params)
        if len(params) != ATOMS[key][1]:
            self.pos = start
            self.error(f"{ATOMS[key][0]} takes {ATOMS[key][1]} parameter(s)")
        return Atom(key, params)


def parse_expr(text):
    return _Parser(text).parse()


# --- the classification list -------------------------------------------------------

def K(n):
    return Atom("K", (n,))


def Kbar(n):
    return Atom("KBAR", (n,))


def D(n):
    return Atom("D", (n,))


def graph_list(max_n):
    """Set-homogeneous graphs (up to complement): C5, K3 x K3, K_m[Kbar_n]."""
    out = []
    if max_n >= 5:
        out.append(Atom("C", (5,)))
    if max_n >= 9:
        out.append(Binary("*", K(3), K(3)))
    for m in range(1, max_n + 1):
        for n in range(1, max_n // m + 1):
            out.append(Binary("[]", K(m), Kbar(n)))
            out.append(Binary("[]", Kbar(m), K(n)))
    return out


def adigraph_list(max_n):
    """Set-homogeneous a-digraphs: D1, D3, D4, D5, H0, Kbar_n, Kbar_n[D3], D3[Kbar_n]."""
    out = [e for e in (D(1), D(3), D(4), D(5), Atom("H0")) if size_of(e) <= max_n]
    for n in range(1, max_n + 1):
        out.append(Kbar(n))
    for n in range(1, max_n // 3 + 1):
        out.append(Binary("[]", Kbar(n), D(3)))
        out.append(Binary("[]", D(3), Kbar(n)))
    return out


def theorem_candidates(max_n):
    """Every instantiated form of the s-digraph list with at most ``max_n`` vertices."""
    A = adigraph_list(max_n)
    L = graph_list(max_n)
    cands = []
    for a in A:
        for n in range(1, max_n // size_of(a) + 1):
            cands.append(Binary("[]", K(n), a))
            cands.append(Binary("[]", a, K(n)))
    cands.extend(L)
    for g in L:
        cands.append(Binary("[]", D(3), g))
        cands.append(Binary("[]", g, D(3)))
    for name in ("H1", "H2", "H3", "E6", "E7", "F6"):
        cands.append(Atom(name))
    for n in range(1, max_n // 3 + 1):
        cands.append(Atom("J", (n,)))
    cands = [c for c in cands if size_of(c) <= max_n]
    cands += [Unary("comp", c) for c in cands]
    return cands


def theorem_list(max_n):
    """Isomorphism-distinct members of the classification list with at most ``max_n`` vertices.

    Returns ``(label, SDigraph)`` pairs in increasing vertex count; the label
    is the first expression (in generation order) producing each class.
    """
    from .iso import canonical_code

    if max_n < 1:
        raise ParamOutOfRange("max_n must be at least 1")
    cands = theorem_candidates(max_n)
    order = sorted(range(len(cands)), key=lambda i: (size_of(cands[i]), i))
    seen = set()
    out = []
    for i in order:
        d = build(cands[i])
        code = canonical_code(d)
        if code not in seen:
            seen.add(code)
            out.append((_simplify_label(cands[i]), d))
    return out


def _simplify_label(expr):
    # strip the trivial factors introduced by the K_n[A] / A[K_n] families
    trivial = (K(1), Kbar(1), D(1))
    if isinstance(expr, Binary) and expr.op == "[]":
        if expr.left in trivial:
            return _simplify_label(expr.right)
        if expr.right in trivial:
            return _simplify_label(expr.left)
    if isinstance(expr, Unary):
        return f"{expr.op}({_simplify_label(expr.arg)})"
    return str(expr)


def named_catalog():
    """The fixed-size named digraphs with their expressions."""
    names = ["P3", "E6", "E7", "F6", "H0", "H1", "H2", "H3", "X"]
    return [(n, Atom(n)) for n in names]
