"""Finite samples of two countable a-digraphs and their 3-point configurations.

``T(4)``: points on the unit circle, stored as exact fractions ``f`` of a full
turn.  ``y -> x`` iff the angle from ``x`` to ``y`` lies strictly between a
quarter and a half turn.  Pairs closer than a quarter turn are unrelated.  An
unrelated pair is oriented from the leading point to the trailing one:
``x => y`` when ``x`` is less than a quarter turn ahead of ``y``.  That is the
only orientation under which none of ``L_7 .. L_14`` embeds; the other one
is available through ``reverse=True`` for comparison.

``R_n``: distinct rationals with ``n`` class labels; ``a -> b`` iff ``a < b``
and the classes differ.  Same-class pairs are unrelated and oriented by ``<``.
"""

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .core import PairState, new_sdigraph

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)
_DENOM = 1_000_003


class SampleError(ValueError):
    pass


class ClassCountTooSmall(SampleError):
    pass


class NotUnrelated(SampleError):
    pass


@dataclass(frozen=True)
class T4Sample:
    turns: tuple  # Fractions in [0, 1)
    digraph: object

    @property
    def angles(self):
        return [float(t) * 2 * math.pi for t in self.turns]

    def __len__(self):
        return len(self.turns)


@dataclass(frozen=True)
class RnSample:
    values: tuple
    classes: tuple
    n_classes: int
    digraph: object

    def __len__(self):
        return len(self.values)


def _ahead(a, b):
    """How far ``b`` is ahead of ``a``, as a fraction of a turn in [0, 1)."""
    return (b - a) % 1


def t4_from_turns(turns):
    turns = tuple(Fraction(t) % 1 for t in turns)
    pairs = []
    for i, j in combinations(range(len(turns)), 2):
        gap = _ahead(turns[i], turns[j])
        if gap == 0 or gap % QUARTER == 0:
            raise SampleError(f"points {i} and {j} differ by a multiple of a quarter turn")
        if QUARTER < gap < HALF:
            pairs.append((j, i, PairState.ARC))
        elif HALF < gap < 3 * QUARTER:
            pairs.append((i, j, PairState.ARC))
    return T4Sample(turns, new_sdigraph(len(turns), pairs))


def t4_from_angles(angles, max_denominator=10**9):
    """Build a sample from angles in radians (rounded to nearby rationals)."""
    return t4_from_turns(Fraction(a / (2 * math.pi)).limit_denominator(max_denominator) % 1
                         for a in angles)


def sample_t4(size, seed):
    if size < 0:
        raise SampleError("size must be non-negative")
    rng = random.Random(seed)
    turns = []
    while len(turns) < size:
        t = Fraction(rng.randrange(_DENOM), _DENOM)
        if all(_ahead(s, t) % QUARTER != 0 for s in turns):
            turns.append(t)
    return t4_from_turns(turns)


def rn_from(values, classes, n_classes=None):
    values = tuple(Fraction(v) for v in values)
    classes = tuple(int(c) for c in classes)
    if len(values) != len(classes):
        raise SampleError("values and classes differ in length")
    if len(set(values)) != len(values):
        raise SampleError("values must be distinct")
    if n_classes is None:
        n_classes = max(classes, default=0) + 1
    if n_classes < 2:
        raise ClassCountTooSmall("at least two classes are needed")
    pairs = []
    for i, j in combinations(range(len(values)), 2):
        if classes[i] != classes[j]:
            a, b = (i, j) if values[i] < values[j] else (j, i)
            pairs.append((a, b, PairState.ARC))
    return RnSample(values, classes, n_classes, new_sdigraph(len(values), pairs))


def sample_rn(classes, size, seed):
    if classes < 2:
        raise ClassCountTooSmall("at least two classes are needed")
    if size < 0:
        raise SampleError("size must be non-negative")
    rng = random.Random(seed)
    values = set()
    while len(values) < size:
        values.add(Fraction(rng.randrange(-10**6, 10**6), rng.randrange(1, 1000)))
    values = list(values)
    rng.shuffle(values)
    labels = [rng.randrange(classes) for _ in values]
    return rn_from(values, labels, classes)


def lambda_orientation(sample, i, j):
    """The unrelated pair ``{i, j}`` as an ordered pair ``(a, b)`` with ``a => b``."""
    if i == j:
        raise SampleError("need two distinct points")
    if sample.digraph.state(i, j) != PairState.UNRELATED:
        raise NotUnrelated(f"points {i} and {j} are joined by an arc")
    if isinstance(sample, T4Sample):
        return (i, j) if _ahead(sample.turns[j], sample.turns[i]) < QUARTER else (j, i)
    return (i, j) if sample.values[i] < sample.values[j] else (j, i)


# --- 3-point configurations --------------------------------------------------------

# roles a, b, c stand for alpha, beta, gamma; "->" arc, "=>" orientation of an
# unrelated pair, "||" an unrelated pair in either orientation
CONFIGS = {
    1: [("b", "=>", "a"), ("b", "->", "c"), ("a", "=>", "c")],
    2: [("b", "=>", "a"), ("a", "->", "c"), ("b", "->", "c")],
    3: [("b", "=>", "a"), ("c", "->", "a"), ("c", "->", "b")],
    4: [("b", "=>", "a"), ("a", "->", "c"), ("c", "->", "b")],
    5: [("a", "->", "b"), ("b", "->", "c"), ("c", "->", "a")],
    6: [("a", "=>", "b"), ("b", "=>", "c"), ("a", "=>", "c")],
    7: [("b", "=>", "a"), ("b", "->", "c"), ("c", "->", "a")],
    8: [("b", "=>", "a"), ("c", "->", "b"), ("c", "||", "a")],
    9: [("b", "=>", "a"), ("a", "->", "c"), ("c", "||", "b")],
    10: [("b", "=>", "a"), ("a", "=>", "c"), ("c", "=>", "b")],
    11: [("a", "->", "b"), ("b", "->", "c"), ("a", "->", "c")],
    12: [("b", "=>", "a"), ("b", "->", "c"), ("c", "=>", "a")],
    13: [("b", "=>", "a"), ("c", "->", "a"), ("b", "=>", "c")],
    14: [("b", "=>", "a"), ("a", "=>", "c"), ("c", "->", "b")],
}
FORBIDDEN = tuple(range(7, 15))


# pair codes for an ordered pair (x, y): 0 x->y, 1 y->x, 2 x=>y, 3 y=>x
_SWAP = (1, 0, 3, 2)


def _kind_ok(code, kind):
    if kind == "->":
        return code == 0
    if kind == "=>":
        return code == 2
    return code in (2, 3)


def _table():
    """Configuration hits for each of the 64 coded triples ``(c01, c02, c12)``."""
    table = {}
    for codes in product(range(4), repeat=3):
        rel = {(0, 1): codes[0], (0, 2): codes[1], (1, 2): codes[2]}
        for (x, y), c in list(rel.items()):
            rel[(y, x)] = _SWAP[c]
        hits = []
        for idx, pattern in CONFIGS.items():
            for p in permutations(range(3)):
                roles = dict(zip("abc", p))
                if all(_kind_ok(rel[(roles[u], roles[v])], kind) for u, kind, v in pattern):
                    hits.append(idx)
                    break
        table[codes] = tuple(hits)
    return table


_TABLE = _table()


def pair_codes(sample, reverse=False):
    """Matrix of pair codes (see ``_SWAP``) for every ordered pair of sample points."""
    n = len(sample)
    rows = sample.digraph.rows
    out = [[0] * n for _ in range(n)]
    for x, y in combinations(range(n), 2):
        s = rows[x][y]
        if s == PairState.ARC:
            c = 0
        elif s == PairState.REVARC:
            c = 1
        else:
            c = 2 if (lambda_orientation(sample, x, y)[0] == x) != reverse else 3
        out[x][y] = c
        out[y][x] = _SWAP[c]
    return out


def classify_triple(sample, triple, reverse=False, codes=None):
    """Indices ``i`` such that the triple realises ``L_i`` (several for the partial patterns)."""
    x, y, z = triple
    if codes is None:
        codes = pair_codes(sample, reverse)
    return list(_TABLE[(codes[x][y], codes[x][z], codes[y][z])])


def config_census(sample, reverse=False):
    """Occurrences of each configuration over all 3-subsets.

    Keys are ``1..14`` and ``"Other"``.  With ``reverse`` the orientation of
    unrelated pairs is flipped, which exercises the other convention.
    """
    codes = pair_codes(sample, reverse)
    tally = Counter((codes[x][y], codes[x][z], codes[y][z])
                    for x, y, z in combinations(range(len(sample)), 3))
    counts = {i: 0 for i in CONFIGS}
    counts["Other"] = 0
    for key, c in tally.items():
        hits = _TABLE[key]
        if not hits:
            counts["Other"] += c
        for i in hits:
            counts[i] += c
    return counts


def directed_triangles(sample):
    d = sample.digraph
    rows = d.rows
    count = 0
    for x, y, z in combinations(range(d.n), 3):
        if (rows[x][y] == 1 and rows[y][z] == 1 and rows[z][x] == 1) or \
           (rows[x][z] == 1 and rows[z][y] == 1 and rows[y][x] == 1):
            count += 1
    return count


# --- non-2-homogeneity witnesses --------------------------------------------------

@dataclass(frozen=True)
class PathWitness:
    """Unrelated ``x => y`` with ``x -> z -> y``, while no point of the whole structure sits on a path ``y -> . -> x``."""

    x: int
    z: int
    y: int
    certificate: str


def _circle_overlap(lo1, hi1, lo2, hi2):
    """Overlap of two open arcs given by turn offsets, or ``None``."""
    shift = lo1 // 1
    lo1, hi1 = lo1 - shift, hi1 - shift
    shift = lo2 // 1
    lo2, hi2 = lo2 - shift, hi2 - shift
    for k in (-1, 0, 1):
        a, b = max(lo1 + k, lo2), min(hi1 + k, hi2)
        if a < b:
            return (a, b)
    return None


def _t4_reverse_band(sample, x, y):
    """Offsets (from ``x``) where a middle point of ``y -> w -> x`` would have to sit."""
    d = _ahead(sample.turns[x], sample.turns[y])
    # y -> w puts w a quarter to a half turn behind y; w -> x puts w that far ahead of x
    return _circle_overlap(d - HALF, d - QUARTER, QUARTER, HALF)


def non_2hom_witness(sample):
    """First (lexicographic) path witness against 2-homogeneity, or ``None``."""
    d = sample.digraph
    rows = d.rows
    n = d.n
    for x in range(n):
        for y in range(n):
            if x == y or rows[x][y] != PairState.UNRELATED:
                continue
            for z in range(n):
                if rows[x][z] == PairState.ARC and rows[z][y] == PairState.ARC:
                    cert = _certify(sample, x, y)
                    if cert is not None:
                        return PathWitness(x, z, y, cert)
    return None


def _certify(sample, x, y):
    if isinstance(sample, RnSample):
        if sample.values[x] > sample.values[y]:
            return None
        # y -> w -> x would need value(y) < value(w) < value(x), against value(x) < value(y)
        return f"{sample.values[x]} < {sample.values[y]}: no value lies above {sample.values[y]} and below {sample.values[x]}"
    if _t4_reverse_band(sample, x, y) is not None:
        return None
    gap = _ahead(sample.turns[x], sample.turns[y])
    return f"gap {gap} of a turn: the bands for y->w and w->x are disjoint"
