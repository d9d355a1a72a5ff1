from fractions import Fraction
from itertools import combinations

import pytest

from sethom.core import PairState, same_out_congruence
from sethom.infinite import (FORBIDDEN, ClassCountTooSmall, NotUnrelated, SampleError,
                             classify_triple, config_census, directed_triangles,
                             lambda_orientation, non_2hom_witness, rn_from, sample_rn,
                             sample_t4, t4_from_angles, t4_from_turns)


def test_empty_samples():
    for s in (sample_t4(0, 1), sample_rn(2, 0, 1)):
        assert len(s) == 0
        counts = config_census(s)
        assert set(counts.values()) == {0}
        assert non_2hom_witness(s) is None


def test_t4_arc_rule():
    s = t4_from_angles([0.1, 2.0])
    assert s.digraph.arcs() == [(1, 0)]


def test_t4_close_points_are_unrelated():
    s = t4_from_angles([0.1, 0.6])
    assert s.digraph.state(0, 1) == PairState.UNRELATED
    # the point further round the circle leads
    assert lambda_orientation(s, 0, 1) == (1, 0)


def test_t4_rejects_quarter_turns():
    with pytest.raises(SampleError):
        t4_from_turns([Fraction(1, 8), Fraction(3, 8)])
    with pytest.raises(SampleError):
        t4_from_turns([Fraction(0), Fraction(1, 2)])


def test_t4_invariants():
    s = sample_t4(30, 5)
    assert s.digraph.is_adigraph()
    for i, j in combinations(range(len(s)), 2):
        gap = (s.turns[j] - s.turns[i]) % 1
        close = gap < Fraction(1, 4) or gap > Fraction(3, 4)
        assert (s.digraph.state(i, j) == PairState.UNRELATED) == close


def test_rn_rules():
    s = rn_from([Fraction(1, 2), Fraction(3, 4)], [0, 0], 2)
    assert s.digraph.state(0, 1) == PairState.UNRELATED
    assert lambda_orientation(s, 1, 0) == (0, 1)
    t = rn_from([1, 0], [0, 1])
    assert t.digraph.arcs() == [(1, 0)]
    with pytest.raises(NotUnrelated):
        lambda_orientation(t, 0, 1)


def test_sample_errors():
    with pytest.raises(ClassCountTooSmall):
        sample_rn(1, 5, 0)
    with pytest.raises(ClassCountTooSmall):
        rn_from([1, 2], [0, 0])
    with pytest.raises(SampleError):
        rn_from([1, 1], [0, 1])
    with pytest.raises(SampleError):
        lambda_orientation(sample_t4(3, 0), 1, 1)


def test_determinism():
    assert sample_t4(25, 42) == sample_t4(25, 42)
    assert sample_rn(3, 25, 42) == sample_rn(3, 25, 42)
    assert sample_t4(25, 42).turns != sample_t4(25, 43).turns


def test_rn_chain_is_l6():
    s = rn_from([1, 2, 3], [0, 0, 0], 2)
    counts = config_census(s)
    assert counts[6] == 1
    assert sum(v for k, v in counts.items() if k != 6) == 0
    assert classify_triple(s, (0, 1, 2)) == [6]


def test_directed_triangle_is_l5():
    s = t4_from_turns([Fraction(0), Fraction(1, 3) + Fraction(1, 100), Fraction(2, 3)])
    assert directed_triangles(s) == 1
    assert config_census(s)[5] == 1


def test_exactly_one_orientation_avoids_forbidden():
    clean = {False: True, True: True}
    for seed in range(10):
        s = sample_t4(30, seed)
        for rev in (False, True):
            c = config_census(s, reverse=rev)
            if any(c[i] for i in FORBIDDEN) or c["Other"]:
                clean[rev] = False
    assert clean == {False: True, True: False}


def test_t4_census_small_seed_set():
    totals = {i: 0 for i in range(1, 15)}
    for seed in range(10):
        c = config_census(sample_t4(40, seed))
        assert c["Other"] == 0
        for i in totals:
            totals[i] += c[i]
    assert all(totals[i] == 0 for i in FORBIDDEN)
    assert all(totals[i] > 0 for i in range(1, 7))


@pytest.mark.parametrize("classes", [2, 3])
def test_rn_has_no_directed_triangles(classes):
    for seed in range(10):
        assert directed_triangles(sample_rn(classes, 40, seed)) == 0


def test_rn_witness_pattern():
    # same-class 0 < 2 with an opposite-class point between them
    s = rn_from([0, 1, 2], [0, 1, 0])
    w = non_2hom_witness(s)
    assert (w.x, w.z, w.y) == (0, 1, 2)


def test_witnesses_are_sound():
    for seed in range(5):
        for s in (sample_rn(2, 30, seed), sample_rn(3, 30, seed), sample_t4(30, seed)):
            w = non_2hom_witness(s)
            assert w is not None
            rows = s.digraph.rows
            assert rows[w.x][w.y] == PairState.UNRELATED
            assert rows[w.x][w.z] == PairState.ARC and rows[w.z][w.y] == PairState.ARC
            assert not any(rows[w.y][v] == PairState.ARC and rows[v][w.x] == PairState.ARC
                           for v in range(len(s)))


def test_t4_witness_band_is_empty():
    # 0 leads 1 by a tenth of a turn; 2 sits opposite them, between the two bands
    s = t4_from_turns([Fraction(1, 10), Fraction(0), Fraction(11, 20)])
    w = non_2hom_witness(s)
    assert (w.x, w.z, w.y) == (1, 2, 0) and "disjoint" in w.certificate


def test_two_points_have_no_witness():
    assert non_2hom_witness(rn_from([0, 1], [0, 0], 2)) is None
    assert non_2hom_witness(t4_from_angles([0.1, 0.6])) is None


def test_rn_out_sets_refine_classes():
    for seed in range(5):
        s = sample_rn(2, 30, seed)
        for block in same_out_congruence(s.digraph):
            assert len({s.classes[v] for v in block}) == 1
        for x, y in combinations(range(len(s)), 2):
            if s.classes[x] != s.classes[y]:
                continue
            lo, hi = sorted((s.values[x], s.values[y]))
            between = any(lo < s.values[z] < hi and s.classes[z] != s.classes[x]
                          for z in range(len(s)))
            if between:
                assert not any(x in b and y in b for b in same_out_congruence(s.digraph))
