from itertools import combinations

import pytest

from oracles import brute_set_homogeneous, brute_subset_orbits
from sethom.catalog import build, theorem_list
from sethom.core import from_relations, induced, neighborhoods
from sethom.enumeration import enumerate_all
from sethom.homo import (brute_k_homogeneous, brute_k_set_homogeneous, check_homogeneous,
                         check_k_homogeneous, check_k_set_homogeneous,
                         check_set_homogeneous, first_failing_k, induced_invariants,
                         subset_orbit_reps, verify_witness)
from sethom.iso import automorphism_group, canonical_code, unpack_code
from sethom.perm import (NotAutomorphism, burnside_subset_count, min_subset_in_orbit,
                         orbital_decomposition, orbits_on_points, symmetric_group)

P4 = from_relations(4, arcs=[(0, 1), (1, 2), (2, 3)])


def test_reps_kbar3():
    cat = subset_orbit_reps(build("Kbar(3)"), symmetric_group(3))
    assert [cat.count(k) for k in range(4)] == [1, 1, 1, 1]


def test_reps_d5_pairs():
    cat = subset_orbit_reps(build("D(5)"))
    assert cat.reps(2) == [(0, 1), (0, 2)]


def test_reps_reject_foreign_group():
    with pytest.raises(NotAutomorphism):
        subset_orbit_reps(build("D(5)"), symmetric_group(5))


def test_reps_store_induced_codes():
    d = build("E6")
    cat = subset_orbit_reps(d)
    for k in range(d.n + 1):
        for rep, code in cat.levels[k]:
            assert code == canonical_code(induced(d, rep))


@pytest.mark.parametrize("text", ["D(5)", "E7", "H0", "H1", "J(3)", "P3", "K(2)[D(3)]"])
def test_reps_are_least_and_distinct(text):
    d = build(text)
    G = automorphism_group(d)
    cat = subset_orbit_reps(d, G, codes=False)
    els = G.elements()
    for k in range(d.n + 1):
        reps = cat.reps(k)
        assert all(min_subset_in_orbit(G, r) == r for r in reps)
        assert reps == brute_subset_orbits(d, els, k)
    assert cat.total == burnside_subset_count(G)


def test_reps_large_group_fallback():
    d = build("Kbar(8)")
    cat = subset_orbit_reps(d, codes=False)
    assert [cat.reps(k) for k in range(9)] == [[tuple(range(k))] for k in range(9)]


def test_check_set_homogeneous_examples():
    assert check_set_homogeneous(build("D(5)")).holds
    v = check_set_homogeneous(P4)
    assert not v.holds and v.k == 1
    assert verify_witness(P4, v)


def test_check_k_set_homogeneous_examples():
    for d in (build("E6"), P4, build("D(5)")):
        assert check_k_set_homogeneous(d, 0).holds
    assert check_k_set_homogeneous(build("D(5)"), 2).holds
    v = check_k_set_homogeneous(P4, 2)
    assert not v.holds and verify_witness(P4, v)


def test_d5_witness():
    v = check_k_homogeneous(build("D(5)"), 2)
    assert not v.holds
    assert (v.witness.U, v.witness.V) == ((0, 2), (0, 3))
    assert v.witness.mapping == ((0, 0), (2, 3))
    assert verify_witness(build("D(5)"), v)


def test_complete_graphs_are_homogeneous():
    for n in (1, 3, 5):
        for k in range(n + 1):
            assert check_k_homogeneous(build(f"K({n})"), k).holds


def test_check_homogeneous_examples():
    assert check_homogeneous(build("D(3)"), 3).holds
    assert check_homogeneous(build("C(5)"), 5).holds
    v = check_homogeneous(build("E7"))
    assert not v.holds and verify_witness(build("E7"), v)


def test_h3_first_failing_k():
    # measured: the edges inside a fibre already cannot all be swapped
    assert first_failing_k(build("H3"), 5) == 2


def test_argument_ranges():
    with pytest.raises(ValueError):
        check_k_homogeneous(build("D(3)"), 4)
    with pytest.raises(ValueError):
        check_homogeneous(build("D(3)"), 4)


def test_invariants_are_isomorphism_invariant():
    d = build("H2")
    subsets = list(combinations(range(d.n), 4))
    inv = induced_invariants(d, subsets)
    by_code = {}
    for row, S in zip(inv.tolist(), subsets):
        by_code.setdefault(canonical_code(induced(d, S)), set()).add(tuple(row))
    assert all(len(rows) == 1 for rows in by_code.values())
    assert len({r for rows in by_code.values() for r in rows}) == len(by_code)


def _small_classes(max_n=4):
    classes = enumerate_all(max_n)
    return [unpack_code(c) for n in classes for c in classes[n]]


def test_against_brute_force_oracles():
    for d in _small_classes():
        els = automorphism_group(d).elements()
        assert check_set_homogeneous(d).holds == brute_set_homogeneous(d, els)
        for k in range(1, d.n + 1):
            assert check_k_set_homogeneous(d, k).holds == brute_k_set_homogeneous(d, k, els)
            assert check_k_homogeneous(d, k).holds == brute_k_homogeneous(d, k, els)


@pytest.mark.parametrize("max_n", [4, pytest.param(5, marks=pytest.mark.slow)])
def test_homogeneous_implies_set_homogeneous(max_n):
    for d in _small_classes(max_n):
        if check_homogeneous(d).holds:
            assert check_set_homogeneous(d).holds
        for k in range(1, d.n + 1):
            if check_k_homogeneous(d, k).holds:
                assert check_k_set_homogeneous(d, k).holds


def test_failure_witnesses_verify():
    for d in _small_classes():
        for v in (check_set_homogeneous(d), check_homogeneous(d)):
            if not v.holds:
                assert verify_witness(d, v)


def test_neighbourhoods_are_set_homogeneous():
    for _, d in theorem_list(8):
        for a in range(d.n):
            out, inn, _, _ = neighborhoods(d, a)
            assert check_set_homogeneous(induced(d, out)).holds
            assert check_set_homogeneous(induced(d, inn)).holds


def test_paired_suborbits_have_equal_size():
    for _, d in theorem_list(8):
        G = automorphism_group(d)
        if len(orbits_on_points(G)) != 1:
            continue
        od = orbital_decomposition(G)
        for k in range(od.count):
            assert len(od.section(k, 0)) == len(od.section(od.pairing[k], 0))
        out, inn, _, _ = neighborhoods(d, 0)
        assert len(out) == len(inn)
