"""Randomised invariants over small s-digraphs."""

from hypothesis import given, settings, strategies as st

from sethom.core import (FLIP, PairState, census, comp_product, complement, direct_product,
                         induced, neighborhoods, new_sdigraph, weak_complement)
from sethom.formats import from_json, from_shd, to_json, to_shd
from sethom.homo import check_set_homogeneous
from sethom.iso import automorphism_group, canonical_code, find_isomorphism, unpack_code
from sethom.perm import is_automorphism


@st.composite
def sdigraphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    states = draw(st.lists(st.sampled_from(list(PairState)), min_size=len(pairs),
                           max_size=len(pairs)))
    return new_sdigraph(n, [(i, j, s) for (i, j), s in zip(pairs, states)])


@st.composite
def relabelled(draw):
    d = draw(sdigraphs())
    perm = draw(st.permutations(range(d.n)))
    return d, list(perm)


small = settings(max_examples=60, deadline=None)


@small
@given(sdigraphs())
def test_flip_consistency(d):
    for i in range(d.n):
        for j in range(d.n):
            if i != j:
                assert d.state(j, i) == FLIP[d.state(i, j)]


@small
@given(sdigraphs())
def test_neighbourhoods_partition(d):
    for v in range(d.n):
        parts = neighborhoods(d, v)
        flat = sorted(x for p in parts for x in p)
        assert flat == [x for x in range(d.n) if x != v]


@small
@given(sdigraphs())
def test_census_sums(d):
    c = census(d)
    assert sum(c.values()) == d.n * (d.n - 1) // 2


@small
@given(sdigraphs())
def test_involutions(d):
    assert complement(complement(d)) == d
    assert weak_complement(weak_complement(d)) == d
    assert complement(weak_complement(d)) == weak_complement(complement(d))


@small
@given(sdigraphs(), st.data())
def test_induced_commutes_with_complement(d, data):
    subset = data.draw(st.lists(st.integers(0, max(d.n - 1, 0)), unique=True)) if d.n else []
    assert complement(induced(d, subset)) == induced(complement(d), subset)


@small
@given(relabelled())
def test_canonical_code_is_relabelling_invariant(pair):
    d, perm = pair
    e = d.relabel(perm)
    assert canonical_code(e) == canonical_code(d)
    g = find_isomorphism(d, e)
    assert g is not None


@small
@given(sdigraphs())
def test_canonical_digraph_is_isomorphic(d):
    c = unpack_code(canonical_code(d))
    assert c.n == d.n and census(c) == census(d)
    assert find_isomorphism(d, c) is not None


@small
@given(sdigraphs())
def test_automorphism_generators(d):
    G = automorphism_group(d)
    assert all(is_automorphism(d, g) for g in G.generators)


@small
@given(sdigraphs())
def test_formats_round_trip(d):
    assert from_shd(to_shd(d)) == d
    assert from_json(to_json(d)) == d


@settings(max_examples=30, deadline=None)
@given(sdigraphs(3), sdigraphs(3), sdigraphs(2))
def test_comp_product_associative(a, b, c):
    assert comp_product(comp_product(a, b), c) == comp_product(a, comp_product(b, c))


@settings(max_examples=30, deadline=None)
@given(sdigraphs(4), sdigraphs(4))
def test_direct_product_commutes_up_to_isomorphism(a, b):
    assert canonical_code(direct_product(a, b)) == canonical_code(direct_product(b, a))


@settings(max_examples=40, deadline=None)
@given(sdigraphs(6))
def test_set_homogeneity_is_complement_invariant(d):
    assert check_set_homogeneous(d).holds == check_set_homogeneous(complement(d)).holds
    assert check_set_homogeneous(d).holds == check_set_homogeneous(weak_complement(d)).holds
