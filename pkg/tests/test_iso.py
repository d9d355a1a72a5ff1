import random

import pytest

from oracles import brute_automorphisms
from sethom.catalog import build, NONZERO
from sethom.core import complement, weak_complement, census, all_labeled
from sethom.iso import (automorphism_generators, automorphism_group, canonical_code,
                        canonical_digraph, canonical_form, extend_isomorphism,
                        find_isomorphism, is_isomorphism, pack_code, unpack_code)
from sethom.perm import is_automorphism, mul


def _shuffle(d, seed):
    perm = list(range(d.n))
    random.Random(seed).shuffle(perm)
    return d.relabel(perm)


def test_code_layout():
    code = canonical_code(build("D(3)"))
    assert code[0] == 0x01 and code[1] == 3
    assert len(code) == 2 + 1
    assert pack_code(3, (1, 1, 2)) == bytes([1, 3, 0b01011000])


def test_unpack_inverts_pack():
    d = build("E7")
    cf = canonical_form(d)
    assert unpack_code(cf.code) == d.relabel(cf.relabeling)
    assert canonical_digraph(d) == unpack_code(cf.code)


def test_relabeling_invariance_d3():
    a = build("D(3)")
    b = a.relabel([0, 2, 1])
    assert b.arcs() != a.arcs()
    assert canonical_code(a) == canonical_code(b)


def test_j2_code_equals_complement_e6():
    assert canonical_code(build("J(2)")) == canonical_code(complement(build("E6")))


def test_e6_f6_differ():
    assert canonical_code(build("E6")) != canonical_code(build("F6"))
    assert find_isomorphism(build("E6"), build("F6")) is None


@pytest.mark.parametrize("text, order", [
    ("D(5)", 5), ("E6", 6), ("F6", 6), ("X", 1296), ("C(5)", 10), ("H0", 24),
    ("H1", 16), ("H2", 48), ("H3", 648), ("K(3)*K(3)", 72), ("J(3)", 18),
])
def test_automorphism_orders(text, order):
    assert automorphism_group(build(text)).order == order


def test_find_isomorphism_examples():
    d3 = build("D(3)")
    g = find_isomorphism(d3, weak_complement(d3))
    assert g is not None and is_isomorphism(d3, weak_complement(d3), g)
    a, b = build("K(2)[Kbar(3)]"), build("Kbar(3)[K(2)]")
    assert census(a)["edges"] == 9 and census(b)["edges"] == 3
    assert find_isomorphism(a, b) is None


def test_h0_weak_complement_map():
    h0 = build("H0")

    def idx(v):
        return NONZERO.index(tuple(x % 3 for x in v))

    pairs = [((1, -1), (1, -1)), ((-1, 1), (-1, 1)),
             ((0, -1), (-1, -1)), ((-1, -1), (0, -1)),
             ((1, 1), (0, 1)), ((0, 1), (1, 1)),
             ((1, 0), (-1, 0)), ((-1, 0), (1, 0))]
    g = [None] * 8
    for a, b in pairs:
        g[idx(a)] = idx(b)
    assert is_isomorphism(h0, weak_complement(h0), g)
    assert find_isomorphism(h0, weak_complement(h0)) is not None


def test_extend_isomorphism():
    d5 = build("D(5)")
    assert extend_isomorphism(d5, d5, [(0, 2)]) == (2, 3, 4, 0, 1)
    assert extend_isomorphism(d5, d5, [(0, 0), (2, 3)]) is None


def test_generators_preserve_pair_states():
    for text in ["H2", "H3", "J(3)", "K(2)[C(5)]"]:
        d = build(text)
        gens, _ = automorphism_generators(d)
        assert all(is_automorphism(d, g) for g in gens)


def test_aut_of_complement_is_the_same_group():
    for text in ["E7", "H1", "C(5)"]:
        d = build(text)
        G, H = automorphism_group(d), automorphism_group(complement(d))
        assert G.order == H.order
        assert all(g in H for g in G.generators)


def test_e6_group_structure():
    G = automorphism_group(build("E6"))
    els = G.elements()
    assert all(mul(a, b) == mul(b, a) for a in els for b in els)


def test_brute_force_orders_small():
    rng = random.Random(7)
    labeled = list(all_labeled(3))
    for d in rng.sample(labeled, 20):
        assert automorphism_group(d).order == len(brute_automorphisms(d))


def test_random_relabelling_invariance():
    for text in ["H1", "J(3)", "comp(H2)", "K(3)*K(3)"]:
        d = build(text)
        for seed in range(3):
            assert canonical_code(_shuffle(d, seed)) == canonical_code(d)
