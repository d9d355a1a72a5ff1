"""
Finite glimpses of two infinite digraphs
========================================

Points on a circle, with an arc when one point is between a quarter and a
half turn ahead of another.  And rationals split into coloured classes, with
an arc up the order between different colours.  Both are sampled finitely
and their three-point configurations are counted.
"""

from sethom.infinite import (FORBIDDEN, config_census, directed_triangles, non_2hom_witness,
                             sample_rn, sample_t4)

# Tally all 14 configurations over a handful of circle samples, once per way
# of orienting the unrelated pairs.
for reverse in (False, True):
    totals = {i: 0 for i in range(1, 15)}
    for seed in range(20):
        c = config_census(sample_t4(40, seed), reverse=reverse)
        for i in totals:
            totals[i] += c[i]
    label = "reversed" if reverse else "default "
    print(label, " ".join(f"L{i}={totals[i]}" for i in totals))
    print("          forbidden ones present:", [i for i in FORBIDDEN if totals[i]])

# The rational model never contains a directed triangle, since arcs follow <.
for classes in (2, 3):
    tri = sum(directed_triangles(sample_rn(classes, 40, seed)) for seed in range(20))
    print(f"\nR_{classes}: directed triangles over 20 samples = {tri}")

# A witness against 2-homogeneity: x and y unrelated, a path x -> z -> y in
# the sample, and an argument that no path y -> w -> x exists anywhere.
s = sample_rn(2, 15, seed=4)
w = non_2hom_witness(s)
print(f"\nwitness {w.x} -> {w.z} -> {w.y}")
print(" ", w.certificate)

s = sample_t4(15, seed=4)
w = non_2hom_witness(s)
print(f"witness {w.x} -> {w.z} -> {w.y}")
print(" ", w.certificate)
