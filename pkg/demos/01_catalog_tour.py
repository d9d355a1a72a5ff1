"""
A tour of the catalog
=====================

Build a few named s-digraphs, look at their pair counts and at the
automorphism groups that act on them.
"""

from sethom import build, automorphism_group
from sethom.core import census
from sethom.perm import cycle_notation, orbital_decomposition, orbits_on_points

# Expressions are small strings.  Atoms take parameters, ``[ ]`` is the
# compositional product and ``*`` the direct product.
for text in ["D(5)", "E6", "K(2)[D(3)]", "comp(E7)", "H2"]:
    d = build(text)
    print(f"{text:<12} n={d.n:<3} {census(d)}")

# The 27-point cover graph and the digraph whose unrelated pairs it describes.
x = build("X")
h3 = build("H3")
print("\n|Aut(X)|  =", automorphism_group(x).order)
G = automorphism_group(h3)
print("|Aut(H3)| =", G.order)
print("H3 vertex orbits:", len(orbits_on_points(G)))

# Orbitals are the group's orbits on ordered pairs.  Pairing swaps the
# coordinates; every orbital of a finite transitive group has the same
# section size as its partner.
od = orbital_decomposition(G)
for k in range(od.count):
    i, j = od.orbital(k)[0]
    print(f"  orbital {k}: {len(od.orbital(k)):>3} pairs, state {h3.state(i, j).name:<9}"
          f" paired with {od.pairing[k]}")

# A generating set, in cycle notation.
d5 = automorphism_group(build("D(5)"))
print("\nD(5) generators:", [cycle_notation(g) for g in d5.generators])
