"""
Every s-digraph on at most five vertices
========================================

Generate one representative per isomorphism class, keep the set-homogeneous
ones and compare them with the classification list.
"""

import time

from sethom.enumeration import burnside_class_count, classify_cross_check, enumerate_all
from sethom.iso import unpack_code

t = time.perf_counter()
classes = enumerate_all(5)
print(f"generated in {time.perf_counter() - t:.1f}s")
for n, codes in classes.items():
    # the fixed-point count gives the same number without generating anything
    print(f"  n={n}: {len(codes):>5} classes (fixed-point count {burnside_class_count(n)})")

report = classify_cross_check(5, classes)
print()
print("\n".join(report.lines()))

# Survivors are stored as canonical codes; unpack one to look at it.
code = next(code for _, code, label in report.survivors if label == "D(5)")
print("\nD(5) in canonical labelling, arcs:", unpack_code(code).arcs())
