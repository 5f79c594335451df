"""
Roots as polygon diagonals
==========================

In type A_n the almost positive roots are the diagonals of an (n+3)-gon,
and the compatibility degree is just "do they cross".  Types B_n and C_n use
centrally symmetric pairs of diagonals in a (2n+2)-gon.
"""

from genassoc import build_root_system, enumerate_clusters
from genassoc.oracle_models import (
    compare_with_algebra, count_maximal_noncrossing, snake_map_A, snake_map_BC, zigzag,
)

# the zigzag triangulation plays the role of the negative simple roots
print(zigzag(8))

mp = snake_map_A(5)
for v in sorted(mp, key=lambda v: (sum(v), v))[:8]:
    print(v, "->", mp[v])

# triangulations against clusters
for n in range(1, 7):
    cat = build_root_system(f"A{n}")
    print(f"A{n}", count_maximal_noncrossing("A", n), len(enumerate_clusters(cat)))

# in C3 the diameters are fixed by the half turn, everything else is a pair
for v, orb in snake_map_BC(3, "C").items():
    print(v, orb)

for name in ["A4", "B3", "C4"]:
    rep = compare_with_algebra(build_root_system(name))
    print(name)
    for c in rep.checks:
        print("  ", "PASS" if c.passed else "FAIL", c.name, c.detail)
