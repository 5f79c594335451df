"""
The three-dimensional associahedron from the A3 root system
============================================================

Start from a Cartan matrix, walk through the tau orbits and the
compatibility degree, then build the polytope and look at it.
"""

import numpy as np

from genassoc import build_root_system, build_support_function, enumerate_clusters, realize
from genassoc.compat import compatibility_degree
from genassoc.tau import MINUS, PLUS, orbits, tau_apply

cat = build_root_system("A3")
print(np.array(cat.cartan))
print("signs:", cat.sign)            # vertex 1 gets +, the rest alternate

# The 9 almost positive roots: the negative simples come first
for k in range(len(cat)):
    print(k, cat.label(k))

# tau_+ and tau_- are involutions; together they split the roots into orbits
v = cat.roots[0]
print(tau_apply(cat, PLUS, v), tau_apply(cat, MINUS, v))
part = orbits(cat)
print([len(o) for o in part.orbits])   # 6 and 3

# compatibility degree: 0 means the two roots can sit in one cluster
deg = np.array([[compatibility_degree(cat, a, b) for b in range(len(cat))]
                for a in range(len(cat))])
print(deg)

clusters = enumerate_clusters(cat)
print(len(clusters), "clusters")       # Catalan number 14

# The support function takes one value per orbit; the default is rho-check
F = build_support_function(cat)
print(F.orbit_values)

real = realize(cat, F)
V = np.array(real.vertices, dtype=float)
print(real.n_vertices, "vertices,", len(real.facets), "facets,", len(real.edges()), "edges")
print("verified:", real.verified)
print("centroid:", V.mean(axis=0))

# Any other admissible choice gives a combinatorially equal polytope
other = realize(cat, build_support_function(cat, [1, "7/4"]))
print(other.n_vertices, other.verified)

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ax = plt.figure().add_subplot(projection="3d")
    for a, b in real.edges():
        ax.plot(*V[[a, b]].T, color="k", lw=0.8)
    ax.scatter(*V.T, s=12)
    plt.savefig("a3_associahedron.png", dpi=120)
    print("wrote a3_associahedron.png")
except ImportError:
    pass
