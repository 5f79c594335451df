"""
Cluster expansions and certificates in E6
=========================================

Every vector of the root lattice is a nonnegative combination of the roots
of exactly one cluster.  We print a few expansions, the table of full-support
roots, and the linear certificate behind one of the admissibility inequalities.
"""

from genassoc import build_root_system
from genassoc.clusters import display_expansion, expansion_table, format_expansion
from genassoc.polytope import (
    build_support_function, certificate_check, condition_rows_text, folded_condition_matrix,
    principal_certificates,
)

cat = build_root_system("E6")
print(len(cat) - cat.rank, "positive roots, Coxeter number", cat.coxeter_number)

# The highest root minus a simple root
for gamma, j in [((1, 2, 2, 3, 2, 1), 5), ((1, 1, 1, 1, 1, 1), 1)]:
    g = list(gamma)
    g[j] -= 1
    print(g, "=", format_expansion(cat, display_expansion(cat, g)))

# The full table: one row per full-support root alpha and index j with coefficient 1
print(expansion_table(cat))

# The support function is constant on -w0 classes of orbits, so 4 free values
F = build_support_function(cat)
print("rho-check values:", [str(x) for x in F.orbit_values])
for row in condition_rows_text(cat):
    print("  ", row)
print(folded_condition_matrix(cat))

# each inequality is a nonnegative combination of the 4 rows above
k = cat.lookup((1, 1, 1, 2, 2, 1))
(cert,) = [c for c in principal_certificates(cat) if c.alpha == k and c.j == 2]
print("c =", cert.c, "y =", [str(y) for y in cert.y])
print(certificate_check(cat).checks[-1].detail)
