from fractions import Fraction as Fr

from hypothesis import given, settings, strategies as st
import pytest

from genassoc.cartan import build_root_system
from genassoc.linalg import inverse, transpose
from genassoc.polytope import (
    SupportFunctionError, build_support_function, certificate_check, coefficient_one_pairs,
    condition_lhs, condition_rows_text, facets, folded_condition_matrix,
    principal_certificates, realize, rho_check_values, verify_realization, vertex,
)

# coefficient rows of the E6 conditions in f1..f4, and of their transposed inverse
E6_F_ROWS = [[2, 0, -1, 0], [0, 2, 0, -1], [-1, 0, 2, -1], [0, -1, -2, 2]]
E6_C_ROWS = [[2, 2, 3, 4], [1, 2, 2, 3], [3, 4, 6, 8], [2, 3, 4, 6]]


def admissible(name, values):
    try:
        build_support_function(build_root_system(name), values)
        return True
    except SupportFunctionError:
        return False


def a3_rule(c1, c2):
    return 0 < c1 < c2 < 2 * c1


def c3_rule(c1, c2, c3):
    return c2 < 2 * c1 and c1 + c3 < 2 * c2 and c2 < c3


def e6_rule(f):
    return all(sum(r[i] * f[i] for i in range(4)) > 0 for r in E6_F_ROWS)


def test_rho_values():
    assert rho_check_values(build_root_system("A3")) == [Fr(3, 2), 2, Fr(3, 2)]
    assert build_support_function(build_root_system("A3")).orbit_values == (Fr(3, 2), 2)
    assert build_support_function(build_root_system("C3")).orbit_values == (
        Fr(5, 2), 4, Fr(9, 2))


@pytest.mark.parametrize("name", ["A4", "B5", "C4", "D6", "E6", "E7", "E8", "F4", "G2"])
def test_rho_makes_every_condition_equal_one(name):
    cat = build_root_system(name)
    F = build_support_function(cat)
    assert condition_lhs(cat, F.simple_values) == [1] * cat.rank


def test_a3_gate_boundaries():
    eps = Fr(1, 1000)
    assert not admissible("A3", [1, 3])
    assert not admissible("A3", [1, 2])
    assert admissible("A3", [1, 2 - eps])
    assert not admissible("A3", [1, 1])
    assert admissible("A3", [1, 1 + eps])
    assert not admissible("A3", [-1, Fr(-3, 2)])


def test_c3_gate_boundaries():
    eps = Fr(1, 1000)
    base = [Fr(5, 2), 4, Fr(9, 2)]
    assert admissible("C3", base)
    assert not admissible("C3", [2, 4, Fr(9, 2)])          # c2 = 2 c1
    assert admissible("C3", [2 + eps, 4, Fr(9, 2)])
    assert not admissible("C3", [Fr(5, 2), 4, Fr(11, 2)])  # c1 + c3 = 2 c2
    assert admissible("C3", [Fr(5, 2), 4, Fr(11, 2) - eps])
    assert not admissible("C3", [Fr(5, 2), 4, 4])           # c2 = c3
    assert admissible("C3", [Fr(5, 2), 4, 4 + eps])


def test_e6_gate_boundaries():
    # move along -M^{-1} e_k so that only row k changes
    m_inv = transpose(E6_C_ROWS)
    f0 = [Fr(x) for x in build_support_function(build_root_system("E6")).orbit_values]
    assert e6_rule(f0)
    for k in range(4):
        d = [Fr(m_inv[i][k]) for i in range(4)]
        for t, ok in ((1, False), (1 - Fr(1, 10 ** 6), True), (1 + Fr(1, 10 ** 6), False)):
            f = [f0[i] - t * d[i] for i in range(4)]
            assert e6_rule(f) == ok
            assert admissible("E6", f) == ok, (k, t)


@settings(max_examples=200, deadline=None)
@given(st.fractions(-3, 8, max_denominator=12), st.fractions(-3, 8, max_denominator=12))
def test_a3_gate_matches_rule(c1, c2):
    assert admissible("A3", [c1, c2]) == a3_rule(c1, c2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(0, 8, max_denominator=6), min_size=3, max_size=3))
def test_c3_gate_matches_rule(c):
    assert admissible("C3", c) == (c3_rule(*c) and min(c) > 0)


def test_gate_errors_name_condition():
    cat = build_root_system("A3")
    with pytest.raises(SupportFunctionError) as e:
        build_support_function(cat, [1, 3])
    assert e.value.condition == "positivity" and e.value.failing == [1, 3]
    with pytest.raises(SupportFunctionError) as e:
        build_support_function(cat, [1, 2, 3])
    assert e.value.condition == "invariance"
    with pytest.raises(SupportFunctionError) as e:
        build_support_function(cat, [1])
    assert e.value.condition == "count"


def test_vertex_examples():
    a2 = build_root_system("A2")
    F = build_support_function(a2, [1])
    assert vertex(a2, (0, 1), F) == (-1, -1)
    k1, k12 = a2.lookup((1, 0)), a2.lookup((1, 1))
    assert vertex(a2, tuple(sorted((k1, k12))), F) == (1, 0)
    real = realize(a2, F)
    assert real.verified and len(set(real.vertices)) == 5
    assert sorted(real.vertices) == sorted([(-1, -1), (-1, 1), (1, 0), (1, -1), (0, 1)])


def test_a2_facets():
    a2 = build_root_system("A2")
    fs = facets(a2, build_support_function(a2, [Fr(7, 3)]))
    assert sorted(f.normal for f in fs) == sorted([(-1, 0), (0, -1), (1, 0), (0, 1), (1, 1)])
    assert {f.rhs for f in fs} == {Fr(7, 3)}


@pytest.mark.parametrize("name, nv, nf, ne", [("A2", 5, 5, 5), ("A3", 14, 9, 21),
                                             ("C3", 20, 12, 30), ("B3", 20, 12, 30)])
def test_counts(name, nv, nf, ne):
    real = realize(build_root_system(name))
    assert (real.n_vertices, len(real.facets), len(real.edges())) == (nv, nf, ne)
    assert real.verified


def test_a3_exchange_inequalities():
    cat = build_root_system("A3")
    F = build_support_function(cat)
    rep = verify_realization(cat, F)
    assert rep.ok
    assert "21 pairs" in rep.checks[1].detail


def test_non_admissible_values_fail_verification():
    cat = build_root_system("A3")
    F = build_support_function(cat, [1, 2], validate=False)
    rep = verify_realization(cat, F)
    assert not rep.ok
    assert not rep.checks[1].passed      # (b) exchange convexity


@settings(max_examples=40, deadline=None)
@given(st.fractions(Fr(1, 4), 5, max_denominator=8), st.fractions(Fr(1, 4), 5, max_denominator=8))
def test_conditions_are_also_necessary_in_a3(c1, c2):
    cat = build_root_system("A3")
    F = build_support_function(cat, [c1, c2], validate=False)
    assert verify_realization(cat, F).ok == a3_rule(c1, c2)


@pytest.mark.parametrize("t", [Fr(1, 3), 2, Fr(7, 5)])
def test_scaling(t):
    cat = build_root_system("B3")
    F = build_support_function(cat)
    a = realize(cat, F)
    b = realize(cat, F.scaled(t))
    assert b.vertices == [tuple(t * x for x in v) for v in a.vertices]
    assert [f.rhs for f in b.facets] == [t * f.rhs for f in a.facets]
    assert b.clusters == a.clusters and b.verified


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_every_facet_is_needed(name):
    cat = build_root_system(name)
    real = realize(cat)
    roots = cat.roots
    n = cat.rank
    for f in real.facets:
        on = [v for c, v in zip(real.clusters, real.vertices) if f.root in c]
        centroid = [sum(v[i] for v in on) / len(on) for i in range(n)]

        def lhs(k, z):
            return sum(roots[k][i] * z[i] for i in range(n))

        slack = min(real.facets[k].rhs - lhs(k, centroid) for k in range(len(cat)) if k != f.root)
        assert slack > 0
        norm2 = sum(x * x for x in f.normal)
        reach = max(sum(abs(x) for x in roots[k]) for k in range(len(cat))) * \
            max(abs(x) for x in f.normal)
        delta = slack / (2 * reach)
        z = [centroid[i] + delta * f.normal[i] for i in range(n)]
        assert lhs(f.root, z) > f.rhs
        assert lhs(f.root, z) - f.rhs == delta * norm2
        assert all(lhs(k, z) < real.facets[k].rhs for k in range(len(cat)) if k != f.root)


def test_e6_fold_and_transposed_inverse():
    cat = build_root_system("E6")
    m = folded_condition_matrix(cat)
    assert m == E6_F_ROWS
    assert transpose(inverse(m)) == E6_C_ROWS
    assert condition_rows_text(cat) == ["2f1 - f3 > 0", "2f2 - f4 > 0",
                                       "-f1 + 2f3 - f4 > 0", "-f2 - 2f3 + 2f4 > 0"]


def test_e6_worked_certificate():
    cat = build_root_system("E6")
    k = cat.lookup((1, 1, 1, 2, 2, 1))
    (cert,) = [c for c in principal_certificates(cat) if c.alpha == k and c.j == 2]
    assert cert.c == (-3, 0, 2, 0)
    rows = [sum(r[i] * cert.c[i] for i in range(4)) for r in E6_C_ROWS]
    assert list(cert.y) == rows == [0, 1, 3, 2]
    assert cert.ok


def test_certificate_for_double_tau_of_negative_simple_is_a_unit_vector():
    for name in ("E6", "D5", "F4", "B4", "A4"):
        cat = build_root_system(name)
        a = cat.cartan
        certs = {(c.alpha, c.j): c for c in principal_certificates(cat)}
        for j in range(cat.rank):
            k = cat.lookup(tuple(1 if i == j else -a[i][j] for i in range(cat.rank)))
            y = certs[(k, j)].y
            assert sorted(y) == [0] * (len(y) - 1) + [1], (name, j, y)


@pytest.mark.parametrize("name", ["A1", "A3", "B4", "C4", "D5", "E6", "F4", "G2"])
def test_certificate_check(name):
    cat = build_root_system(name)
    assert certificate_check(cat).ok


def test_coefficient_one_filter():
    assert len(coefficient_one_pairs(build_root_system("E6"))) == 110
    b3 = build_root_system("B3")
    pairs = coefficient_one_pairs(b3)
    # the short root a1 + a2 + a3 has coroot 2a1^ + 2a2^ + a3^
    k = b3.lookup((1, 1, 1))
    assert b3.coroots[k] == (2, 2, 1)
    assert (k, 0) not in pairs and (k, 1) not in pairs and (k, 2) in pairs
