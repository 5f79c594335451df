"""Support functions, exact polytope realization and its verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .clusters import cluster_expansion, enumerate_clusters, exchange_pairs
from .linalg import inverse, solve_unimodular, transpose
from .report import ConsistencyError, Report
from .tau import orbits


class SupportFunctionError(ValueError):
    """Values violate the admissibility conditions.

    ``condition`` is ``"invariance"`` (not constant on -w0 orbits), ``"positivity"`` (some
    sum_i a_ij F(-alpha_i) <= 0) or ``"count"``; ``failing`` holds 1-based j.
    """

    def __init__(self, message, condition, failing=()):
        super().__init__(message)
        self.condition = condition
        self.failing = list(failing)


def w0_classes(catalog) -> list:
    """Orbits of ``-w0`` on the 0-based index set, ordered by smallest member."""
    perm = catalog.minus_w0
    seen, out = set(), []
    for i in range(catalog.rank):
        if i not in seen:
            cls = tuple(sorted({i, perm[i]}))
            seen.update(cls)
            out.append(cls)
    return out


def rho_check_values(catalog) -> list:
    """``[rho^vee : alpha_i^vee]``, half the sum of all positive coroots."""
    n = catalog.rank
    tot = [0] * n
    for k in range(n, len(catalog)):
        for i, c in enumerate(catalog.coroots[k]):
            tot[i] += c
    return [Fraction(x, 2) for x in tot]


def condition_lhs(catalog, simple_values) -> list:
    a = catalog.cartan
    n = catalog.rank
    return [sum(a[i][j] * simple_values[i] for i in range(n)) for j in range(n)]


@dataclass(frozen=True, eq=False)
class SupportFunction:
    catalog: object
    mode: str                 # "rho" or "custom"
    orbit_values: tuple       # one Fraction per -w0 class of I
    values: tuple             # one Fraction per catalog index
    validated: bool = True

    def __call__(self, k: int) -> Fraction:
        return self.values[k]

    @property
    def simple_values(self):
        return self.values[:self.catalog.rank]

    def scaled(self, t) -> "SupportFunction":
        t = Fraction(t)
        return SupportFunction(self.catalog, "custom",
                               tuple(t * x for x in self.orbit_values),
                               tuple(t * x for x in self.values), self.validated)


def _to_fraction(x):
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def build_support_function(catalog, values=None, mode=None, validate=True) -> SupportFunction:
    """Support function from one value per ``-w0`` class, or from rho-check.

    ``values`` may also list one value per simple root, in which case it must
    already be constant on ``-w0`` classes.  With ``validate=False`` the
    admissibility conditions are not enforced (for experiments with
    non-admissible values).
    """
    classes = w0_classes(catalog)
    n = catalog.rank
    if mode is None:
        mode = "rho" if values is None else "custom"
    if mode == "rho":
        simple = rho_check_values(catalog)
    elif mode == "custom":
        vals = [_to_fraction(v) for v in values]
        if len(vals) == len(classes):
            simple = [None] * n
            for cls, v in zip(classes, vals):
                for i in cls:
                    simple[i] = v
        elif len(vals) == n:
            simple = vals
            bad = [i + 1 for i in range(n) if simple[i] != simple[catalog.minus_w0[i]]]
            if bad and validate:
                raise SupportFunctionError(
                    f"values not invariant under -w0 at simple roots {bad}", "invariance", bad)
        else:
            raise SupportFunctionError(
                f"{catalog.cartan_type} needs {len(classes)} orbit values "
                f"(or {n} per simple root), got {len(vals)}", "count")
    else:
        raise ValueError(f"unknown support mode {mode!r}")

    if validate:
        lhs = condition_lhs(catalog, simple)
        bad = [j + 1 for j, x in enumerate(lhs) if x <= 0]
        if bad:
            raise SupportFunctionError(
                f"sum_i a_ij F(-alpha_i) > 0 fails for j = {bad}", "positivity", bad)
        if any(x <= 0 for x in simple):
            raise ConsistencyError("admissible support function is not positive on -Pi")

    part = orbits(catalog)
    full = []
    for k in range(len(catalog)):
        full.append(simple[part.representatives[part.orbit_of[k]][0]])
    orbit_vals = tuple(simple[cls[0]] for cls in classes)
    return SupportFunction(catalog, mode, orbit_vals, tuple(full), validate)


# ---------------------------------------------------------------------------
# realization

@dataclass(frozen=True)
class Facet:
    root: int
    normal: tuple
    rhs: Fraction


def facets(catalog, F) -> list:
    """One inequality sum_j [alpha:alpha_j] z_j <= F(alpha) per almost positive root."""
    return [Facet(k, catalog.roots[k], F(k)) for k in range(len(catalog))]


def vertex(catalog, cluster, F) -> tuple:
    """The point z with <z, beta> = F(beta) for each beta in ``cluster``."""
    m = [catalog.roots[k] for k in cluster]
    try:
        return tuple(solve_unimodular(m, [F(k) for k in cluster]))
    except ZeroDivisionError:
        raise ConsistencyError(f"{catalog.cartan_type}: singular cluster {cluster}") from None


@dataclass
class PolytopeRealization:
    catalog: object
    support: SupportFunction
    clusters: list
    vertices: list
    facets: list
    pairs: list = field(default_factory=list, repr=False)
    verified: bool = False
    report: Report | None = field(default=None, repr=False)

    @property
    def n_vertices(self):
        return len(self.vertices)

    def edges(self):
        """Vertex index pairs joined by an edge (adjacent clusters)."""
        pos = {c: i for i, c in enumerate(self.clusters)}
        return sorted((pos[p.c1], pos[p.c2]) for p in self.pairs)


def realize(catalog, F=None, clusters=None, verify=True, threads=1) -> PolytopeRealization:
    if F is None:
        F = build_support_function(catalog)
    if clusters is None:
        clusters = enumerate_clusters(catalog, threads)
    verts = [vertex(catalog, c, F) for c in clusters]
    pairs = exchange_pairs(catalog, clusters)
    real = PolytopeRealization(catalog, F, list(clusters), verts, facets(catalog, F), pairs)
    if verify:
        real.report = verify_realization(catalog, F, clusters, real=real)
        real.verified = real.report.ok
    return real


def verify_realization(catalog, F, clusters=None, real=None) -> Report:
    """Simplicity, exchange convexity and vertex distinctness, all exact."""
    rep = Report(f"realization {catalog.cartan_type}")
    if real is None:
        real = realize(catalog, F, clusters, verify=False)
    clusters = real.clusters
    verts = real.vertices
    N, n = len(catalog), catalog.rank

    # (a) incidence: equality exactly on the cluster's own facets
    L = lcm(*(x.denominator for v in verts for x in v), *(F(k).denominator for k in range(N)))
    V = [[int(x * L) for x in v] for v in verts]
    rhs = [int(F(k) * L) for k in range(N)]
    bound = max((abs(x) for row in V for x in row), default=0) * \
        max(abs(x) for r in catalog.roots for x in r) * n
    bad = []
    if bound < 2 ** 62 and max(map(abs, rhs)) < 2 ** 62:
        vals = np.array(V, dtype=np.int64) @ np.array(catalog.roots, dtype=np.int64).T
        slack = np.array(rhs, dtype=np.int64)[None, :] - vals
        tight = slack == 0
        for ci, c in enumerate(clusters):
            if (slack[ci] < 0).any() or set(np.flatnonzero(tight[ci]).tolist()) != set(c):
                bad.append(c)
    else:
        for ci, c in enumerate(clusters):
            sl = [rhs[k] - sum(a * b for a, b in zip(V[ci], catalog.roots[k])) for k in range(N)]
            if min(sl) < 0 or {k for k in range(N) if sl[k] == 0} != set(c):
                bad.append(c)
    rep.add("(a) every vertex is simple: tight exactly at its cluster, strict elsewhere",
            not bad, f"{len(clusters)} vertices x {N} facets", bad)

    # (b) exchange convexity F(a) + F(a') - sum m_b F(b) > 0
    bad = []
    for p in real.pairs:
        val = F(p.alpha) + F(p.alpha_prime) - sum(m * F(b) for b, m in p.expansion.items())
        if val <= 0:
            bad.append((catalog.label(p.alpha), catalog.label(p.alpha_prime), str(val)))
    rep.add("(b) exchange inequalities strictly positive", not bad,
            f"{len(real.pairs)} pairs", bad)

    # (c) distinct vertices
    rep.add("(c) vertex map injective", len(set(verts)) == len(verts))
    return rep


# ---------------------------------------------------------------------------
# certificate for the principal inequalities

def coefficient_one_pairs(catalog) -> list:
    """Pairs (k, j) with [alpha:alpha_j] = [alpha^vee:alpha_j^vee] = 1, alpha positive."""
    out = []
    for k in range(catalog.rank, len(catalog)):
        v, cv = catalog.roots[k], catalog.coroots[k]
        for j in range(catalog.rank):
            if v[j] == 1 and cv[j] == 1:
                out.append((k, j))
    return out


def folded_condition_matrix(catalog) -> list:
    """Rows: sum_i a_ij F(-alpha_i) with F folded onto -w0 classes, one per class."""
    classes = w0_classes(catalog)
    cls_of = {i: c for c, cls in enumerate(classes) for i in cls}
    a = catalog.cartan
    n = catalog.rank

    def row(j):
        r = [0] * len(classes)
        for i in range(n):
            r[cls_of[i]] += a[i][j]
        return r

    m = []
    for cls in classes:
        rows = [row(j) for j in cls]
        if any(r != rows[0] for r in rows):
            raise ConsistencyError(f"{catalog.cartan_type}: condition rows differ on a -w0 class")
        m.append(rows[0])
    return m


@dataclass(frozen=True)
class Certificate:
    alpha: int
    j: int
    expansion: dict
    c: tuple           # coefficients on -w0 classes
    y: tuple           # multipliers on the folded condition rows

    @property
    def ok(self):
        return all(x >= 0 for x in self.y) and any(x > 0 for x in self.y)


def principal_certificates(catalog) -> list:
    classes = w0_classes(catalog)
    cls_of = {i: c for c, cls in enumerate(classes) for i in cls}
    part = orbits(catalog)

    def cls_of_root(k):
        return cls_of[part.representatives[part.orbit_of[k]][0]]

    m = folded_condition_matrix(catalog)
    if len(m) != len(classes):
        raise ConsistencyError("folded system is not square")
    try:
        minv_t = transpose(inverse(m))
    except ZeroDivisionError:
        raise ConsistencyError(f"{catalog.cartan_type}: folded system is singular") from None
    out = []
    for k, j in coefficient_one_pairs(catalog):
        g = list(catalog.roots[k])
        g[j] -= 1
        exp = cluster_expansion(catalog, g)
        c = [0] * len(classes)
        c[cls_of[j]] += 1
        c[cls_of_root(k)] += 1
        for b, mult in exp.items():
            c[cls_of_root(b)] -= mult
        y = tuple(sum(r[t] * c[t] for t in range(len(c))) for r in minv_t)
        out.append(Certificate(k, j, exp, tuple(c), y))
    return out


def certificate_check(catalog) -> Report:
    """Every principal inequality is a nonnegative combination of the condition rows."""
    rep = Report(f"certificate {catalog.cartan_type}")
    try:
        certs = principal_certificates(catalog)
    except ConsistencyError as e:
        return rep.add("fold", False, str(e))
    bad = [(catalog.label(x.alpha), x.j + 1, x.c, x.y) for x in certs if not x.ok]
    rep.add("transposed-inverse certificates nonnegative and nonzero", not bad,
            f"{len(certs)} (alpha, j) pairs", bad)
    return rep


def condition_rows_text(catalog) -> list:
    """Human-readable folded condition rows, e.g. ``2f1 - f3 > 0``."""
    lines = []
    for row in folded_condition_matrix(catalog):
        terms = []
        for t, x in enumerate(row):
            if x == 0:
                continue
            coef = "" if abs(x) == 1 else str(abs(x))
            sign = "-" if x < 0 else "+"
            terms.append((sign, f"{coef}f{t + 1}"))
        s = "".join((" - " if sg == "-" else " + ") + tx for sg, tx in terms)
        s = s[3:] if s.startswith(" + ") else "-" + s[3:]
        lines.append(s + " > 0")
    return lines
