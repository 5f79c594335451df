"""Clusters, cluster expansions and the exchange graph."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
import random

from .compat import degree_table
from .linalg import det
from .report import ConsistencyError, Report
from .tau import MINUS, tau_apply, tau_permutations


# ---------------------------------------------------------------------------
# enumeration

def compatibility_bitsets(catalog) -> list:
    """Bit k of entry a is set iff a != k and (a || k) = 0."""
    deg = degree_table(catalog)
    N = len(catalog)
    return [sum(1 << b for b in range(N) if b != a and deg[a][b] == 0)
            for a in range(N)]


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _bron_kerbosch(nbr, R, P, X, out):
    if not P:
        if not X:
            out.append(tuple(sorted(R)))
        return
    # pivot maximizing |P & N(u)| keeps the branching small
    best, pivot_mask = -1, 0
    for u in _bits(P | X):
        c = (P & nbr[u]).bit_count()
        if c > best:
            best, pivot_mask = c, nbr[u]
    for v in _bits(P & ~pivot_mask):
        _bron_kerbosch(nbr, R + [v], P & nbr[v], X & nbr[v], out)
        P &= ~(1 << v)
        X |= 1 << v


def _cliques_through(args):
    nbr, v = args
    later = ~((1 << (v + 1)) - 1)
    earlier = (1 << v) - 1
    out = []
    _bron_kerbosch(nbr, [v], nbr[v] & later, nbr[v] & earlier, out)
    return out


def maximal_cliques(nbr, threads: int = 1) -> list:
    """All maximal cliques of the graph given by neighbour bitsets, sorted."""
    tasks = [(nbr, v) for v in range(len(nbr))]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_cliques_through, tasks, chunksize=4))
    else:
        parts = [_cliques_through(t) for t in tasks]
    return sorted(c for part in parts for c in part)


def cluster_matrix(catalog, cluster):
    return [catalog.roots[k] for k in cluster]


@lru_cache(maxsize=None)
def _clusters_cached(catalog):
    return tuple(_enumerate(catalog, 1))


def _enumerate(catalog, threads):
    n = catalog.rank
    cliques = maximal_cliques(compatibility_bitsets(catalog), threads)
    for c in cliques:
        if len(c) != n:
            raise ConsistencyError(
                f"{catalog.cartan_type}: maximal compatible set of size {len(c)}: "
                f"{[catalog.label(k) for k in c]}")
        if abs(det(cluster_matrix(catalog, c))) != 1:
            raise ConsistencyError(
                f"{catalog.cartan_type}: cluster {[catalog.label(k) for k in c]} "
                "is not a Z-basis")
    return cliques


def enumerate_clusters(catalog, threads: int = 1) -> list:
    """Every cluster as a sorted tuple of catalog indices, in sorted order.

    Purity and unimodularity are asserted on the way; a violation raises
    ``ConsistencyError``.
    """
    if threads > 1:
        return _enumerate(catalog, threads)
    return list(_clusters_cached(catalog))


# ---------------------------------------------------------------------------
# cluster expansion

def _positive_part(v):
    return tuple(c if c > 0 else 0 for c in v)


@lru_cache(maxsize=None)
def _expand(catalog, gamma, eps, depth):
    terms = {i: -c for i, c in enumerate(gamma) if c < 0}
    plus = _positive_part(gamma)
    if not any(plus):
        return terms, depth
    if depth > catalog.coxeter_number + 2:
        raise ConsistencyError(
            f"{catalog.cartan_type}: expansion recursion did not terminate")
    inner, reached = _expand(catalog, tau_apply(catalog, eps, plus), -eps, depth + 1)
    perm = tau_permutations(catalog)[eps]
    for k, m in inner.items():
        k2 = perm[k]
        if k2 in terms:
            raise ConsistencyError(f"{catalog.cartan_type}: overlapping expansion terms")
        terms[k2] = m
    return terms, reached


def expansion_with_depth(catalog, gamma, start=MINUS):
    """Cluster expansion of ``gamma`` plus the recursion depth it needed."""
    gamma = tuple(int(c) for c in gamma)
    if len(gamma) != catalog.rank:
        raise ValueError(f"expected {catalog.rank} coordinates, got {len(gamma)}")
    if start not in (1, -1):
        raise ValueError(f"start sign must be +1 or -1, got {start!r}")
    terms, depth = _expand(catalog, gamma, start, 0)
    return dict(terms), depth


def cluster_expansion(catalog, gamma, start=MINUS) -> dict:
    """``{catalog index: positive multiplicity}`` with sum m_b * b == gamma.

    Uses K(g) = {-[g:a_i](-a_i) : [g:a_i] < 0} u tau_e(K(tau_e(g_+))) with the
    sign e alternating and starting at ``start``.  The result does not depend
    on ``start``; the dict's insertion order (the order terms are found) does.
    """
    return expansion_with_depth(catalog, gamma, start)[0]


def format_vector(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def format_expansion(catalog, terms) -> str:
    """Terms in insertion order, multiplicities > 1 written as ``m*[...]``."""
    parts = []
    for k, m in terms.items():
        s = format_vector(catalog.roots[k])
        parts.append(s if m == 1 else f"{m}*{s}")
    return " + ".join(parts)


def display_expansion(catalog, gamma) -> dict:
    """Expansion with terms ordered as the recursion finds them when it opens
    with the sign of the first simple root.  Used for listings and tables."""
    return cluster_expansion(catalog, gamma, catalog.sign[0])


def expansion_table_rows(catalog):
    """``(alpha, j, terms)`` for each positive root alpha of full support and each
    j with [alpha:alpha_j] = [alpha^vee:alpha_j^vee] = 1; terms expand alpha - alpha_j.

    Rows go by height, then reverse lexicographic order of alpha, then j.
    """
    n = catalog.rank
    full = [k for k in range(n, len(catalog)) if all(catalog.roots[k])]
    full.sort(key=lambda k: (sum(catalog.roots[k]), tuple(-x for x in catalog.roots[k])))
    rows = []
    for k in full:
        a, av = catalog.roots[k], catalog.coroots[k]
        for j in range(n):
            if a[j] == 1 and av[j] == 1:
                g = tuple(x - (1 if i == j else 0) for i, x in enumerate(a))
                rows.append((a, j, display_expansion(catalog, g)))
    return rows


def expansion_table(catalog) -> str:
    lines = [f"{format_vector(a)} {j + 1} {format_expansion(catalog, t)}"
             for a, j, t in expansion_table_rows(catalog)]
    return "\n".join(lines) + "\n"


def combine(catalog, terms) -> tuple:
    n = catalog.rank
    out = [0] * n
    for k, m in terms.items():
        v = catalog.roots[k]
        for i in range(n):
            out[i] += m * v[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# exchange graph

@dataclass(frozen=True)
class ExchangePair:
    c1: tuple
    c2: tuple
    alpha: int
    alpha_prime: int
    expansion: dict  # cluster expansion of alpha + alpha_prime

    @property
    def common(self):
        return tuple(sorted(set(self.c1) & set(self.c2)))


def exchange_pairs(catalog, clusters) -> list:
    """All adjacent cluster pairs with the expansion of alpha + alpha'."""
    n = catalog.rank
    deg = degree_table(catalog)
    facets = {}
    for c in clusters:
        for k in c:
            facets.setdefault(tuple(x for x in c if x != k), []).append((c, k))
    pairs = []
    for ridge, owners in sorted(facets.items()):
        if len(owners) != 2:
            raise ConsistencyError(
                f"{catalog.cartan_type}: ridge {[catalog.label(k) for k in ridge]} "
                f"lies in {len(owners)} clusters")
        (c1, a), (c2, b) = sorted(owners)
        if deg[a][b] != 1 or deg[b][a] != 1:
            raise ConsistencyError(
                f"{catalog.cartan_type}: exchanged roots {catalog.label(a)}, "
                f"{catalog.label(b)} do not have mutual degree 1")
        total = tuple(x + y for x, y in zip(catalog.roots[a], catalog.roots[b]))
        exp = cluster_expansion(catalog, total)
        if not set(exp) <= set(ridge) or any(m <= 0 for m in exp.values()):
            raise ConsistencyError(
                f"{catalog.cartan_type}: expansion of {catalog.label(a)} + "
                f"{catalog.label(b)} leaves the common face")
        pairs.append(ExchangePair(c1, c2, a, b, exp))
    if n > 0 and len(pairs) * 2 != len(clusters) * n:
        raise ConsistencyError(f"{catalog.cartan_type}: exchange graph is not n-regular")
    return pairs


# ---------------------------------------------------------------------------
# checks

def lattice_sample(catalog, box=2, size=400, seed=0):
    """All of [-box, box]^n for rank <= 4, otherwise a seeded random sample."""
    n = catalog.rank
    if n <= 4:
        from itertools import product
        return [tuple(v) for v in product(range(-box, box + 1), repeat=n)]
    rng = random.Random(seed)
    return [tuple(rng.randint(-box, box) for _ in range(n)) for _ in range(size)]


def expansion_uniqueness_check(catalog, sample=None, seed=0, clusters=None) -> Report:
    if sample is None:
        sample = lattice_sample(catalog, seed=seed)
    if clusters is None:
        clusters = enumerate_clusters(catalog)
    containing = {}
    for c in clusters:
        for k in c:
            containing.setdefault(k, set()).add(c)
    deg = degree_table(catalog)
    h = catalog.coxeter_number
    bad_sum, bad_compat, bad_cluster, bad_depth = [], [], [], []
    for g in sample:
        terms, depth = expansion_with_depth(catalog, g)
        if combine(catalog, terms) != tuple(g) or any(m <= 0 for m in terms.values()):
            bad_sum.append(g)
        sup = sorted(terms)
        if any(deg[a][b] for a in sup for b in sup):
            bad_compat.append(g)
        if sup:
            owners = set.intersection(*(containing[k] for k in sup))
            if not owners:
                bad_cluster.append(g)
        if depth > h:
            bad_depth.append((g, depth))
    rep = Report(f"expansions {catalog.cartan_type}")
    rep.add("expansion reproduces the vector", not bad_sum, f"{len(sample)} vectors", bad_sum)
    rep.add("support pairwise compatible", not bad_compat, witnesses=bad_compat)
    rep.add("support inside a cluster", not bad_cluster, witnesses=bad_cluster)
    rep.add("recursion depth <= h", not bad_depth, witnesses=bad_depth)
    return rep


def check_clusters(catalog, clusters=None) -> Report:
    """Purity, unimodularity, uniqueness of the cluster -Pi, exchange regularity."""
    rep = Report(f"clusters {catalog.cartan_type}")
    try:
        if clusters is None:
            clusters = enumerate_clusters(catalog)
    except ConsistencyError as e:
        return rep.add("enumeration", False, str(e))
    n = catalog.rank
    rep.add("purity: every maximal compatible set has n elements",
            all(len(c) == n for c in clusters), f"{len(clusters)} clusters")
    bad = [c for c in clusters if abs(det(cluster_matrix(catalog, c))) != 1]
    rep.add("|det| = 1 for every cluster", not bad, witnesses=bad)
    rep.add("-Pi is a cluster", tuple(range(n)) in set(clusters))
    try:
        pairs = exchange_pairs(catalog, clusters)
        rep.add("exchange pairs normalized (m_a = m_a' = 1, m_b >= 0, support on ridge)",
                True, f"{len(pairs)} pairs")
    except ConsistencyError as e:
        rep.add("exchange pairs normalized", False, str(e))
    return rep
