"""Polygon models for types A and B/C, used as independent test oracles.

Type A_n: almost positive roots are the diagonals of an (n+3)-gon and the
compatibility degree is 1 for crossing diagonals, 0 otherwise.

Types B_n / C_n: almost positive roots are the orbits of the half-turn on the
diagonals of a (2n+2)-gon.  In type B, (a || b) counts the crossings of one
diagonal of ``a`` with all diagonals of ``b``; type C swaps the roles.

Nothing here touches the tau maps or the algebraic compatibility degree; the
bijection with the root catalog is read off from crossings with the snake.
"""

from __future__ import annotations

from itertools import combinations


def _norm(d):
    a, b = d
    return (a, b) if a < b else (b, a)


def is_diagonal(d, m) -> bool:
    a, b = d
    return a != b and (a - b) % m not in (1, m - 1)


def crosses(d1, d2) -> bool:
    """Distinct chords with a common interior point (shared endpoints do not count)."""
    a, b = _norm(d1)
    c, e = _norm(d2)
    if len({a, b, c, e}) < 4:
        return False
    return (a < c < b) != (a < e < b)


def all_diagonals(m):
    return [(a, b) for a, b in combinations(range(m), 2) if is_diagonal((a, b), m)]


def zigzag(m) -> list:
    """The snake: a zig-zag triangulation of the m-gon, as m-3 diagonals in order."""
    pts = []
    lo, hi = 1, m - 1
    while len(pts) < m - 2:
        pts.append(lo)
        lo += 1
        if len(pts) < m - 2:
            pts.append(hi)
            hi -= 1
    return [_norm((pts[k], pts[k + 1])) for k in range(len(pts) - 1)]


# ---------------------------------------------------------------------------
# type A

def crossing_degree_A(d1, d2) -> int:
    return 1 if crosses(d1, d2) else 0


def snake_map_A(n) -> dict:
    """``{root coordinates: diagonal}`` for A_n on the (n+3)-gon.

    ``-alpha_i`` is the i-th snake diagonal; a positive root with coordinates
    b is the diagonal crossing snake diagonal i exactly b_i times.
    """
    m = n + 3
    snake = zigzag(m)
    assert len(snake) == n
    out = {}
    for i, d in enumerate(snake):
        out[tuple(-1 if k == i else 0 for k in range(n))] = d
    for d in all_diagonals(m):
        if d in snake:
            continue
        v = tuple(crossing_degree_A(d, s) for s in snake)
        if v in out:
            raise AssertionError(f"two diagonals share snake profile {v}")
        out[v] = d
    return out


# ---------------------------------------------------------------------------
# types B and C

def theta(d, m):
    return _norm(((d[0] + m // 2) % m, (d[1] + m // 2) % m))


def theta_orbit(d, m) -> tuple:
    return tuple(sorted({_norm(d), theta(d, m)}))


def all_theta_orbits(m) -> list:
    return sorted({theta_orbit(d, m) for d in all_diagonals(m)})


def _crossings(d, orbit) -> int:
    return sum(1 for e in orbit if crosses(d, e))


def crossing_degree_BC(o1, o2, family) -> int:
    """(o1 || o2) in the half-turn model; ``family`` is "B" or "C"."""
    if family == "B":
        return _crossings(o1[0], o2)
    if family == "C":
        return _crossings(o2[0], o1)
    raise ValueError(family)


def snake_map_BC(n, family) -> dict:
    """``{root coordinates: theta-orbit}`` for B_n / C_n on the (2n+2)-gon."""
    m = 2 * n + 2
    snake = zigzag(m)              # 2n-1 diagonals, centrally symmetric
    neg = [theta_orbit(snake[i], m) for i in range(n)]
    assert len(neg[-1]) == 1, "middle snake diagonal must be a diameter"
    out = {}
    for i, o in enumerate(neg):
        out[tuple(-1 if k == i else 0 for k in range(n))] = o
    for o in all_theta_orbits(m):
        if o in neg:
            continue
        v = tuple(crossing_degree_BC(s, o, family) for s in neg)
        if v in out:
            raise AssertionError(f"two orbits share snake profile {v}")
        out[v] = o
    return out


# ---------------------------------------------------------------------------
# counting triangulations

def _triangulations(poly, m):
    """Yield each triangulation of the convex polygon ``poly`` as a frozenset."""
    if len(poly) < 3:
        yield frozenset()
        return
    a, b = poly[0], poly[-1]
    for k in range(1, len(poly) - 1):
        c = poly[k]
        new = {_norm(e) for e in ((a, c), (c, b)) if is_diagonal(e, m)}
        for left in _triangulations(poly[:k + 1], m):
            for right in _triangulations(poly[k:], m):
                yield left | right | new


def count_triangulations(m) -> int:
    return sum(1 for _ in _triangulations(list(range(m)), m))


def count_symmetric_triangulations(m) -> int:
    return sum(1 for t in _triangulations(list(range(m)), m)
               if all(theta(d, m) in t for d in t))


def count_maximal_noncrossing(family, n) -> int:
    """Number of clusters according to the polygon model, by brute force."""
    if family == "A":
        return count_triangulations(n + 3)
    if family in ("B", "C"):
        return count_symmetric_triangulations(2 * n + 2)
    raise ValueError(f"no polygon model for family {family}")


# ---------------------------------------------------------------------------
# polygon symmetries (used to compare group actions)

def dihedral_maps(m):
    """All 2m symmetries of the m-gon as vertex maps."""
    for r in range(m):
        yield lambda v, r=r: (v + r) % m
        yield lambda v, r=r: (r - v) % m


def apply_to_diagonal(f, d):
    return _norm((f(d[0]), f(d[1])))


def reflection(r, m):
    """The polygon reflection v -> r - v."""
    return lambda v: (r - v) % m


def dihedral_orbit_sizes(items, m, on_orbits) -> list:
    seen, sizes = set(), []
    for x in items:
        if x in seen:
            continue
        orb = set()
        for f in dihedral_maps(m):
            if on_orbits:
                orb.add(tuple(sorted({apply_to_diagonal(f, d) for d in x})))
            else:
                orb.add(apply_to_diagonal(f, x))
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes)


def compare_with_algebra(catalog):
    """Cross-check a type A, B or C catalog against its polygon model."""
    from .clusters import enumerate_clusters
    from .compat import degree_table
    from .report import Report
    from .tau import orbits, tau_permutations

    fam, n = catalog.cartan_type.family, catalog.rank
    if fam == "A":
        m, mp, on_orbits = n + 3, snake_map_A(n), False

        def degree(x, y):
            return crossing_degree_A(x, y)
    elif fam in ("B", "C"):
        m, mp, on_orbits = 2 * n + 2, snake_map_BC(n, fam), True

        def degree(x, y):
            return crossing_degree_BC(x, y, fam)
    else:
        raise ValueError(f"no polygon model for {catalog.cartan_type}")

    rep = Report(f"polygon model {catalog.cartan_type}")
    rep.add("snake bijection onto almost positive roots", set(mp) == set(catalog.roots),
            f"{len(mp)} diagonals / orbits")
    deg = degree_table(catalog)
    bad = [(u, v) for u in mp for v in mp
           if deg[catalog.lookup(u)][catalog.lookup(v)] != degree(mp[u], mp[v])]
    rep.add("crossing numbers equal compatibility degrees", not bad,
            f"{len(mp) ** 2} pairs", bad)
    want = count_maximal_noncrossing(fam, n)
    got = len(enumerate_clusters(catalog))
    rep.add("maximal non-crossing sets = clusters", want == got, f"{want} vs {got}")

    def image(f, x):
        if on_orbits:
            return tuple(sorted({apply_to_diagonal(f, d) for d in x}))
        return apply_to_diagonal(f, x)

    perms = tau_permutations(catalog)
    for eps, r, name in ((1, 1, "tau+ is the reflection v -> 1 - v"),
                         (-1, 0, "tau- is the reflection v -> -v")):
        f = reflection(r, m)
        bad = [v for v, x in mp.items()
               if mp[catalog.roots[perms[eps][catalog.lookup(v)]]] != image(f, x)]
        rep.add(name, not bad, witnesses=bad)
    alg = sorted(len(o) for o in orbits(catalog).orbits)
    geo = dihedral_orbit_sizes(list(mp.values()), m, on_orbits)
    rep.add("orbit sizes match the dihedral action", alg == geo, f"{alg}")
    return rep
