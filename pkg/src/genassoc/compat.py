"""Compatibility degree, the two-element sets E(a, a') and the subplus operation."""

from __future__ import annotations

from functools import lru_cache

from .report import ConsistencyError, Report
from .tau import (MINUS, PLUS, alternating_word, sigma_apply, sigma_apply_index,
                  sigma_inverse, tau_apply)


class DegreePreconditionError(ValueError):
    """subplus/e_set called on a pair whose mutual degree is not 1."""


@lru_cache(maxsize=None)
def _transport_table(catalog):
    h = catalog.coxeter_number
    table = []
    for k in range(len(catalog)):
        found = None
        for length in range(h + 3):
            for start in (PLUS, MINUS):
                if length == 0 and start == MINUS:
                    continue
                word = alternating_word(start, length)
                img = sigma_apply_index(catalog, word, k)
                if catalog.is_negative_simple(img):
                    found = (word, img)
                    break
            if found:
                break
        if found is None:
            raise ConsistencyError(
                f"{catalog.cartan_type}: {catalog.label(k)} never reaches -Pi "
                f"within h+2 steps")
        table.append(found)
    return tuple(table)


def transport_to_negative(catalog, k: int):
    """Shortest alternating word sending root ``k`` to some ``-alpha_j``.

    Returns ``(word, j)`` with j 0-based.  Ties go to the word starting with +.
    """
    return _transport_table(catalog)[k]


@lru_cache(maxsize=None)
def degree_table(catalog) -> tuple:
    """Full table ``deg[a][b] = (a || b)`` over catalog indices."""
    from .tau import tau_permutations
    perms = tau_permutations(catalog)
    roots = catalog.roots
    N = len(catalog)
    table = []
    for a in range(N):
        word, j = transport_to_negative(catalog, a)
        row = []
        for b in range(N):
            x = b
            for eps in word:
                x = perms[eps][x]
            c = roots[x][j]
            row.append(c if c > 0 else 0)
        table.append(tuple(row))
    return tuple(table)


def compatibility_degree(catalog, a: int, b: int) -> int:
    """(a || b) via transport of ``a`` to -Pi; independent of the table cache."""
    word, j = transport_to_negative(catalog, a)
    c = catalog.roots[sigma_apply_index(catalog, word, b)][j]
    return max(c, 0)


def compatible(catalog, a: int, b: int) -> bool:
    return degree_table(catalog)[a][b] == 0


def _vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _check_degree_one(catalog, a, b):
    deg = degree_table(catalog)
    if deg[a][b] != 1 or deg[b][a] != 1:
        raise DegreePreconditionError(
            f"{catalog.label(a)}, {catalog.label(b)} have degrees "
            f"({deg[a][b]}, {deg[b][a]}), need (1, 1)")


def subplus_special(catalog, j: int, v) -> tuple:
    """(-alpha_j) subplus v = v - alpha_j + sum_{i != j} a_ij alpha_i."""
    a = catalog.cartan
    w = list(v)
    for i in range(catalog.rank):
        w[i] += -1 if i == j else a[i][j]
    return tuple(w)


def subplus(catalog, a: int, b: int) -> tuple:
    """The element of E(a, b) other than a + b (the zero vector in rank 1)."""
    _check_degree_one(catalog, a, b)
    n = catalog.rank
    roots = catalog.roots
    total = _vec_add(roots[a], roots[b])
    if n == 1:
        return (0,)
    word, j = transport_to_negative(catalog, b)
    ta = roots[sigma_apply_index(catalog, word, a)]
    inv = sigma_inverse(word)
    candidates = {sigma_apply(catalog, inv, _vec_add(ta, roots[j])),
                  sigma_apply(catalog, inv, subplus_special(catalog, j, ta))}
    if total not in candidates or len(candidates) != 2:
        raise ConsistencyError(
            f"{catalog.cartan_type}: E({catalog.label(a)}, {catalog.label(b)}) "
            f"transported back to {sorted(candidates)} does not split off a+a'")
    candidates.discard(total)
    return candidates.pop()


def e_set(catalog, a: int, b: int) -> tuple:
    """``(a + b, a subplus b)``."""
    s = subplus(catalog, a, b)
    return _vec_add(catalog.roots[a], catalog.roots[b]), s


def twisted_sum(catalog, word, u, v) -> tuple:
    """u +_sigma v = sigma(sigma^{-1} u + sigma^{-1} v)."""
    inv = sigma_inverse(word)
    return sigma_apply(catalog, word,
                       _vec_add(sigma_apply(catalog, inv, u), sigma_apply(catalog, inv, v)))


def brute_force_e_set(catalog, a: int, b: int) -> set:
    """All u +_sigma v over alternating words of length <= h+2."""
    h = catalog.coxeter_number
    u, v = catalog.roots[a], catalog.roots[b]
    out = set()
    for length in range(h + 3):
        for start in (PLUS, MINUS):
            out.add(twisted_sum(catalog, alternating_word(start, length), u, v))
    return out


def degree_one_pairs(catalog):
    """Ordered pairs (a, b), a != b, with (a||b) = (b||a) = 1."""
    deg = degree_table(catalog)
    N = len(catalog)
    return [(a, b) for a in range(N) for b in range(N)
            if deg[a][b] == 1 and deg[b][a] == 1]


def check_second_term(catalog) -> Report:
    """If [a subplus b : alpha_i] > 0 then [a + b : alpha_i] > 0."""
    rep = Report(f"second term {catalog.cartan_type}")
    bad = []
    pairs = degree_one_pairs(catalog)
    for a, b in pairs:
        total, sub = e_set(catalog, a, b)
        for i in range(catalog.rank):
            if sub[i] > 0 and total[i] <= 0:
                bad.append((catalog.label(a), catalog.label(b), i + 1))
    rep.add("positive coordinate of subplus forces one in the sum", not bad,
            f"{len(pairs)} ordered pairs, {len(bad)} violations", bad)
    return rep


def check_alternate_formula(catalog, j: int, k: int) -> bool:
    """Both closed forms agree: tau_{-e(j)}(-alpha_j + tau_{-e(j)}(alpha))."""
    eps = -catalog.sign[j]
    v = catalog.roots[k]
    left = tau_apply(catalog, eps, _vec_add(catalog.roots[j], tau_apply(catalog, eps, v)))
    return left == subplus_special(catalog, j, v)


def check_e_set(catalog) -> Report:
    """Twisted sums over all short alternating words give exactly {a + b, a subplus b}."""
    rep = Report(f"E-set {catalog.cartan_type}")
    bad = []
    pairs = degree_one_pairs(catalog)
    for a, b in pairs:
        total, sub = e_set(catalog, a, b)
        want = {total, sub}
        expected = 1 if catalog.rank == 1 else 2
        got = brute_force_e_set(catalog, a, b)
        if got != want or len(got) != expected:
            bad.append((catalog.label(a), catalog.label(b), sorted(got)))
    rep.add("two-element dichotomy over words of length <= h+2", not bad,
            f"{len(pairs)} ordered pairs", bad)
    return rep
