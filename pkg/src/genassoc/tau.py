"""The piecewise-linear involutions tau_+ and tau_- and their orbits.

A word is a tuple of signs (+1 / -1) listed in *application order*: the first
entry acts first.  So ``(1, -1)`` is the map ``tau_- o tau_+``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .report import ConsistencyError, Report

PLUS, MINUS = 1, -1


def normalize_word(signs) -> tuple:
    """Cancel adjacent equal letters (each tau is an involution)."""
    out = []
    for s in signs:
        s = _sign(s)
        if out and out[-1] == s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def _sign(s) -> int:
    if s in (1, "+", "+1"):
        return PLUS
    if s in (-1, "-", "-1"):
        return MINUS
    raise ValueError(f"not a sign: {s!r}")


def alternating_word(start: int, length: int) -> tuple:
    return tuple(start if k % 2 == 0 else -start for k in range(length))


def word_str(word) -> str:
    return "(" + ",".join("+" if s > 0 else "-" for s in word) + ")"


def tau_apply(catalog, eps: int, v) -> tuple:
    """Apply tau_eps to an arbitrary lattice vector."""
    a = catalog.cartan
    n = len(a)
    w = list(v)
    for i in range(n):
        if catalog.sign[i] != eps:
            continue
        s = -v[i]
        row = a[i]
        for j in range(n):
            if j != i and row[j] and v[j] > 0:
                s -= row[j] * v[j]
        w[i] = s
    return tuple(w)


@lru_cache(maxsize=None)
def tau_permutations(catalog) -> dict:
    """``{+1: perm, -1: perm}`` giving the action of tau on catalog indices."""
    perms = {}
    for eps in (PLUS, MINUS):
        perm = []
        for v in catalog.roots:
            k = catalog.lookup(tau_apply(catalog, eps, v))
            if k is None:
                raise ConsistencyError(
                    f"{catalog.cartan_type}: tau{eps:+d}{list(v)} left the catalog")
            perm.append(k)
        perms[eps] = tuple(perm)
    return perms


def tau_on_catalog(catalog, eps: int, idx: int) -> int:
    return tau_permutations(catalog)[eps][idx]


def sigma_apply(catalog, word, v) -> tuple:
    for eps in word:
        v = tau_apply(catalog, eps, v)
    return v


def sigma_apply_index(catalog, word, idx: int) -> int:
    perms = tau_permutations(catalog)
    for eps in word:
        idx = perms[eps][idx]
    return idx


def sigma_inverse(word) -> tuple:
    return tuple(reversed(word))


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple          # tuple of sorted index tuples
    representatives: tuple  # per orbit, the 0-based i with -alpha_i in it
    orbit_of: tuple         # catalog index -> orbit number

    def __len__(self):
        return len(self.orbits)


@lru_cache(maxsize=None)
def orbits(catalog) -> OrbitPartition:
    perms = tau_permutations(catalog)
    orbit_of = [-1] * len(catalog)
    found = []
    for start in range(len(catalog)):
        if orbit_of[start] >= 0:
            continue
        k = len(found)
        stack, members = [start], []
        orbit_of[start] = k
        while stack:
            x = stack.pop()
            members.append(x)
            for eps in (PLUS, MINUS):
                y = perms[eps][x]
                if orbit_of[y] < 0:
                    orbit_of[y] = k
                    stack.append(y)
        found.append(tuple(sorted(members)))
    reps = tuple(tuple(i for i in o if catalog.is_negative_simple(i)) for o in found)
    if any(not r for r in reps):
        raise ConsistencyError(f"{catalog.cartan_type}: an orbit misses -Pi")
    return OrbitPartition(tuple(found), reps, tuple(orbit_of))


def minus_w0_permutation(catalog) -> tuple:
    """Read ``-w0`` off the alternating word with h+2 letters."""
    n = catalog.rank
    word = alternating_word(PLUS, catalog.coxeter_number + 2)
    perm = []
    for i in range(n):
        k = sigma_apply_index(catalog, word, i)
        if not catalog.is_negative_simple(k):
            raise ConsistencyError(
                f"{catalog.cartan_type}: (h+2)-word does not permute -Pi")
        perm.append(k)
    a = catalog.cartan
    if sorted(perm) != list(range(n)) or any(
            a[perm[i]][perm[j]] != a[i][j] for i in range(n) for j in range(n)):
        raise ConsistencyError(f"{catalog.cartan_type}: -w0 is not a diagram automorphism")
    if any(perm[perm[i]] != i for i in range(n)):
        raise ConsistencyError(f"{catalog.cartan_type}: -w0 is not an involution")
    return tuple(perm)


def _linear_map_images(catalog, perm):
    """Coordinates of (-w0)(v) = sum_i v_i alpha_{perm(i)} for every root."""
    n = catalog.rank
    out = []
    for v in catalog.roots:
        w = [0] * n
        for i in range(n):
            w[perm[i]] += v[i]
        out.append(tuple(w))
    return out


def check_periodicity(catalog) -> Report:
    """Both alternating (h+2)-words act as the linear map -w0; orbit positive counts."""
    rep = Report(f"periodicity {catalog.cartan_type}")
    h = catalog.coxeter_number
    perm = catalog.minus_w0
    expected = _linear_map_images(catalog, perm)
    for start in (PLUS, MINUS):
        word = alternating_word(start, h + 2)
        bad = [catalog.label(k) for k, v in enumerate(catalog.roots)
               if sigma_apply(catalog, word, v) != expected[k]]
        rep.add(f"{word_str(word[:2])}... (h+2={h + 2}) word equals -w0", not bad,
                witnesses=bad)
    part = orbits(catalog)
    bad = []
    for i in range(catalog.rank):
        o = part.orbits[part.orbit_of[i]]
        npos = sum(1 for k in o if not catalog.is_negative_simple(k))
        # w0(-alpha_i) = alpha_i  iff  -w0 fixes i
        want = h // 2 if perm[i] == i else h
        if npos != want:
            bad.append((i + 1, npos, want))
    rep.add("positive roots per orbit of -alpha_i", not bad, witnesses=bad)
    rep.add("h*n = 2|Phi+|", h * catalog.rank == 2 * catalog.n_positive)
    return rep
