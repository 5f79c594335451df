"""Cartan data and the set of almost positive roots.

Conventions
-----------
The Cartan matrix is ``a[i][j] = <alpha_i^vee, alpha_j>`` so that the simple
reflections act by ``s_i(alpha_j) = alpha_j - a[i][j] * alpha_i``.  Simple
roots are numbered as in Bourbaki (types D use index ``n`` for the branch
node usually written ``n-bar``).  For types B and C we use
``a[n-2][n-1] = -d`` and ``a[n-1][n-2] = -2/d`` with ``d = 1`` (B) or
``d = 2`` (C), 0-based.

Internally indices are 0-based; every user-facing string uses 1-based labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import re

__all__ = [
    "CartanType",
    "RootCatalog",
    "InvalidCartanType",
    "parse_cartan_type",
    "cartan_matrix",
    "build_root_system",
    "bipartition",
    "coxeter_number",
    "minus_w0",
    "ALL_TYPES_UP_TO_RANK_8",
]


class InvalidCartanType(ValueError):
    pass


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise InvalidCartanType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise InvalidCartanType(
                f"invalid rank {self.rank!r} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def parse_cartan_type(text) -> CartanType:
    """Parse ``"E6"``, ``"e6"``, ``"C 3"`` or an existing CartanType."""
    if isinstance(text, CartanType):
        return text
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(text))
    if not m:
        raise InvalidCartanType(f"cannot parse Cartan type {text!r}")
    return CartanType(m.group(1).upper(), int(m.group(2)))


ALL_TYPES_UP_TO_RANK_8 = tuple(
    [CartanType("A", n) for n in range(1, 9)]
    + [CartanType("B", n) for n in range(2, 9)]
    + [CartanType("C", n) for n in range(2, 9)]
    + [CartanType("D", n) for n in range(4, 9)]
    + [CartanType("E", n) for n in (6, 7, 8)]
    + [CartanType("F", 4), CartanType("G", 2)]
)


def cartan_matrix(t) -> tuple[tuple[int, ...], ...]:
    t = parse_cartan_type(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    f = t.family
    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            link(n - 2, n - 1, -1, -2)
        elif f == "C":
            link(n - 2, n - 1, -2, -1)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        # Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif f == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _reflect(a, i, v):
    """s_i(v) = v - <alpha_i^vee, v> alpha_i."""
    pairing = sum(a[i][j] * v[j] for j in range(len(v)))
    if pairing == 0:
        return v
    w = list(v)
    w[i] -= pairing
    return tuple(w)


def _positive_roots(a):
    n = len(a)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = _reflect(a, i, v)
            if w not in seen and all(c >= 0 for c in w):
                seen.add(w)
                queue.append(w)
    return sorted(seen, key=lambda v: (sum(v), v))


def _symmetrizer(a):
    """Return d with d[i] * a[i][j] symmetric and min(d) = 1.

    (alpha_i, alpha_i) = 2 d[i], so d[i] is half the squared length.
    """
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if a[i][j] != 0 and i != j and d[j] is None:
                d[j] = d[i] * Fraction(a[i][j], a[j][i])
                queue.append(j)
    lo = min(d)
    return tuple(x / lo for x in d)


def _graph_bipartition(a):
    n = len(a)
    sign = [0] * n
    sign[0] = 1
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and a[i][j] < 0 and sign[j] == 0:
                sign[j] = -sign[i]
                queue.append(j)
    return tuple(sign)


@dataclass(frozen=True, eq=False)
class RootCatalog:
    """The indexed set of almost positive roots of an irreducible root system.

    ``roots[k]`` for ``k < n`` is ``-alpha_{k+1}``; the positive roots follow
    sorted by height then lexicographically.  ``sign[i]`` is +1 or -1.
    """

    cartan_type: CartanType
    cartan: tuple
    roots: tuple
    coroots: tuple
    sign: tuple
    coxeter_number: int
    symmetrizer: tuple
    minus_w0: tuple = ()
    index: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_positive(self) -> int:
        return len(self.roots) - self.rank

    def __len__(self):
        return len(self.roots)

    def lookup(self, v):
        """Catalog index of vector ``v``, or None."""
        return self.index.get(tuple(v))

    def negative_simple(self, i: int) -> int:
        return i

    def is_negative_simple(self, k: int) -> bool:
        return k < self.rank

    def simple(self, i: int) -> int:
        return self.index[tuple(1 if k == i else 0 for k in range(self.rank))]

    def I_plus(self):
        return [i for i, s in enumerate(self.sign) if s > 0]

    def I_minus(self):
        return [i for i, s in enumerate(self.sign) if s < 0]

    def label(self, k: int) -> str:
        return format_root(self.roots[k])

    def convention(self) -> dict:
        return {
            "cartan": "a_ij = <alpha_i^vee, alpha_j>",
            "numbering": "Bourbaki (1-based); type D branch node n-bar -> n",
            "bipartition": "epsilon = + at even graph distance from vertex 1",
            "I_plus": [i + 1 for i in self.I_plus()],
            "I_minus": [i + 1 for i in self.I_minus()],
            "ordering": "negative simple roots first, then positive roots "
                        "by height then lexicographic",
        }


def format_root(v) -> str:
    """``[b1, ..., bn]`` notation."""
    return "[" + ", ".join(str(c) for c in v) + "]"


def build_root_system(t) -> RootCatalog:
    """Build (and cache) the catalog of almost positive roots for type ``t``."""
    return _build(parse_cartan_type(t))


@lru_cache(maxsize=None)
def _build(t: CartanType) -> RootCatalog:
    a = cartan_matrix(t)
    n = len(a)
    positive = _positive_roots(a)
    negatives = [tuple(-1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = tuple(negatives + positive)
    d = _symmetrizer(a)

    def norm2(v):
        return sum(v[i] * v[j] * d[i] * a[i][j] for i in range(n) for j in range(n))

    coroots = []
    for v in roots:
        q = norm2(v)
        cv = tuple(2 * v[i] * d[i] / q for i in range(n))
        assert all(c.denominator == 1 for c in cv), (t, v, cv)
        coroots.append(tuple(int(c) for c in cv))

    if 2 * len(positive) % n:
        raise AssertionError(f"{t}: 2|Phi+| not divisible by n")
    h = 2 * len(positive) // n
    cat = RootCatalog(
        cartan_type=t,
        cartan=a,
        roots=roots,
        coroots=tuple(coroots),
        sign=_graph_bipartition(a),
        coxeter_number=h,
        symmetrizer=d,
        index={v: k for k, v in enumerate(roots)},
    )
    # -w0 is read off from the tau periodicity; imported late to avoid a cycle
    from .tau import minus_w0_permutation
    object.__setattr__(cat, "minus_w0", minus_w0_permutation(cat))
    return cat


def bipartition(catalog: RootCatalog):
    """Return ``(I_plus, I_minus)`` as sorted 1-based label lists."""
    return ([i + 1 for i in catalog.I_plus()], [i + 1 for i in catalog.I_minus()])


def coxeter_number(catalog: RootCatalog) -> int:
    return catalog.coxeter_number


def minus_w0(catalog: RootCatalog) -> tuple:
    """The diagram involution ``-w0`` as a 0-based permutation tuple."""
    return catalog.minus_w0
