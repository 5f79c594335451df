"""Exact integer/rational linear algebra on small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def det(m) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve(m, b) -> list:
    """Solve ``m x = b`` exactly; ``m`` integer or rational, ``b`` rational.

    Raises ``ZeroDivisionError`` if ``m`` is singular.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        if p != k:
            a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        rk = a[k]
        for r in range(n):
            if r != k and a[r][k] != 0:
                f = a[r][k] / piv
                row = a[r]
                for c in range(k, n + 1):
                    row[c] -= f * rk[c]
    return [a[k][n] / a[k][k] for k in range(n)]


def solve_unimodular(m, b) -> list:
    """Solve ``m x = b`` for a nonsingular integer matrix and rational ``b``.

    Clears denominators and runs fraction-free Gauss-Jordan over the integers,
    which is far faster than Fraction elimination for the many small cluster
    systems (all unimodular, so the final quotients are cheap).
    """
    b = [Fraction(y) for y in b]
    L = lcm(*(y.denominator for y in b)) if b else 1
    bi = [int(y * L) for y in b]
    n = len(m)
    a = [list(row) + [y] for row, y in zip(m, bi)]
    # fraction-free Gauss-Jordan: each division by the previous pivot is exact
    prev = 1
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        if p != k:
            a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        rk = a[k]
        for r in range(n):
            if r != k:
                f = a[r][k]
                row = a[r]
                for c in range(n + 1):
                    row[c] = (row[c] * piv - f * rk[c]) // prev
        prev = piv
    return [Fraction(a[k][n], a[k][k] * L) for k in range(n)]


def inverse(m) -> list:
    n = len(m)
    cols = [solve(m, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def transpose(m) -> list:
    return [list(r) for r in zip(*m)]
