"""Exact characteristic polynomials of integer matrices.

Two unrelated algorithms are provided so the baseline itself can be
cross-checked:

* Faddeev-LeVerrier over the integers (every division by the step index
  is exact for an integer matrix);
* evaluation of ``det(tI - M)`` at ``t = 0..p`` by fraction-free Bareiss
  elimination, followed by exact interpolation.

Above ``MODULAR_THRESHOLD`` rows the same Faddeev-LeVerrier recurrence runs
modulo several primes instead (see ``modular``); the result is still exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graph import Pseudograph
from .modular import charpoly_faddeev_leverrier_modular
from .polynomial import IntPolynomial

Matrix = list[list[int]]

MODULAR_THRESHOLD = 48


class OracleMismatch(AssertionError):
    pass


def adjacency_matrix(g: Pseudograph) -> Matrix:
    """0/1 adjacency matrix with a 1 on the diagonal of every looped vertex."""
    n = g.order
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    for v in g.loops:
        a[v][v] = 1
    return a


def _check_square(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    return n


def charpoly_faddeev_leverrier(m: Sequence[Sequence[int]]) -> IntPolynomial:
    n = _check_square(m)
    a = [list(map(int, row)) for row in m]
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [
            [sum(a[i][t] * mk[t][j] for t in range(n) if a[i][t]) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        mk = prod
        tr = sum(a[i][t] * mk[t][i] for i in range(n) for t in range(n) if a[i][t])
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c[n - k] = q
    return IntPolynomial(c)


def determinant_exact(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination with row pivoting."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _interpolate(xs: list[int], ys: list[int]) -> IntPolynomial:
    # Newton divided differences, then expand to monomial form.
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    poly[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for d in range(deg + 1):
            new[d + 1] += poly[d]
            new[d] -= xs[i] * poly[d]
        new[0] += coef[i]
        poly = new
        deg += 1
    out = []
    for f in poly:
        if f.denominator != 1:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(f.numerator)
    return IntPolynomial(out)


def charpoly_interpolated(m: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(tI - M)`` sampled at ``t = 0..p`` and interpolated exactly."""
    n = _check_square(m)
    ts = list(range(n + 1))
    vals = []
    for t in ts:
        shifted = [
            [(t if i == j else 0) - int(m[i][j]) for j in range(n)] for i in range(n)
        ]
        vals.append(determinant_exact(shifted))
    return _interpolate(ts, vals)


def charpoly_exact(m: Sequence[Sequence[int]], self_check: bool = False) -> IntPolynomial:
    """``det(xI - M)``; with ``self_check`` both algorithms must agree."""
    if len(m) > MODULAR_THRESHOLD:
        p = charpoly_faddeev_leverrier_modular(m)
    else:
        p = charpoly_faddeev_leverrier(m)
    if self_check:
        q = charpoly_interpolated(m)
        if p != q:
            raise OracleMismatch(f"Faddeev-LeVerrier {p} != interpolation {q}")
    return p


def charpoly_oracle(g: Pseudograph, self_check: bool = False) -> IntPolynomial:
    return charpoly_exact(adjacency_matrix(g), self_check=self_check)


def determinant_oracle(g: Pseudograph) -> int:
    return determinant_exact(adjacency_matrix(g))
