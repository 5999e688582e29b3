"""Unitary addition Cayley graphs and their anti-circulant companions.

Vertex ``t`` is the ring element ``t`` of Z_n throughout.  ``G_n`` joins
``i != j`` when ``i + j`` is a unit mod n.  The anti-circulant matrix with
first row ``a_j = [gcd(j, n) == 1]`` has the same off-diagonal pattern and
a 1 on the diagonal at ``t`` exactly when ``gcd(2t, n) == 1``; its graph
``X(A_n)`` is therefore ``G_n`` plus loops (none when n is even).

The eigenvalue sums ``lambda_r`` over the units are Ramanujan sums and
are evaluated exactly with the Mobius/totient closed form.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .graph import Pseudograph
from .modular import charpoly_hessenberg
from .oracle import adjacency_matrix, charpoly_oracle
from .polynomial import IntPolynomial
from .sachs import charpoly_sachs


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def units(n: int) -> list[int]:
    _check_n(n)
    return [j for j in range(n) if gcd(j, n) == 1]


def totient(n: int) -> int:
    _check_n(n)
    result = n
    for prime in factorize(n):
        result -= result // prime
    return result


def mobius(n: int) -> int:
    _check_n(n)
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def build_unitary_cayley(n: int) -> Pseudograph:
    _check_n(n)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if gcd((i + j) % n, n) == 1
    ]
    return Pseudograph.from_lists(n, edges)


def anticirculant_first_row(n: int) -> list[int]:
    _check_n(n)
    return [1 if gcd(j, n) == 1 else 0 for j in range(n)]


def anticirculant_matrix(first_row: list[int]) -> list[list[int]]:
    n = len(first_row)
    return [[first_row[(i + j) % n] for j in range(n)] for i in range(n)]


def build_anticirculant_graph(n: int) -> Pseudograph:
    g = build_unitary_cayley(n)
    return g.with_loops(t for t in range(n) if gcd(2 * t % n, n) == 1)


def lambda_r(n: int, r: int) -> int:
    """Exact value of the sum of ``w**(r j)`` over units ``j`` (w = e^{2 pi i/n})."""
    _check_n(n)
    if not 0 <= r <= n // 2:
        raise ValueError(f"r must lie in 0..{n // 2}")
    g = gcd(r, n)
    q = n // g
    return mobius(q) * totient(n) // totient(q)


def lambda_r_numeric(n: int, r: int) -> complex:
    """The defining root-of-unity sum, in floating point."""
    _check_n(n)
    return sum(cmath.exp(2j * cmath.pi * r * j / n) for j in units(n))


@dataclass(frozen=True)
class CayleyEigenReport:
    n: int
    lambda_0: int
    lambda_half: int | None
    abs_lambdas: tuple[int, ...] = field(default=())

    def eigenvalues(self) -> list[int]:
        """Spectrum of the anti-circulant matrix, ascending, with multiplicity."""
        vals = [self.lambda_0]
        if self.lambda_half is not None:
            vals.append(self.lambda_half)
        for a in self.abs_lambdas:
            vals += [a, -a]
        return sorted(vals)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda_0": self.lambda_0,
            "lambda_half": self.lambda_half,
            "abs_lambda_r": list(self.abs_lambdas),
        }


def spectrum_report(n: int) -> CayleyEigenReport:
    _check_n(n)
    half = lambda_r(n, n // 2) if n % 2 == 0 else None
    return CayleyEigenReport(
        n=n,
        lambda_0=lambda_r(n, 0),
        lambda_half=half,
        abs_lambdas=tuple(abs(lambda_r(n, r)) for r in range(1, (n - 1) // 2 + 1)),
    )


def _quadratic_product(n: int) -> IntPolynomial:
    out = IntPolynomial.one()
    for r in range(1, (n - 1) // 2 + 1):
        out = out * IntPolynomial((-lambda_r(n, r) ** 2, 0, 1))
    return out


def charpoly_anticirculant(n: int) -> IntPolynomial:
    _check_n(n)
    phi_n = totient(n)
    if n % 2 == 0:
        head = IntPolynomial((-phi_n * phi_n, 0, 1))
    else:
        head = IntPolynomial((-phi_n, 1))
    return head * _quadratic_product(n)


def charpoly_cayley_even(n: int) -> IntPolynomial:
    _check_n(n)
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    return charpoly_anticirculant(n)


_LEAVES = {
    "sachs": charpoly_sachs,
    "oracle": charpoly_oracle,
    "hessenberg": lambda g: charpoly_hessenberg(adjacency_matrix(g)),
}


@lru_cache(maxsize=64)
def charpoly_cayley_odd(n: int, leaf: str = "sachs") -> IntPolynomial:
    """Anti-circulant product plus one correction per unit, units in increasing order.

    Each correction is the polynomial of ``X(A_n)`` with the loops at all
    smaller units removed and the current unit deleted.
    """
    _check_n(n)
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    try:
        phi = _LEAVES[leaf]
    except KeyError:
        raise ValueError(f"unknown leaf method {leaf!r}") from None
    x_an = build_anticirculant_graph(n)
    us = units(n)
    total = charpoly_anticirculant(n)
    for idx, i in enumerate(us):
        total = total + phi(x_an.delete_loops(us[:idx]).delete_vertices([i]))
    return total


def charpoly_cayley(n: int, leaf: str = "sachs") -> IntPolynomial:
    return charpoly_cayley_even(n) if n % 2 == 0 else charpoly_cayley_odd(n, leaf)
