"""Multi-modular exact characteristic polynomials for larger matrices.

Each routine works modulo a run of word-sized primes with numpy int64
arithmetic and lifts the residues back to integers by CRT.  The prime
count comes from a Hadamard-style bound on the coefficients, so the
lifted result is exact, not probabilistic.
"""

from __future__ import annotations

from math import comb, isqrt, log2
from typing import Callable, Iterator, Sequence

import numpy as np

from .polynomial import IntPolynomial

ModularKernel = Callable[[np.ndarray, int], np.ndarray]


def coefficient_bound_bits(n: int, max_abs_entry: int = 1) -> int:
    """Bits needed for ``2 * max_k |c_k|`` of an ``n x n`` charpoly.

    ``|c_k|`` is bounded by the sum of ``k x k`` principal minors, each of
    which is at most ``(a * sqrt(k))^k`` by Hadamard's inequality.
    """
    a = max(1, max_abs_entry)
    best = 0.0
    for k in range(n + 1):
        b = log2(comb(n, k)) + k * (log2(a) + 0.5 * log2(k) if k else 0.0)
        best = max(best, b)
    return int(best) + 3


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


def prime_bits_for(n: int) -> int:
    """Largest prime width keeping ``n`` products of residues inside int64."""
    return max(8, min(30, (62 - max(1, n).bit_length()) // 2))


def primes_descending(bits: int, above: int = 1) -> Iterator[int]:
    q = (1 << bits) - 1
    while q > above:
        if _is_prime(q):
            yield q
        q -= 2


def _lift(residues: list[np.ndarray], primes: list[int]) -> list[int]:
    """Symmetric CRT reconstruction, coefficient by coefficient."""
    modulus = 1
    values = [0] * len(residues[0])
    for r, q in zip(residues, primes):
        inv = pow(modulus % q, -1, q)
        for i, ri in enumerate(r.tolist()):
            t = ((ri - values[i]) * inv) % q
            values[i] += modulus * t
        modulus *= q
    half = modulus // 2
    return [v - modulus if v > half else v for v in values]


def multimodular_charpoly(m: Sequence[Sequence[int]], kernel: ModularKernel) -> IntPolynomial:
    a = np.array(m, dtype=np.int64).reshape(len(m), len(m))
    n = a.shape[0]
    if n == 0:
        return IntPolynomial.one()
    need = coefficient_bound_bits(n, int(np.abs(a).max(initial=0)))
    residues: list[np.ndarray] = []
    primes: list[int] = []
    have = 0
    for q in primes_descending(prime_bits_for(n), above=n):
        residues.append(kernel(a % q, q))
        primes.append(q)
        have += q.bit_length() - 1
        if have >= need:
            break
    else:  # pragma: no cover - only for absurd n
        raise ArithmeticError("ran out of primes for CRT")
    return IntPolynomial(_lift(residues, primes))


def faddeev_leverrier_mod(a: np.ndarray, q: int) -> np.ndarray:
    """Faddeev-LeVerrier modulo a prime ``q > n``; constant term first."""
    n = a.shape[0]
    c = np.zeros(n + 1, dtype=np.int64)
    c[n] = 1
    mk = np.zeros_like(a)
    eye = np.arange(n)
    for k in range(1, n + 1):
        mk = (a @ mk) % q
        mk[eye, eye] = (mk[eye, eye] + c[n - k + 1]) % q
        tr = int(((a * mk.T) % q).sum() % q)
        c[n - k] = (-tr * pow(k, -1, q)) % q
    return c


def hessenberg_mod(a: np.ndarray, q: int) -> np.ndarray:
    """Charpoly mod ``q`` via similarity to upper Hessenberg form."""
    h = a.copy()
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], :] = h[[j + 1, piv], :]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        inv = pow(int(h[j + 1, j]), -1, q)
        u = (h[j + 2 :, j] * inv) % q
        if not u.any():
            continue
        # rows r -= u_r * row_{j+1}; then column j+1 += sum_r u_r * col_r
        h[j + 2 :, :] = (h[j + 2 :, :] - np.outer(u, h[j + 1, :]) % q) % q
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2 :] @ u) % q) % q
    # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<j<=k} h_{j,j-1}) p_{i-1}
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - h[k - 1, k - 1] * prev) % q
        if k > 1:
            weights = np.zeros(k - 1, dtype=np.int64)
            t = 1
            for i in range(k - 1, 0, -1):
                t = t * int(h[i, i - 1]) % q
                weights[i - 1] = t * int(h[i - 1, k - 1]) % q
            cur = (cur - (weights @ polys[: k - 1]) % q) % q
        polys[k] = cur
    return polys[n]


def charpoly_faddeev_leverrier_modular(m: Sequence[Sequence[int]]) -> IntPolynomial:
    return multimodular_charpoly(m, faddeev_leverrier_mod)


def charpoly_hessenberg(m: Sequence[Sequence[int]]) -> IntPolynomial:
    return multimodular_charpoly(m, hessenberg_mod)
