"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored constant term first.  Instances are immutable and
always canonical (no trailing zero coefficients), so ``==`` is exact
polynomial equality.
"""

from __future__ import annotations

import json
from math import comb
from typing import Iterable, Sequence

NEG_INF = float("-inf")


def _normalize(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class IntPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self._c = _normalize(list(coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        """``c * x**k``."""
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    # -- accessors ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def degree(self) -> int | float:
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self._c) - 1 if self._c else NEG_INF

    def coefficient_of(self, degree: int) -> int:
        if 0 <= degree < len(self._c):
            return self._c[degree]
        return 0

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPolynomial(res)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._c)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPolynomial()
        res = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    res[i + j] += ca * cb
        return IntPolynomial(res)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial(k * c for c in self._c)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if not self._c:
            return self
        return IntPolynomial([0] * k + list(self._c))

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, t: int) -> int:
        return self.eval(t)

    def eval(self, t: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == _normalize([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)!r})"

    def __str__(self) -> str:
        return render(self)

    # -- serialisation ------------------------------------------------

    def to_json_coeffs(self) -> list[str]:
        return [str(c) for c in self._c]

    @classmethod
    def from_json_coeffs(cls, items: Sequence[str | int]) -> IntPolynomial:
        return cls(int(s) for s in items)


def shift_mul_x_pow(p: IntPolynomial, k: int) -> IntPolynomial:
    return p.shift(k)


def pow_x_minus_one(k: int) -> IntPolynomial:
    """``(x - 1)**k`` expanded by the binomial theorem."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return IntPolynomial((-1) ** (k - j) * comb(k, j) for j in range(k + 1))


def eval_at_integer(p: IntPolynomial, t: int) -> int:
    return p.eval(t)


def first_difference(a: IntPolynomial, b: IntPolynomial) -> int | None:
    """Lowest degree where the coefficients of ``a`` and ``b`` differ."""
    n = max(len(a.coeffs), len(b.coeffs))
    for i in range(n):
        if a.coefficient_of(i) != b.coefficient_of(i):
            return i
    return None


def _term(c: int, k: int) -> str:
    mag = abs(c)
    if k == 0:
        return str(mag)
    head = "" if mag == 1 else str(mag)
    return head + ("x" if k == 1 else f"x^{k}")


def render(p: IntPolynomial) -> str:
    """Human form, highest degree first, e.g. ``x^3 - 2x^2 - x + 2``."""
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        t = _term(c, k)
        if not parts:
            parts.append(("-" if c < 0 else "") + t)
        else:
            parts.append(("- " if c < 0 else "+ ") + t)
    return " ".join(parts) if parts else "0"


def dumps(p: IntPolynomial, **extra) -> str:
    return json.dumps({**extra, "coeffs": p.to_json_coeffs()})
