"""Truncated power series in q with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from walg.errors import DimensionMismatch, NonUnitConstantTerm


class QSeries:
    """``sum_{d=0}^{N} c_d q^d`` modulo ``q^{N+1}``.

    Coefficients may be ints, Fractions or RatFuncs; arithmetic never looks
    past the truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> "QSeries":
        if exponent < 0:
            raise ValueError("negative exponent")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    @classmethod
    def from_exponents(cls, terms: Iterable[tuple[int, object]], order: int) -> "QSeries":
        """Sum of ``coeff * q**exp`` over ``(exp, coeff)`` pairs."""
        c = [0] * (order + 1)
        for e, a in terms:
            if e < 0:
                raise ValueError("negative exponent")
            if e <= order:
                c[e] += a
        return cls(c, order)

    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise TypeError("QSeries arithmetic needs two QSeries")
        if other.order != self.order:
            raise DimensionMismatch(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "QSeries":
        return QSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return QSeries(out, n)

    __rmul__ = __mul__

    def inv(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitConstantTerm("series with zero constant term is not invertible")
        n = self.order
        out = [0] * (n + 1)
        unit = c0 == 1
        if unit:
            out[0] = 1
        else:
            out[0] = Fraction(1, c0) if isinstance(c0, int) else 1 / c0
        for d in range(1, n + 1):
            s = 0
            for k in range(1, d + 1):
                a = self.coeffs[k]
                if a != 0:
                    s += a * out[d - k]
            out[d] = -s if unit else -s * out[0]
        return QSeries(out, n)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inv() ** (-k)
        out = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise DimensionMismatch("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __getitem__(self, d: int):
        return self.coeffs[d]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)}, order={self.order})"


@lru_cache(maxsize=None)
def _euler_coeffs(r: int, order: int) -> tuple:
    # prod_{n>0} (1-q^n)^{-r}: multiply by 1/(1-q^n) r times per n, in place
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        for _ in range(r):
            for d in range(n, order + 1):
                c[d] += c[d - n]
    return tuple(c)


def euler_product(r: int, order: int) -> QSeries:
    """``prod_{n>0} (1 - q^n)^{-r}``; coefficient d counts r-colored partitions of d."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return QSeries(_euler_coeffs(r, order), order)


def alternating_sum(exponents_signs: Sequence[tuple[int, int]], order: int) -> QSeries:
    """``sum sign * q**exp`` for integer exponents >= 0."""
    return QSeries.from_exponents(exponents_signs, order)
