"""Power series truncated at a caller-supplied order."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})``."""

    order: int
    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("negative truncation order")
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        return cls(order, tuple(c))

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += x * b[j]
        return TruncatedSeries(n, tuple(out))

    def inverse(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / a[0]
        for k in range(1, self.order + 1):
            s = sum(a[j] * inv[k - j] for j in range(1, k + 1) if a[j])
            inv[k] = -s * inv[0]
        return TruncatedSeries(self.order, tuple(inv))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()
