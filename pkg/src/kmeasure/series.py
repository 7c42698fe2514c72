"""Exact integer power series in q, truncated at a fixed degree."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeriesPoly:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        """Truncation degree N (coefficients run over q^0 .. q^N)."""
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, degree: int) -> SeriesPoly:
        return cls.monomial(0, degree)

    @classmethod
    def monomial(cls, exponent: int, degree: int, coeff: int = 1) -> SeriesPoly:
        if degree < 0:
            raise ValueError("truncation degree must be >= 0")
        c = [0] * (degree + 1)
        if exponent <= degree:
            c[exponent] = coeff
        return cls(tuple(c))

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n] if 0 <= n <= self.degree else 0

    def _check(self, other: SeriesPoly) -> None:
        if other.degree != self.degree:
            raise ValueError(f"truncation mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: SeriesPoly) -> SeriesPoly:
        self._check(other)
        return SeriesPoly(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: SeriesPoly) -> SeriesPoly:
        self._check(other)
        N = self.degree
        a, b = self.coefficients, other.coefficients
        out = [0] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return SeriesPoly(tuple(out))

    def __pow__(self, e: int) -> SeriesPoly:
        result = SeriesPoly.one(self.degree)
        for _ in range(e):
            result = result * self
        return result

    def reciprocal(self) -> SeriesPoly:
        """Exact inverse; needs constant term +-1 so the result stays integral."""
        a = self.coefficients
        if a[0] not in (1, -1):
            raise ValueError("constant term must be +-1 for an integral reciprocal")
        N = self.degree
        inv = [0] * (N + 1)
        inv[0] = a[0]
        for n in range(1, N + 1):
            s = sum(a[i] * inv[n - i] for i in range(1, n + 1))
            inv[n] = -s * a[0]
        return SeriesPoly(tuple(inv))


def binomial(exponent: int, sign: int, degree: int) -> SeriesPoly:
    """``1 + sign * q^exponent``, truncated."""
    c = [0] * (degree + 1)
    c[0] = 1
    if exponent <= degree:
        c[exponent] += sign
    return SeriesPoly(tuple(c))


def q_pochhammer(m: int, degree: int) -> SeriesPoly:
    """``(q; q)_m = prod_{i=1..m} (1 - q^i)``."""
    result = SeriesPoly.one(degree)
    for i in range(1, m + 1):
        result = result * binomial(i, -1, degree)
    return result
