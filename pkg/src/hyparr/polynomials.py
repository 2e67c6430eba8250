"""Univariate polynomials with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """coeffs[k] is the coefficient of T^k; no trailing zeros are stored.

    The zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("non-canonical coefficient vector (trailing zero)")

    @staticmethod
    def of(coeffs: Iterable[int]) -> "IntPolynomial":
        return IntPolynomial(_strip(coeffs))

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def product_one_plus(ds: Sequence[int]) -> "IntPolynomial":
        """The product of the linear factors (1 + d*T) for d in ds."""
        poly = IntPolynomial.one()
        for d in ds:
            poly = poly * IntPolynomial.of((1, d))
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(self[k] - other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.of(out)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def agreement_degree(self, other: "IntPolynomial") -> int | None:
        """Largest k such that the two polynomials agree in all degrees <= k.

        Returns None when they are identical, -1 when they already differ in
        degree 0.
        """
        if self == other:
            return None
        n = max(len(self.coeffs), len(other.coeffs))
        for k in range(n):
            if self[k] != other[k]:
                return k - 1
        return None  # unreachable: equality handled above

    def dominates(self, other: "IntPolynomial") -> bool:
        """Coefficientwise self >= other."""
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self[k] >= other[k] for k in range(n))
