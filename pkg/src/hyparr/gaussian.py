"""Exact Gaussian rationals: numbers a + b*i with a, b rational.

These are the evaluation points for variety-membership tests on the complex
torus.  All arithmetic is exact; the zero test is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scaled(self, c) -> "GaussianRational":
        c = Fraction(c)
        return GaussianRational(self.re * c, self.im * c)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        return self * other.inverse()

    def __pow__(self, e: int) -> "GaussianRational":
        if e < 0:
            return self.inverse() ** (-e)
        acc = ONE
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1), Fraction(0))


def parse_gaussian(text: str) -> GaussianRational:
    """Parse 'a/b', 'a/b+c/di', '-i', '2-3i' into an exact value."""
    s = text.strip().replace(" ", "")
    if not s:
        raise InputError("empty coordinate")
    try:
        if not s.endswith("i"):
            return GaussianRational(Fraction(s), Fraction(0))
        body = s[:-1]
        # split real and imaginary at the last sign that is not leading and
        # not a fraction slash context (rationals contain only digits and /)
        split = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-":
                split = k
                break
        if split == -1:
            re_part, im_part = "", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_part)
        re = Fraction(re_part) if re_part else Fraction(0)
        return GaussianRational(re, im)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse coordinate {text!r}: {exc}") from exc
