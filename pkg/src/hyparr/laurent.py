"""Sparse multivariate Laurent polynomials with integer coefficients.

Terms are stored as a sorted tuple of (exponent-vector, coefficient) pairs
with no zero coefficients, so equality and hashing are structural.  These
polynomials model elements of the group ring of a finitely generated
abelian-ized group: commutative on the nose.  Group rings of direct products
with free non-abelian factors reuse this representation under the discipline
that no stored monomial ever mixes two generators of the same free factor;
that discipline is enforced where products are formed (see chain_complex).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .gaussian import ONE as G_ONE, GaussianRational

Monomial = tuple[int, ...]


def _canon(terms: Mapping[Monomial, int]) -> tuple[tuple[Monomial, int], ...]:
    return tuple(sorted((e, c) for e, c in terms.items() if c != 0))


@dataclass(frozen=True)
class LaurentPoly:
    variables: tuple[str, ...]
    terms: tuple[tuple[Monomial, int], ...] = ()

    @staticmethod
    def make(variables: Sequence[str], terms: Mapping[Monomial, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(variables), _canon(terms))

    @staticmethod
    def zero(variables: Sequence[str]) -> "LaurentPoly":
        return LaurentPoly(tuple(variables), ())

    @staticmethod
    def constant(variables: Sequence[str], c: int) -> "LaurentPoly":
        n = len(variables)
        return LaurentPoly.make(variables, {(0,) * n: c})

    @staticmethod
    def monomial(variables: Sequence[str], exps: Sequence[int], c: int = 1) -> "LaurentPoly":
        return LaurentPoly.make(variables, {tuple(exps): c})

    @staticmethod
    def generator_loop(variables: Sequence[str], index: int) -> "LaurentPoly":
        """The augmentation-ideal binomial x_index^{-1} - 1."""
        n = len(variables)
        e = [0] * n
        e[index] = -1
        return LaurentPoly.make(variables, {tuple(e): 1, (0,) * n: -1})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "LaurentPoly") -> None:
        if self.variables != other.variables:
            raise ValueError("mixed variable sets")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(self.variables, _canon(acc))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc: dict[Monomial, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, _canon(acc))

    def scaled(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(self.variables, ())
        return LaurentPoly(self.variables, tuple((e, c * k) for e, k in self.terms))

    def augmentation(self) -> int:
        """Image under every generator -> 1."""
        return sum(c for _, c in self.terms)

    def is_eps_minimal(self) -> bool:
        return self.augmentation() == 0

    def support_variables(self) -> tuple[int, ...]:
        seen = set()
        for e, _ in self.terms:
            for i, k in enumerate(e):
                if k:
                    seen.add(i)
        return tuple(sorted(seen))

    def evaluate(self, point: Sequence[GaussianRational]) -> GaussianRational:
        if len(point) != len(self.variables):
            raise ValueError("point dimension mismatch")
        total = GaussianRational()
        for e, c in self.terms:
            val = G_ONE
            for t, k in zip(point, e):
                if k:
                    val = val * (t ** k)
            total = total + val.scaled(c)
        return total

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        total = 0j
        for e, c in self.terms:
            val = 1 + 0j
            for t, k in zip(point, e):
                if k:
                    val *= t ** k
            total += c * val
        return total

    def substituted(self, phi: Sequence[Sequence[int]]) -> "LaurentPoly":
        """Monomial substitution x_i -> prod_j x_j^(phi[i][j])."""
        n = len(self.variables)
        if len(phi) != n or any(len(r) != n for r in phi):
            raise ValueError("substitution matrix has wrong shape")
        acc: dict[Monomial, int] = {}
        for e, c in self.terms:
            new = [0] * n
            for i, k in enumerate(e):
                if k:
                    row = phi[i]
                    for j in range(n):
                        new[j] += k * row[j]
            key = tuple(new)
            acc[key] = acc.get(key, 0) + c
        return LaurentPoly(self.variables, _canon(acc))

    def inverted(self) -> "LaurentPoly":
        """The involution sending every generator to its inverse."""
        return LaurentPoly(
            self.variables,
            _canon({tuple(-k for k in e): c for e, c in self.terms}),
        )

    def unit_normalized(self) -> "LaurentPoly":
        """Canonical representative modulo units +-x^v (for minor dedup)."""
        if not self.terms:
            return self
        n = len(self.variables)
        shift = tuple(min(e[i] for e, _ in self.terms) for i in range(n))
        terms = _canon(
            {tuple(k - s for k, s in zip(e, shift)): c for e, c in self.terms}
        )
        if terms[-1][1] < 0:
            terms = tuple((e, -c) for e, c in terms)
        return LaurentPoly(self.variables, terms)

    def shifted_truncated(self, bound: int) -> dict[Monomial, int]:
        """Expand under x_i = 1 + s_i, keeping total s-degree < bound."""
        n = len(self.variables)
        acc: dict[Monomial, int] = {}
        for e, c in self.terms:
            cur: dict[Monomial, int] = {(0,) * n: c}
            for i, k in enumerate(e):
                if k == 0:
                    continue
                series = _one_plus_power(i, k, n, bound)
                nxt: dict[Monomial, int] = {}
                for m1, c1 in cur.items():
                    d1 = sum(m1)
                    for m2, c2 in series.items():
                        if d1 + sum(m2) >= bound:
                            continue
                        m = tuple(a + b for a, b in zip(m1, m2))
                        nxt[m] = nxt.get(m, 0) + c1 * c2
                cur = nxt
            for m, v in cur.items():
                acc[m] = acc.get(m, 0) + v
        return {m: v for m, v in acc.items() if v}

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coeff": c} for e, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = []
            for name, k in zip(self.variables, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out


def _one_plus_power(index: int, power: int, nvars: int, bound: int) -> dict[Monomial, int]:
    """(1 + s_index)^power truncated below total degree `bound`."""
    out: dict[Monomial, int] = {}
    if power >= 0:
        top = min(power, bound - 1)
        for k in range(top + 1):
            e = [0] * nvars
            e[index] = k
            out[tuple(e)] = comb(power, k)
    else:
        m = -power
        for k in range(bound):
            e = [0] * nvars
            e[index] = k
            out[tuple(e)] = (-1) ** k * comb(m + k - 1, k)
    return out


def poly_matmul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]],
                mul=None) -> list[list[LaurentPoly]]:
    """Matrix product with an overridable entry multiplication."""
    if not a or not b:
        return []
    mul = mul or (lambda p, q: p * q)
    rows, inner, cols = len(a), len(b), len(b[0])
    if any(len(r) != inner for r in a):
        raise ValueError("matrix shape mismatch")
    variables = a[0][0].variables
    out = []
    for i in range(rows):
        row = []
        for k in range(cols):
            acc = LaurentPoly.zero(variables)
            for j in range(inner):
                if a[i][j].is_zero() or b[j][k].is_zero():
                    continue
                acc = acc + mul(a[i][j], b[j][k])
            row.append(acc)
        out.append(row)
    return out
