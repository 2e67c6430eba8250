"""Fitting ideals and jumping loci of presented modules over Laurent rings.

For a module with b generators, the k-th ideal is generated by the minors of
size b - k + 1 of the presentation matrix; the locus where all of them vanish
on the complex torus is exactly the locus where the cokernel of the evaluated
matrix has dimension at least k.  Both routes are implemented independently
(symbolic minors against exact Gaussian elimination at a point) and tested
against each other.

Varieties are represented by generator lists plus exact membership tests at
Gaussian-rational points; no primary decomposition or dimension machinery.
A floating evaluation mode with a 1e-9 pivot tolerance exists for
exploration only and is excluded from all verification.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Sequence

from .chain_complex import MinimalChainComplex, PresentationMatrix, skeleton_presentation
from .errors import InputError, MinorCapExceeded
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .linalg import is_unimodular, rank_field, rank_int, rank_numeric

DEFAULT_MINOR_CAP = 200_000


@dataclass(frozen=True)
class FittingIdeal:
    k: int
    n_generators: int
    generators: tuple[LaurentPoly, ...]  # deduped up to sign and monomial units

    def is_zero_ideal(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class HilbertFunction:
    """values[k] = dimension of the degree-k piece of the associated graded module."""

    values: tuple[int, ...]

    @property
    def positive_at_bound(self) -> bool:
        """Nonzero top computed value: the filtration shows no sign of stopping.

        A module whose associated graded vanishes in large degrees is
        nilpotent for the augmentation filtration; a positive value at the
        computed bound is surfaced as a non-nilpotency indicator.
        """
        return bool(self.values) and self.values[-1] > 0


def abelianized_matrix(P: PresentationMatrix) -> tuple[PresentationMatrix, str]:
    """Scalars extended along the abelianization map.

    Entries are already commutative Laurent polynomials here, so the matrix
    is returned unchanged together with a provenance note naming the map.
    """
    note = "group ring -> Z[" + ", ".join(
        f"{v}^(+-1)" for v in P.variables
    ) + "] via abelianization"
    return P, note


def _check_point(P_vars: tuple[str, ...], t: Sequence[GaussianRational]) -> None:
    if len(t) != len(P_vars):
        raise InputError(f"point has {len(t)} coordinates, need {len(P_vars)}")
    if any(not coord for coord in t):
        raise InputError("torus points must have all coordinates nonzero")


def fitting_ideal(P: PresentationMatrix, k: int,
                  cap: int = DEFAULT_MINOR_CAP) -> FittingIdeal:
    """All minors of size b - k + 1, unit-normalized and deduplicated.

    When the minor size exceeds the relation count there are no minors and
    the ideal is zero.
    """
    b = P.n_generators
    r = P.n_relations
    if not 1 <= k <= b:
        raise InputError(f"need 1 <= k <= {b}")
    size = b - k + 1
    if size > r or size > b:
        return FittingIdeal(k, b, ())
    count = math.comb(b, size) * math.comb(r, size)
    if count > cap:
        raise MinorCapExceeded(
            f"{count} minors of size {size} exceed the cap {cap}"
        )
    zero = LaurentPoly.zero(P.variables)

    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}

    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        if len(rows) == 1:
            return P.entries[rows[0]][cols[0]]
        key = (rows, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = zero
        rest_cols = cols[1:]
        for i, row in enumerate(rows):
            entry = P.entries[row][cols[0]]
            if entry.is_zero():
                continue
            sub = minor(rows[:i] + rows[i + 1:], rest_cols)
            if sub.is_zero():
                continue
            term = entry * sub
            acc = acc + (term if i % 2 == 0 else -term)
        memo[key] = acc
        return acc

    seen: set[LaurentPoly] = set()
    for rows in itertools.combinations(range(b), size):
        for cols in itertools.combinations(range(r), size):
            m = minor(rows, cols)
            if not m.is_zero():
                seen.add(m.unit_normalized())
    return FittingIdeal(k, b, tuple(sorted(seen, key=lambda p: p.terms)))


def variety_membership(F: FittingIdeal, t: Sequence[GaussianRational]) -> bool:
    """Exact test: every generator vanishes at the torus point."""
    if any(not coord for coord in t):
        raise InputError("torus points must have all coordinates nonzero")
    return all(not g.evaluate(t) for g in F.generators)


def evaluate_matrix(P: PresentationMatrix, t: Sequence[GaussianRational]
                    ) -> list[list[GaussianRational]]:
    _check_point(P.variables, t)
    return [[p.evaluate(t) for p in row] for row in P.entries]


def coker_dim_at(P: PresentationMatrix, t: Sequence[GaussianRational]) -> int:
    """Generators minus the exact rank of the evaluated matrix."""
    if P.n_relations == 0:
        _check_point(P.variables, t)
        return P.n_generators
    return P.n_generators - rank_field(evaluate_matrix(P, t))


def coker_dim_at_numeric(P: PresentationMatrix, t: Sequence[complex],
                         tol: float = 1e-9) -> int:
    """Floating counterpart of coker_dim_at; exploratory use only."""
    if len(t) != len(P.variables):
        raise InputError("point dimension mismatch")
    if P.n_relations == 0:
        return P.n_generators
    rows = [[p.evaluate_complex(t) for p in row] for row in P.entries]
    return P.n_generators - rank_numeric(rows, tol)


def char_variety_membership(Y: MinimalChainComplex, p: int, k: int,
                            t: Sequence[GaussianRational]) -> bool:
    """Jumping-locus test for the pair (Y, p-skeleton of Y) at a torus point.

    The relative complex vanishes in degree p, so the relative homology in
    degree p+1 with the rank-one coefficients attached to t is the cokernel
    of the evaluated boundary out of degree p+2.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    pres = skeleton_presentation(Y, p)
    if k > pres.n_generators:
        return False
    return coker_dim_at(pres, t) >= k


def monomial_substitution(P: PresentationMatrix,
                          phi: Sequence[Sequence[int]]) -> PresentationMatrix:
    """Substitute x_i -> prod_j x_j^(phi[i][j]) for a unimodular integer phi."""
    mat = [list(map(int, row)) for row in phi]
    if len(mat) != len(P.variables) or not is_unimodular(mat):
        raise InputError("substitution matrix must be unimodular of matching size")
    return PresentationMatrix(
        P.variables,
        tuple(tuple(p.substituted(mat) for p in row) for row in P.entries),
        P.generator_labels,
        P.relation_labels,
    )


def apply_torus_map(phi: Sequence[Sequence[int]],
                    t: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    """The torus point with i-th coordinate prod_j t_j^(phi[i][j]).

    Membership transports along this map: t lies on a variety of the
    substituted matrix exactly when the image point lies on the variety of
    the original one.
    """
    out = []
    for row in phi:
        val = GaussianRational.of(1)
        for tj, e in zip(t, row):
            if e:
                val = val * (tj ** int(e))
        out.append(val)
    return tuple(out)


def hilbert_function(P: PresentationMatrix, max_degree: int) -> HilbertFunction:
    """Graded dimensions of the augmentation-adic filtration of the cokernel.

    Substituting x_i = 1 + s_i identifies the quotient by the (j-th power of
    the) augmentation ideal with a truncated polynomial ring; the degree-k
    value is dim(M/I^(k+1)M) - dim(M/I^k M), each computed as an exact
    corank.  Requires every entry in the augmentation ideal, otherwise the
    filtration bookkeeping below would be wrong.
    """
    if max_degree < 0:
        raise InputError("max_degree must be non-negative")
    if not P.is_eps_minimal():
        raise InputError("presentation entries must lie in the augmentation ideal")
    nvars = len(P.variables)
    b, r = P.n_generators, P.n_relations
    bound = max_degree + 2  # need truncation below degree max_degree + 2
    series = [
        [P.entries[g][c].shifted_truncated(bound) for c in range(r)]
        for g in range(b)
    ]
    monomials = _monomials_below(nvars, bound)
    dims = [0]  # dim of M / I^0 M
    for j in range(1, max_degree + 2):
        level = [m for m in monomials if sum(m) < j]
        index = {m: i for i, m in enumerate(level)}
        dj = len(level)
        rows: list[list[int]] = []
        for c in range(r):
            for m in level:
                dm = sum(m)
                if dm >= j - 1:
                    continue  # entries sit in I, so these multiples vanish mod I^j
                vec = [0] * (b * dj)
                filled = False
                for g in range(b):
                    for mono, coeff in series[g][c].items():
                        tot = tuple(a + bb for a, bb in zip(mono, m))
                        if sum(tot) < j:
                            vec[g * dj + index[tot]] += coeff
                            filled = True
                if filled:
                    rows.append(vec)
        dims.append(b * dj - rank_int(rows))
    values = tuple(dims[k + 1] - dims[k] for k in range(max_degree + 1))
    return HilbertFunction(values)


def _monomials_below(nvars: int, bound: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], left: int) -> None:
        if len(prefix) == nvars:
            out.append(prefix)
            return
        for e in range(left + 1):
            rec(prefix + (e,), left - e)

    rec((), bound - 1)
    out.sort(key=lambda m: (sum(m), m))
    return out


def random_torus_point(rng: Random, n: int, *, span: int = 7
                       ) -> tuple[GaussianRational, ...]:
    """A random exact point with small nonzero Gaussian-rational coordinates."""
    out = []
    for _ in range(n):
        while True:
            re = Fraction(rng.randint(-span, span), rng.randint(1, 4))
            im = Fraction(rng.randint(-span, span), rng.randint(1, 4)) if rng.random() < 0.3 else Fraction(0)
            if re or im:
                out.append(GaussianRational(re, im))
                break
    return tuple(out)


def minor_in_next_ideal_witness(P: PresentationMatrix, rows: tuple[int, ...],
                                cols: tuple[int, ...]) -> bool:
    """Ideal-nesting certificate for one minor.

    The Laplace expansion writes a size-m minor as an entry combination of
    size-(m-1) minors, which are generators of the next ideal.  To keep the
    check honest, the left side is recomputed here by the permutation-sum
    formula instead of the cofactor recursion used everywhere else.
    """
    size = len(rows)
    if size < 2 or size != len(cols):
        raise InputError("need a square minor of size at least 2")
    full = LaurentPoly.zero(P.variables)
    for perm in itertools.permutations(range(size)):
        inversions = sum(
            1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j]
        )
        term = LaurentPoly.constant(P.variables, 1)
        for i in range(size):
            term = term * P.entries[rows[i]][cols[perm[i]]]
        full = full + term.scaled((-1) ** inversions)
    acc = LaurentPoly.zero(P.variables)
    for i, row in enumerate(rows):
        entry = P.entries[row][cols[0]]
        sub = fitting_minor(P, rows[:i] + rows[i + 1:], cols[1:])
        term = entry * sub
        acc = acc + (term if i % 2 == 0 else -term)
    return acc == full


def fitting_minor(P: PresentationMatrix, rows: tuple[int, ...],
                  cols: tuple[int, ...]) -> LaurentPoly:
    """One determinant of the selected square submatrix."""
    if len(rows) != len(cols):
        raise InputError("minor must be square")
    if len(rows) == 0:
        return LaurentPoly.constant(P.variables, 1)
    if len(rows) == 1:
        return P.entries[rows[0]][cols[0]]
    acc = LaurentPoly.zero(P.variables)
    for i, row in enumerate(rows):
        entry = P.entries[row][cols[0]]
        if entry.is_zero():
            continue
        sub = fitting_minor(P, rows[:i] + rows[i + 1:], cols[1:])
        term = entry * sub
        acc = acc + (term if i % 2 == 0 else -term)
    return acc
