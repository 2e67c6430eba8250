"""Minimal equivariant chain complexes over group rings.

The modeled spaces are tori, wedges of circles, and finite direct products
of those, i.e. classifying spaces of groups Z^a x F_{d_1} x ... x F_{d_k}.
Each complex stores, per degree q, the rank of the free module of q-cells
and the boundary matrix into degree q-1.  Matrices act on column vectors:
rows are indexed by the (q-1)-cells, columns by the q-cells, and the column
of a cell is its boundary.

Ring elements are commutative Laurent polynomials.  That representation is
sound here because every boundary entry is a binomial in a single group
generator, and the only products ever formed (boundary-squared checks)
multiply entries whose generators commute in the actual group ring.  The
guard in ``ring_mul`` rejects any product that would mix two generators of
one free non-abelian factor, where commutativity would be a lie.

Every boundary entry vanishes under the augmentation (all generators to 1);
this minimality is what makes the degree-(p+1) boundary a presentation of
the first non-vanishing higher homotopy group of a p-skeleton, and the
truncated complex above it a finite free resolution.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import InputError
from .laurent import LaurentPoly, poly_matmul

Matrix = tuple[tuple[LaurentPoly, ...], ...]


@dataclass(frozen=True)
class MinimalChainComplex:
    variables: tuple[str, ...]
    factor_of: tuple[int, ...]      # generator index -> direct factor id
    factor_sizes: tuple[int, ...]   # factor id -> number of generators
    ranks: tuple[int, ...]
    boundaries: tuple[Matrix, ...]  # boundaries[q-1] is the map from degree q
    basis_labels: tuple[tuple[str, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, q: int) -> Matrix:
        """The boundary matrix out of degree q (zero-size when out of range)."""
        if 1 <= q <= self.dim:
            return self.boundaries[q - 1]
        rows = self.rank(q - 1)
        return tuple(tuple() for _ in range(rows))

    def rank(self, q: int) -> int:
        if 0 <= q <= self.dim:
            return self.ranks[q]
        return 0

    def rank_poly_coeffs(self) -> tuple[int, ...]:
        return self.ranks


@dataclass(frozen=True)
class PresentationMatrix:
    """Generators x relations matrix presenting a module; columns relate."""

    variables: tuple[str, ...]
    entries: Matrix
    generator_labels: tuple[str, ...]
    relation_labels: tuple[str, ...]

    @property
    def n_generators(self) -> int:
        return len(self.generator_labels)

    @property
    def n_relations(self) -> int:
        return len(self.relation_labels)

    def is_eps_minimal(self) -> bool:
        return all(p.is_eps_minimal() for row in self.entries for p in row)

    def involuted(self) -> "PresentationMatrix":
        """Send every group generator to its inverse (left/right swap)."""
        return PresentationMatrix(
            self.variables,
            tuple(tuple(p.inverted() for p in row) for row in self.entries),
            self.generator_labels,
            self.relation_labels,
        )

    def permuted_generators(self, perm: tuple[int, ...]) -> "PresentationMatrix":
        """Reorder generator rows: new row i is old row perm[i]."""
        if sorted(perm) != list(range(self.n_generators)):
            raise InputError("not a permutation of the generators")
        return PresentationMatrix(
            self.variables,
            tuple(self.entries[i] for i in perm),
            tuple(self.generator_labels[i] for i in perm),
            self.relation_labels,
        )

    def scaled_generators(self, signs: tuple[int, ...]) -> "PresentationMatrix":
        """Flip basis vectors: allowed scalars are +1 and -1."""
        if len(signs) != self.n_generators or any(s not in (1, -1) for s in signs):
            raise InputError("signs must be +-1, one per generator")
        return PresentationMatrix(
            self.variables,
            tuple(
                tuple(p.scaled(s) for p in row)
                for s, row in zip(signs, self.entries)
            ),
            self.generator_labels,
            self.relation_labels,
        )

    def rows_as_relations(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        """Transpose: one row per relation (the displayed left-module shape)."""
        return tuple(
            tuple(self.entries[g][r] for g in range(self.n_generators))
            for r in range(self.n_relations)
        )


@dataclass(frozen=True)
class Resolution:
    """Truncation 0 -> C_d -> ... -> C_{p+2} -> C_{p+1} with free cokernel data.

    ``length`` counts the free modules, matching the classical count for
    skeleta of tori (n cells, skeleton l: length n - l).
    """

    ranks: tuple[int, ...]        # ranks of C_{p+1}, C_{p+2}, ..., C_d
    boundaries: tuple[Matrix, ...]  # maps C_{p+2}->C_{p+1}, ..., C_d->C_{d-1}

    @property
    def length(self) -> int:
        return len(self.ranks)


def ring_mul(p: LaurentPoly, q: LaurentPoly, factor_of: tuple[int, ...],
             factor_sizes: tuple[int, ...]) -> LaurentPoly:
    """Entry product, rejecting monomials that mix one free factor's generators."""
    out = p * q
    for exps, _ in out.terms:
        by_factor: dict[int, int] = {}
        for i, e in enumerate(exps):
            if e:
                f = factor_of[i]
                by_factor[f] = by_factor.get(f, 0) + 1
        for f, count in by_factor.items():
            if count > 1 and factor_sizes[f] > 1:
                raise InputError(
                    "product mixes non-commuting generators of one free factor"
                )
    return out


def verify_complex(Y: MinimalChainComplex) -> None:
    """Check boundary-squared vanishing and augmentation minimality."""
    for q in range(1, Y.dim + 1):
        mat = Y.boundary(q)
        if len(mat) != Y.rank(q - 1) or (mat and any(len(r) != Y.rank(q) for r in mat)):
            raise AssertionError(f"boundary {q} has inconsistent shape")
        for row in mat:
            for p in row:
                if not p.is_eps_minimal():
                    raise AssertionError(f"boundary {q} entry {p} is not minimal")
    mul = lambda a, b: ring_mul(a, b, Y.factor_of, Y.factor_sizes)
    for q in range(2, Y.dim + 1):
        prod = poly_matmul(Y.boundary(q - 1), Y.boundary(q), mul=mul)
        for row in prod:
            for p in row:
                if not p.is_zero():
                    raise AssertionError(f"boundary composition at degree {q} is nonzero")


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def torus_complex(n: int, names: tuple[str, ...] | None = None) -> MinimalChainComplex:
    """Standard minimal cell structure of the n-torus.

    Degree-q cells are the q-subsets of generators in lexicographic order;
    the boundary of a cell alternates over dropping one index, with entry
    x^{-1} - 1 in the dropped generator.
    """
    if n < 1:
        raise InputError("torus dimension must be at least 1")
    names = tuple(names) if names is not None else _default_names(n)
    if len(names) != n or len(set(names)) != n:
        raise InputError("need n distinct generator names")
    subsets = [list(itertools.combinations(range(n), q)) for q in range(n + 1)]
    labels = tuple(
        tuple("s(" + ",".join(names[i] for i in sub) + ")" if sub else "pt"
              for sub in level)
        for level in subsets
    )
    boundaries = []
    for q in range(1, n + 1):
        row_index = {sub: i for i, sub in enumerate(subsets[q - 1])}
        mat = [
            [LaurentPoly.zero(names) for _ in subsets[q]]
            for _ in subsets[q - 1]
        ]
        for col, sub in enumerate(subsets[q]):
            for r, dropped in enumerate(sub):
                rest = sub[:r] + sub[r + 1:]
                entry = LaurentPoly.generator_loop(names, dropped).scaled((-1) ** r)
                i = row_index[rest]
                mat[i][col] = mat[i][col] + entry
        boundaries.append(tuple(tuple(row) for row in mat))
    return MinimalChainComplex(
        variables=names,
        factor_of=tuple(range(n)),
        factor_sizes=(1,) * n,
        ranks=tuple(math.comb(n, q) for q in range(n + 1)),
        boundaries=tuple(boundaries),
        basis_labels=labels,
    )


def wedge_complex(d: int, names: tuple[str, ...] | None = None) -> MinimalChainComplex:
    """Wedge of d circles: one 0-cell, d one-cells, free group on d generators."""
    if d < 1:
        raise InputError("wedge needs at least one circle")
    names = tuple(names) if names is not None else _default_names(d)
    if len(names) != d or len(set(names)) != d:
        raise InputError("need d distinct generator names")
    row = tuple(LaurentPoly.generator_loop(names, i) for i in range(d))
    return MinimalChainComplex(
        variables=names,
        factor_of=(0,) * d,
        factor_sizes=(d,),
        ranks=(1, d),
        boundaries=((row,),),
        basis_labels=(("pt",), tuple(f"w({x})" for x in names)),
    )


def _extend(poly: LaurentPoly, variables: tuple[str, ...], offset: int) -> LaurentPoly:
    pad_left = offset
    pad_right = len(variables) - offset - len(poly.variables)
    terms = {
        (0,) * pad_left + e + (0,) * pad_right: c
        for e, c in poly.terms
    }
    return LaurentPoly.make(variables, terms)


def kunneth_product(C: MinimalChainComplex, D: MinimalChainComplex) -> MinimalChainComplex:
    """Tensor product complex of two direct factors.

    Basis of degree q: pairs (a-cell of C, b-cell of D) with a + b = q,
    ordered lexicographically by (a, b) and then by factor basis positions.
    Boundary follows the usual sign rule: d(c x d) = dc x d + (-1)^a c x dd.
    """
    if set(C.variables) & set(D.variables):
        raise InputError("generator symbol collision between the factors")
    variables = C.variables + D.variables
    offset = len(C.variables)
    n_factors = len(C.factor_sizes)
    factor_of = C.factor_of + tuple(f + n_factors for f in D.factor_of)
    factor_sizes = C.factor_sizes + D.factor_sizes
    dim = C.dim + D.dim

    def blocks(q: int) -> list[tuple[int, int]]:
        return [(a, q - a) for a in range(q + 1)
                if C.rank(a) and D.rank(q - a)]

    # basis: per degree, list of (a, b, i, j); position lookup for boundaries
    basis: list[list[tuple[int, int, int, int]]] = []
    for q in range(dim + 1):
        level = []
        for a, b in blocks(q):
            for i in range(C.rank(a)):
                for j in range(D.rank(b)):
                    level.append((a, b, i, j))
        basis.append(level)

    labels = tuple(
        tuple(
            f"{C.basis_labels[a][i]}*{D.basis_labels[b][j]}"
            for a, b, i, j in level
        )
        for level in basis
    )
    boundaries = []
    for q in range(1, dim + 1):
        pos = {cell: k for k, cell in enumerate(basis[q - 1])}
        mat = [
            [LaurentPoly.zero(variables) for _ in basis[q]]
            for _ in basis[q - 1]
        ]
        for col, (a, b, i, j) in enumerate(basis[q]):
            if a >= 1:
                dC = C.boundary(a)
                for i2 in range(C.rank(a - 1)):
                    entry = dC[i2][i]
                    if entry.is_zero():
                        continue
                    row = pos[(a - 1, b, i2, j)]
                    mat[row][col] = mat[row][col] + _extend(entry, variables, 0)
            if b >= 1:
                dD = D.boundary(b)
                sign = (-1) ** a
                for j2 in range(D.rank(b - 1)):
                    entry = dD[j2][j]
                    if entry.is_zero():
                        continue
                    row = pos[(a, b - 1, i, j2)]
                    mat[row][col] = mat[row][col] + _extend(entry, variables, offset).scaled(sign)
        boundaries.append(tuple(tuple(row) for row in mat))
    return MinimalChainComplex(
        variables=variables,
        factor_of=factor_of,
        factor_sizes=factor_sizes,
        ranks=tuple(len(level) for level in basis),
        boundaries=tuple(boundaries),
        basis_labels=labels,
    )


def skeleton_presentation(Y: MinimalChainComplex, p: int) -> PresentationMatrix:
    """Boundary out of degree p+2, presenting pi_p of the p-skeleton of Y.

    Valid when the skeleton is a proper subcomplex, i.e. p + 1 <= dim Y;
    above the top degree the group vanishes and there is nothing to present.
    """
    if p < 1:
        raise InputError("skeleton degree must be positive")
    if p + 1 > Y.dim:
        raise InputError(
            f"no cells above degree {p}: the homotopy group is zero, not presented"
        )
    rows = Y.rank(p + 1)
    mat = Y.boundary(p + 2)
    if Y.rank(p + 2) == 0:
        mat = tuple(tuple() for _ in range(rows))
    rel_labels = Y.basis_labels[p + 2] if p + 2 <= Y.dim else ()
    return PresentationMatrix(
        variables=Y.variables,
        entries=mat,
        generator_labels=Y.basis_labels[p + 1],
        relation_labels=tuple(rel_labels),
    )


def pi_p_resolution(Y: MinimalChainComplex, p: int) -> Resolution:
    """Free resolution 0 -> C_d -> ... -> C_{p+1} of pi_p of the p-skeleton."""
    if p + 1 > Y.dim:
        raise InputError("no resolution above the top degree")
    ranks = tuple(Y.rank(q) for q in range(p + 1, Y.dim + 1))
    maps = tuple(Y.boundary(q) for q in range(p + 2, Y.dim + 1))
    return Resolution(ranks, maps)


@dataclass(frozen=True)
class SkeletonReport:
    """Homotopy summary of the l-skeleton of the n-torus."""

    n: int
    skeleton: int
    aspherical: bool
    vanishing_range: tuple[int, ...]  # degrees 1 < k < l with zero homotopy
    presentation: PresentationMatrix | None
    resolution: Resolution | None
    free: bool
    free_rank: int | None


def hattori_model(n: int, ell: int) -> SkeletonReport:
    """The complement model for n hyperplanes in general position, rank ell.

    The complement deformation-retracts to the ell-skeleton of the n-torus;
    when n equals ell the skeleton is the whole torus and every higher group
    vanishes.
    """
    if ell < 2 or n < ell:
        raise InputError("need n >= ell >= 2")
    if n == ell:
        return SkeletonReport(n, ell, True, tuple(range(2, ell)), None, None, False, None)
    Y = torus_complex(n)
    pres = skeleton_presentation(Y, ell)
    res = pi_p_resolution(Y, ell)
    free = pres.n_relations == 0
    return SkeletonReport(
        n=n,
        skeleton=ell,
        aspherical=False,
        vanishing_range=tuple(range(2, ell)),
        presentation=pres,
        resolution=res,
        free=free,
        free_rank=pres.n_generators if free else None,
    )
