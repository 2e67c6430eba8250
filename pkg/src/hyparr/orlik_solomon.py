"""Cohomology Betti numbers of arrangement complements, two ways.

The full graded algebra is the exterior algebra modulo the relations
``del e_B`` for dependent subsets B; its dimensions are counted through the
broken-circuit-free (nbc) basis, which needs no linear algebra at all.  The
quadratic variant keeps only the relations coming from dependent triples and
its dimensions are genuine rational ranks, computed by exact elimination in
the monomial basis of each degree.

Both pipelines work for any central arrangement; for a hypersolvable one the
quadratic dimensions match the exponents product (cross-checked in tests).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .arrangement import Arrangement, CollinearityData, circuits, rank, rank2_flats
from .errors import InputError, WorkBoundExceeded
from .linalg import rank_int
from .polynomials import IntPolynomial

DEFAULT_DEGREE_BOUND = 5
DEFAULT_WORK_BOUND = 400_000  # cap on C(n, q) * relation count


@dataclass(frozen=True)
class NbcBasis:
    """Per-degree index sets containing no broken circuit."""

    by_degree: tuple[tuple[tuple[int, ...], ...], ...]

    def dims(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.by_degree)


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]

    def __getitem__(self, q: int) -> int:
        return self.dims[q]

    def poly(self) -> IntPolynomial:
        return IntPolynomial.of(self.dims)


def _priority(n: int, ordering: Sequence[int] | None) -> list[int]:
    if ordering is None:
        return list(range(n))
    if sorted(ordering) != list(range(n)):
        raise InputError("ordering must be a permutation of the hyperplane indices")
    pri = [0] * n
    for pos, idx in enumerate(ordering):
        pri[idx] = pos
    return pri


def broken_circuits(arr: Arrangement, ordering: Sequence[int] | None = None
                    ) -> tuple[tuple[int, ...], ...]:
    """Each circuit minus its maximal element under the ordering, deduped.

    The deleted element is the maximal one; with the identity ordering this
    is the largest index in each circuit.
    """
    pri = _priority(len(arr.forms), ordering)
    top_size = min(rank(arr) + 1, len(arr.forms))
    out = set()
    for circ in circuits(arr, top_size).circuits:
        drop = max(circ, key=lambda i: pri[i])
        out.add(tuple(sorted(i for i in circ if i != drop)))
    return tuple(sorted(out, key=lambda b: (len(b), b)))


def nbc_basis(arr: Arrangement, ordering: Sequence[int] | None = None) -> NbcBasis:
    """Subsets containing no broken circuit, by cardinality up to rank(arr).

    Built incrementally: a set is extension-closed under removal, so degree q
    candidates extend degree q-1 members by a larger index, and only broken
    circuits through the new index need checking.
    """
    n = len(arr.forms)
    r = rank(arr)
    broken = broken_circuits(arr, ordering)
    by_last: dict[int, list[frozenset[int]]] = {}
    for b in broken:
        by_last.setdefault(max(b), []).append(frozenset(b))
    levels: list[tuple[tuple[int, ...], ...]] = [((),)]
    current: list[tuple[int, ...]] = [()]
    for q in range(1, r + 1):
        nxt = []
        for s in current:
            start = s[-1] + 1 if s else 0
            for k in range(start, n):
                cand = s + (k,)
                cand_set = frozenset(cand)
                if any(b <= cand_set for b in by_last.get(k, ())):
                    continue
                nxt.append(cand)
        levels.append(tuple(nxt))
        current = nxt
    return NbcBasis(tuple(levels))


def poincare_polynomial(arr: Arrangement, ordering: Sequence[int] | None = None
                        ) -> IntPolynomial:
    """Betti numbers via nbc counts; independent of the ordering."""
    return IntPolynomial.of(nbc_basis(arr, ordering).dims())


def dependent_triples(arr: Arrangement, coll: CollinearityData | None = None
                      ) -> tuple[tuple[int, int, int], ...]:
    """All 3-subsets of forms of rank 2: every 3-subset of each listed line."""
    coll = coll or rank2_flats(arr)
    out = set()
    for line in coll.lines:
        for triple in itertools.combinations(line, 3):
            out.add(triple)
    return tuple(sorted(out))


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted union of two disjoint sorted index tuples; 0 if they meet."""
    if set(a) & set(b):
        return 0, ()
    merged = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining entries of a
            if (len(a) - i) % 2:
                sign = -sign
            merged.append(b[j])
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return sign, tuple(merged)


def quadratic_relation_rows(n: int, q: int,
                            triples: Sequence[tuple[int, int, int]]
                            ) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    """Integer rows spanning the degree-q piece of the triple-relation ideal.

    Rows are del(e_B) wedge e_K over dependent triples B and all (q-2)-subsets
    K, written in the lexicographic monomial basis of degree q.
    """
    basis = list(itertools.combinations(range(n), q))
    index = {mono: i for i, mono in enumerate(basis)}
    rows = []
    for b in triples:
        partials = []  # (coefficient, 2-subset) entries of del e_B
        for pos in range(3):
            rest = tuple(x for i, x in enumerate(b) if i != pos)
            partials.append(((-1) ** pos, rest))
        for k_set in itertools.combinations(range(n), q - 2):
            row = [0] * len(basis)
            nonzero = False
            for coeff, pair in partials:
                sign, mono = _merge_sign(pair, k_set)
                if sign:
                    row[index[mono]] += coeff * sign
                    nonzero = True
            if nonzero and any(row):
                rows.append(row)
    return rows, basis


def quadratic_os_dims(arr: Arrangement, max_degree: int,
                      work_bound: int = DEFAULT_WORK_BOUND) -> GradedDims:
    """Rational dimensions of the quotient by dependent-triple relations only.

    Degree q dimension = C(n, q) minus the rank of the relation span.  The
    two lowest degrees need no elimination (1 and n); degree 2 subtracts the
    independent triple relations directly.
    """
    if not arr.central:
        raise InputError("quadratic dimensions require a central arrangement")
    n = len(arr.forms)
    if max_degree > n:
        max_degree = n
    triples = dependent_triples(arr)
    dims = []
    for q in range(max_degree + 1):
        if q <= 1:
            dims.append(1 if q == 0 else n)
            continue
        room = math.comb(n, q)
        if room > work_bound:
            raise WorkBoundExceeded(
                f"degree {q} needs a {room}-dimensional monomial basis (bound {work_bound})"
            )
        rows, _ = quadratic_relation_rows(n, q, triples)
        dims.append(room - rank_int(rows))
    return GradedDims(tuple(dims))


def kernel_rank(arr: Arrangement, q: int,
                work_bound: int = DEFAULT_WORK_BOUND) -> int:
    """Rank of the degree-q kernel of the quotient map onto the full algebra.

    Zero through degree 2 always, and zero in every degree exactly for
    supersolvable arrangements.
    """
    if q <= 2:
        return 0
    quad = quadratic_os_dims(arr, q, work_bound)
    full = poincare_polynomial(arr)
    return quad[q] - full[q]
