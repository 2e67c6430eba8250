"""Exact linear algebra kernels.

Everything here is elimination-based and exact.  Matrices are sequences of
rows.  ``rank_int`` is the workhorse: fraction-free integer elimination with
per-row gcd reduction, fast enough for the few-hundred-column systems that
come out of quadratic algebra dimensions and filtration ranks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        if rank == len(work):
            break
        pivot = None
        best = None
        for i in range(rank, len(work)):
            v = work[i][col]
            if v and (best is None or abs(v) < best):
                pivot, best = i, abs(v)
                if best == 1:
                    break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        p = prow[col]
        dead = []
        for i in range(rank + 1, len(work)):
            row = work[i]
            v = row[col]
            if not v:
                continue
            g = gcd(p, v)
            a, b = p // g, v // g
            new = [a * row[j] - b * prow[j] for j in range(col, ncols)]
            shrink = 0
            for x in new:
                shrink = gcd(shrink, x)
                if shrink == 1:
                    break
            if shrink > 1:
                new = [x // shrink for x in new]
            row[col:] = new
            if not any(new):
                dead.append(i)
        for i in reversed(dead):
            work.pop(i)
        rank += 1
    return rank


def rank_fraction(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix of rational entries (rows are scaled to integers)."""
    scaled = []
    for r in rows:
        fracs = [Fraction(x) for x in r]
        lcm = 1
        for x in fracs:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        scaled.append([int(x * lcm) for x in fracs])
    return rank_int(scaled)


def rank_field(rows: Sequence[Sequence]) -> int:
    """Rank via Gaussian elimination over any exact field.

    Entries must support +, -, *, /, and truthiness as a zero test
    (Fraction and GaussianRational both do).
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        if rank == len(work):
            break
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, len(work)):
            v = work[i][col]
            if not v:
                continue
            factor = v / p
            row = work[i]
            for j in range(col, ncols):
                row[j] = row[j] - factor * prow[j]
        rank += 1
    return rank


def rank_numeric(rows: Sequence[Sequence[complex]], tol: float = 1e-9) -> int:
    """Floating rank with a pivot tolerance.  Exploratory use only."""
    work = [list(map(complex, r)) for r in rows]
    work = [r for r in work if any(abs(x) > tol for x in r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        if rank == len(work):
            break
        pivot = max(range(rank, len(work)), key=lambda i: abs(work[i][col]))
        if abs(work[pivot][col]) <= tol:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, len(work)):
            factor = work[i][col] / p
            row = work[i]
            for j in range(col, ncols):
                row[j] -= factor * prow[j]
        rank += 1
    return rank


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(matrix: Sequence[Sequence[int]]) -> bool:
    n = len(matrix)
    if n == 0 or any(len(r) != n for r in matrix):
        return False
    return det_int(matrix) in (1, -1)
