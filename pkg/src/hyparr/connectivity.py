"""Order of fundamental-group connectivity for hypersolvable arrangements.

Once a composition series with exponents d_1..d_l is known, the graded
dimensions of the quadratic algebra are the coefficients of the product
prod (1 + d_i T), exact in every degree, while the full Betti numbers come
from the nbc count.  The connectivity order p is the last degree through
which the two agree; agreement everywhere means the complement is aspherical,
which coincides with supersolvability.  When p is finite the coefficient of
T^(p+1) in the difference is the rank of the coinvariants of the first
non-vanishing higher homotopy group, and it is strictly positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement
from .errors import InputError, NotHypersolvableError
from .hypersolvable import (
    DEFAULT_MAX_HYPERPLANES,
    DEFAULT_NODE_BUDGET,
    CompositionSeries,
    search_composition_series,
)
from .orlik_solomon import poincare_polynomial
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class ConnectivityReport:
    p: int | None  # None encodes infinity, reported as "infinity" downstream
    aspherical: bool
    c_next: int  # 0 sentinel when p is infinite
    p_poly: IntPolynomial
    pbar_poly: IntPolynomial
    series: CompositionSeries

    @property
    def p_label(self) -> str:
        return "infinity" if self.p is None else str(self.p)


def pbar_from_exponents(exponents) -> IntPolynomial:
    return IntPolynomial.product_one_plus(list(exponents))


def connectivity(arr: Arrangement, *, budget: int = DEFAULT_NODE_BUDGET,
                 max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> ConnectivityReport:
    """Compare the two graded series and locate the first disagreement."""
    search = search_composition_series(
        arr, budget=budget, max_hyperplanes=max_hyperplanes
    )
    if search.series is None:
        raise NotHypersolvableError(
            "arrangement is not hypersolvable", certificate=search.frontier
        )
    series = search.series
    p_poly = poincare_polynomial(arr)
    pbar = pbar_from_exponents(series.exponents)
    agree = p_poly.agreement_degree(pbar)
    if agree is None:
        supersolvable = all(series.fibered_flags)
        if not supersolvable:
            raise RuntimeError(
                "series polynomials agree everywhere on a non-supersolvable input"
            )
        return ConnectivityReport(None, True, 0, p_poly, pbar, series)
    p = agree
    if p < 2:
        raise RuntimeError(f"connectivity order {p} < 2; Betti comparison is broken")
    c_next = pbar[p + 1] - p_poly[p + 1]
    if c_next <= 0:
        raise RuntimeError("difference coefficient at p+1 must be positive")
    return ConnectivityReport(p, False, c_next, p_poly, pbar, series)


def coinvariants_rank(arr: Arrangement, *, budget: int = DEFAULT_NODE_BUDGET,
                      max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> int:
    """Rank of the coinvariants of the first non-vanishing higher homotopy group."""
    report = connectivity(arr, budget=budget, max_hyperplanes=max_hyperplanes)
    if report.p is None:
        raise InputError("aspherical complement: no first non-vanishing higher group")
    return report.c_next


def decone_degree3_rank(series: CompositionSeries) -> int:
    """Coefficient of T^3 in prod_{i>=2} (1 + d_i T).

    For a rank-3 cone of an affine line arrangement with p = 2 this equals
    the third Betti number of the deconed group, and hence the coinvariants
    rank; kept as an independent cross-check.
    """
    tail = list(series.exponents[1:])
    return IntPolynomial.product_one_plus(tail)[3]
