"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s`.  Every assertion is exact
(integers and exact rationals); the printed timing is checked against the
per-criterion wall-clock limit.
"""

import itertools
import math
import time
from random import Random

from hyparr.arrangement import cone, rank
from hyparr.chain_complex import (
    kunneth_product,
    pi_p_resolution,
    skeleton_presentation,
    torus_complex,
    verify_complex,
    wedge_complex,
)
from hyparr.connectivity import connectivity
from hyparr.fitting import (
    char_variety_membership,
    coker_dim_at,
    fitting_ideal,
    hilbert_function,
    monomial_substitution,
    apply_torus_map,
    random_torus_point,
    variety_membership,
)
from hyparr.gaussian import GaussianRational as G
from hyparr.graphs import (
    distinct_homotopy_2_types,
    four_cycles,
    graphic_arrangement,
    hypersolvable_graph_series,
    is_chordal,
    solvable_graph_extension,
    supersolvable_series,
    triangle_free_report,
)
from hyparr.hypersolvable import (
    composition_series,
    is_supersolvable,
    solvable_extension,
)
from hyparr.laurent import LaurentPoly
from hyparr.orlik_solomon import poincare_polynomial, quadratic_os_dims
from hyparr.polynomials import IntPolynomial

from .corpus import (
    braid_plus_one,
    fan_cone,
    graph_g1,
    graph_g2,
    parallel_pair_cone,
    random_central_arrangement,
    random_graph,
    random_subgraph_pair,
    supersolvable_slice,
)
from .oracles import enumerate_all_series

ONE = G.of(1)


class _Timed:
    def __init__(self, label: str, limit: float):
        self.label = label
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.limit, f"{self.label}: {elapsed:.2f}s over limit"
            print(f"ACCEPTANCE {self.label}: PASS ({elapsed:.2f}s < {self.limit:g}s)")
        else:
            print(f"ACCEPTANCE {self.label}: FAIL")
        return False


def test_criterion_1_supersolvable_slice():
    with _Timed("1 supersolvable five-line cone", 1.0):
        arr = supersolvable_slice()
        flag, series = is_supersolvable(arr)
        assert flag
        assert series.length == 3
        assert sorted(series.exponents) == [1, 2, 3]
        report = connectivity(arr)
        assert report.p is None and report.aspherical


def test_criterion_2_fan():
    with _Timed("2 fan cone", 5.0):
        arr = fan_cone()
        series = composition_series(arr)
        assert series is not None and series.length == 4
        assert sorted(series.exponents) == [1, 2, 2, 2]
        report = connectivity(arr)
        assert report.p == 2
        # the deconed model: product of three wedges of two circles
        blocks = [wedge_complex(2, (f"x{2*i+1}", f"x{2*i+2}")) for i in range(3)]
        Y = kunneth_product(kunneth_product(blocks[0], blocks[1]), blocks[2])
        pres = skeleton_presentation(Y, 2)
        assert pres.n_relations == 0 and pres.n_generators == 8  # free of rank 8
        res = pi_p_resolution(Y, 2)
        assert res.length == 1 and res.boundaries == ()
        assert report.c_next == 8
        ideal = fitting_ideal(pres, 1)
        assert ideal.is_zero_ideal()
        rng = Random(2025)
        for _ in range(25):
            t = random_torus_point(rng, 6)
            assert variety_membership(ideal, t)


def test_criterion_3_parallel_pair():
    with _Timed("3 length-five cone and its module", 30.0):
        arr = parallel_pair_cone()
        series = composition_series(arr)
        assert series.length == 5
        assert sorted(series.exponents) == [1, 1, 1, 1, 2]
        Y = kunneth_product(torus_complex(3), wedge_complex(2, ("x4", "x5")))
        pres = skeleton_presentation(Y, 2)
        assert pres.n_generators == 7 and pres.n_relations == 2
        res = pi_p_resolution(Y, 2)
        assert len(res.boundaries) == 1  # single boundary matrix resolves it

        # displayed form: invert generators (left-module convention), put the
        # top block first, flip the mixed-block basis signs, read rows
        display = (
            pres.involuted()
            .permuted_generators((6, 0, 1, 2, 3, 4, 5))
            .scaled_generators((1, -1, -1, -1, -1, -1, -1))
            .rows_as_relations()
        )
        v = pres.variables

        def one_minus(i):
            return LaurentPoly.generator_loop(v, i).inverted().scaled(-1)

        def minus_one_plus(i):
            return LaurentPoly.generator_loop(v, i).inverted()

        zero = LaurentPoly.zero(v)
        expected = (
            (one_minus(3), one_minus(2), zero, minus_one_plus(1), zero,
             one_minus(0), zero),
            (one_minus(4), zero, one_minus(2), zero, minus_one_plus(1), zero,
             one_minus(0)),
        )
        assert display == expected

        ideal6 = fitting_ideal(pres, 6)
        rng = Random(58)
        for _ in range(25):
            tail = random_torus_point(rng, 2)
            assert variety_membership(ideal6, (ONE, ONE, ONE) + tail)
        violations = 0
        while violations < 50:
            t = random_torus_point(rng, 5)
            if t[0].is_one() and t[1].is_one() and t[2].is_one():
                continue
            assert not variety_membership(ideal6, t)
            violations += 1

        hf = hilbert_function(pres, 3)
        assert hf.values == (7, 33, 95, 215)
        assert hf.positive_at_bound  # the filtration keeps growing


def test_criterion_4_nine_edge_graphs():
    with _Timed("4 nine-edge graph pair", 5.0):
        g1, g2 = graph_g1(), graph_g2()
        reports = []
        for g in (g1, g2):
            series = hypersolvable_graph_series(g)
            assert series is not None and series.length == 9
            rep = triangle_free_report(g)
            assert rep.pi1_rank == 9
            assert rep.betti2 == 36
            reports.append(rep)
        got1 = {tuple(i + 1 for i in c) for c in four_cycles(g1).cycles}
        got2 = {tuple(i + 1 for i in c) for c in four_cycles(g2).cycles}
        assert got1 == {(1, 2, 7, 9), (5, 6, 7, 8)}
        assert got2 == {(1, 2, 7, 9), (1, 6, 7, 8), (2, 6, 8, 9)}
        assert reports[0].coinvariants_rank == 2
        assert reports[1].coinvariants_rank == 3
        assert distinct_homotopy_2_types(reports[0], reports[1])


def test_criterion_5_general_position_suite():
    with _Timed("5 general-position skeleton suite", 5.0):
        ell = 2
        for n in range(3, 7):
            Y = torus_complex(n)
            pres = skeleton_presentation(Y, ell)
            res = pi_p_resolution(Y, ell)
            assert res.length == n - ell
            assert res.ranks == tuple(math.comb(n, q) for q in range(3, n + 1))
            # no homotopy between the fundamental group and degree ell
            assert tuple(range(2, ell)) == ()
            # coinvariants, route one: evaluate the presentation at the
            # trivial character and take the corank
            ones = tuple(ONE for _ in range(n))
            rank_one_route = coker_dim_at(pres, ones)
            # route two: compare the two graded series
            pbar = IntPolynomial.product_one_plus([1] * n)
            truncated = IntPolynomial.of([math.comb(n, q) for q in range(ell + 1)])
            rank_two_route = (pbar - truncated)[ell + 1]
            assert rank_one_route == rank_two_route == math.comb(n, ell + 1)
            # alternating sum of the resolution ranks collapses to a binomial
            alt = sum((-1) ** i * r for i, r in enumerate(res.ranks))
            assert alt == math.comb(n - 1, ell)
            if n == 3:
                assert pres.n_relations == 0 and pres.n_generators == 1


def test_criterion_6_braid_plus_one():
    with _Timed("6 braid plus one hyperplane", 60.0):
        arr = braid_plus_one()
        series = composition_series(arr)
        assert series is not None  # hypersolvable
        quad = quadratic_os_dims(arr, 3)
        full = poincare_polynomial(arr)
        assert quad[2] == full[2]
        assert quad[3] > full[3]  # strict growth at degree three forces p = 2
        report = connectivity(arr)
        assert report.p == 2
        # the product route agrees with the elimination route through degree 3
        pbar = IntPolynomial.product_one_plus(list(series.exponents))
        assert tuple(pbar[q] for q in range(4)) == quad.dims


def test_criterion_7a_ordering_independence():
    with _Timed("7a ordering independence", 60.0):
        rng = Random(70701)
        for _ in range(200):
            arr = random_central_arrangement(rng)
            base = poincare_polynomial(arr)
            perm = list(range(len(arr)))
            rng.shuffle(perm)
            assert poincare_polynomial(arr, ordering=perm) == base


def _random_model(rng: Random):
    sizes = []
    total = 0
    while total < 5 and rng.random() < 0.8:
        d = rng.randint(1, 3)
        if total + d > 6:
            break
        sizes.append((rng.random() < 0.5, d))
        total += d
    if not sizes:
        sizes, total = [(True, 2)], 2
    blocks = []
    used = 0
    for is_torus, d in sizes:
        names = tuple(f"x{used + i + 1}" for i in range(d))
        used += d
        blocks.append(torus_complex(d, names) if is_torus else wedge_complex(d, names))
    model = blocks[0]
    for other in blocks[1:]:
        model = kunneth_product(model, other)
    return model


def test_criterion_7b_boundary_squared_and_minimality():
    with _Timed("7b boundary checks", 120.0):
        rng = Random(70702)
        for _ in range(200):
            verify_complex(_random_model(rng))


def test_criterion_7c_minor_vs_corank():
    with _Timed("7c minors against coranks", 120.0):
        rng = Random(70703)
        models = [
            kunneth_product(torus_complex(3), wedge_complex(2, ("x4", "x5"))),
            torus_complex(4),
            kunneth_product(
                kunneth_product(wedge_complex(2, ("x1", "x2")),
                                wedge_complex(2, ("x3", "x4"))),
                wedge_complex(1, ("x5",)),
            ),
        ]
        prepared = []
        for Y in models:
            pres = skeleton_presentation(Y, 2)
            ideals = {k: fitting_ideal(pres, k)
                      for k in range(1, pres.n_generators + 1)}
            prepared.append((Y, pres, ideals))
        for case in range(200):
            Y, pres, ideals = prepared[case % len(prepared)]
            t = random_torus_point(rng, len(pres.variables))
            if rng.random() < 0.4:
                t = (ONE,) * 3 + t[3:]
            dim = coker_dim_at(pres, t)
            for k, ideal in ideals.items():
                member = variety_membership(ideal, t)
                assert member == (dim >= k)
                assert member == char_variety_membership(Y, 2, k, t)


def test_criterion_7d_monomial_invariance():
    with _Timed("7d monomial invariance", 120.0):
        rng = Random(70704)
        Y = kunneth_product(torus_complex(3), wedge_complex(2, ("x4", "x5")))
        pres = skeleton_presentation(Y, 2)
        base_ideal = fitting_ideal(pres, 6)
        for _ in range(200):
            n = 5
            phi = [[int(i == j) for j in range(n)] for i in range(n)]
            for _ in range(5):
                i, j = rng.sample(range(n), 2)
                c = rng.choice((-1, 1, 2))
                for col in range(n):
                    phi[i][col] += c * phi[j][col]
            sub = monomial_substitution(pres, phi)
            sub_ideal = fitting_ideal(sub, 6)
            t = random_torus_point(rng, n, span=3)
            if rng.random() < 0.5:
                t = (ONE, ONE, ONE) + t[3:]
            image = apply_torus_map(phi, t)
            assert variety_membership(sub_ideal, t) == variety_membership(base_ideal, image)


def test_criterion_7e_graph_arrangement_solvability_agreement():
    with _Timed("7e graph and arrangement extensions agree", 120.0):
        rng = Random(70705)
        for _ in range(200):
            g, k_idx = random_subgraph_pair(rng)
            graph_verdict = solvable_graph_extension(g, k_idx)
            arr = graphic_arrangement(g)
            arr_verdict = solvable_extension(arr, set(range(g.num_edges)), set(k_idx))
            assert graph_verdict.is_solvable == arr_verdict.is_solvable
            if graph_verdict.is_solvable:
                assert graph_verdict.kind == arr_verdict.kind


def test_criterion_7f_three_way_supersolvability():
    with _Timed("7f chordal equivalences", 300.0):
        rng = Random(70706)
        for _ in range(200):
            g = random_graph(rng)
            chordal = is_chordal(g)
            vertex_series = supersolvable_series(g)
            flag, _ = is_supersolvable(graphic_arrangement(g))
            assert chordal == (vertex_series is not None) == flag


def test_criterion_7g_quadratic_dominates():
    with _Timed("7g coefficientwise domination", 300.0):
        rng = Random(70707)
        for _ in range(200):
            arr = random_central_arrangement(rng)
            top = min(4, len(arr))
            quad = quadratic_os_dims(arr, top)
            full = poincare_polynomial(arr)
            for q in range(top + 1):
                assert quad[q] >= full[q]
                if q <= 2:
                    assert quad[q] == full[q]


def test_criterion_7h_series_length_uniqueness():
    with _Timed("7h series-length uniqueness", 300.0):
        rng = Random(70708)
        checked = 0
        attempts = 0
        while checked < 200 and attempts < 1200:
            attempts += 1
            arr = random_central_arrangement(rng, max_n=6)
            series = composition_series(arr)
            if series is None:
                continue
            exps = enumerate_all_series(arr)
            assert {len(e) for e in exps} == {series.length}
            assert {tuple(sorted(e)) for e in exps} == {tuple(sorted(series.exponents))}
            checked += 1
        assert checked >= 200
