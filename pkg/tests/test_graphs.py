import itertools
import math
from random import Random

import pytest

from hyparr.arrangement import boolean_arrangement, braid_arrangement, rank
from hyparr.errors import InputError
from hyparr.graphs import (
    Graph,
    chromatic_polynomial,
    distinct_homotopy_2_types,
    four_cycles,
    graphic_arrangement,
    hypersolvable_graph_series,
    is_chordal,
    is_triangle_free,
    load_graph,
    parse_graph,
    poincare_from_chromatic,
    solvable_graph_extension,
    supersolvable_series,
    triangle_free_report,
)
from hyparr.orlik_solomon import poincare_polynomial
from hyparr.polynomials import IntPolynomial

from .corpus import DATA, graph_g1, graph_g2, random_graph
from .oracles import chromatic_by_interpolation, count_colorings


def path_graph(m: int) -> Graph:
    return Graph.of(m, [(i, i + 1) for i in range(1, m)])


def cycle_graph(m: int) -> Graph:
    return Graph.of(m, [(i, i + 1) for i in range(1, m)] + [(m, 1)])


def complete_graph(m: int) -> Graph:
    return Graph.of(m, list(itertools.combinations(range(1, m + 1), 2)))


def test_graph_validation():
    with pytest.raises(InputError):
        Graph.of(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.of(3, [(1, 2), (2, 1)])
    with pytest.raises(InputError):
        Graph.of(4, [(1, 2), (2, 3)])  # vertex 4 isolated
    with pytest.raises(InputError):
        Graph.of(2, [(1, 3)])


def test_graphic_arrangement_complete_is_braid():
    for m in (3, 4):
        assert graphic_arrangement(complete_graph(m)) == braid_arrangement(m)


def test_graphic_arrangement_path_is_boolean_type():
    arr = graphic_arrangement(path_graph(4))
    # free matroid: the forms are independent and there are no circuits
    assert rank(arr) == 3 == len(arr)
    assert poincare_polynomial(arr) == IntPolynomial.product_one_plus([1, 1, 1])


def test_graphic_arrangement_cycle_is_generic_cone():
    g = cycle_graph(4)
    arr = graphic_arrangement(g)
    from hyparr.arrangement import circuits, rank2_flats

    assert rank2_flats(arr).lines == ()
    assert circuits(arr, 4).circuits == ((0, 1, 2, 3),)


def test_chromatic_triangle():
    assert chromatic_polynomial(complete_graph(3)) == IntPolynomial.of((0, 2, -3, 1))


def test_chromatic_single_edge():
    assert chromatic_polynomial(path_graph(2)) == IntPolynomial.of((0, -1, 1))


def test_chromatic_cycles_formula():
    T_minus_1 = IntPolynomial.of((-1, 1))
    for m in range(3, 7):
        got = chromatic_polynomial(cycle_graph(m))
        power = IntPolynomial.one()
        for _ in range(m):
            power = power * T_minus_1
        expected = power + (T_minus_1 if m % 2 == 0 else -T_minus_1)
        assert got == expected


def test_chromatic_matches_counting_oracle():
    rng = Random(303)
    for _ in range(15):
        g = random_graph(rng, max_vertices=5, max_edges=7)
        chi = chromatic_polynomial(g)
        assert chi == chromatic_by_interpolation(g)
        for t in range(4):
            assert chi(t) == count_colorings(g, t)


def test_poincare_from_chromatic_triangle():
    assert poincare_from_chromatic(complete_graph(3)) == IntPolynomial.of((1, 3, 2))


def test_poincare_from_chromatic_path():
    assert poincare_from_chromatic(path_graph(3)) == IntPolynomial.of((1, 2, 1))


def test_poincare_from_chromatic_nine_edges():
    poly = poincare_from_chromatic(graph_g1())
    assert poly[1] == 9 and poly[2] == 36


def test_poincare_pipelines_agree():
    rng = Random(7171)
    for _ in range(20):
        g = random_graph(rng, max_vertices=6, max_edges=9)
        assert poincare_from_chromatic(g) == poincare_polynomial(graphic_arrangement(g))


def test_chordal():
    assert is_chordal(complete_graph(4))
    assert not is_chordal(cycle_graph(4))
    assert not is_chordal(graph_g1())
    assert not is_chordal(graph_g2())
    assert is_chordal(path_graph(5))


def test_supersolvable_series_vertex_orders():
    order = supersolvable_series(complete_graph(4))
    assert order is not None and sorted(order) == [1, 2, 3, 4]
    assert supersolvable_series(cycle_graph(4)) is None
    order = supersolvable_series(path_graph(4))
    assert order is not None
    # every prefix adds a vertex whose earlier neighbors form a clique
    adj = path_graph(4).adjacency()
    for i, v in enumerate(order):
        earlier = set(order[:i])
        nbs = sorted(adj[v] & earlier)
        assert all(b in adj[a] for a, b in itertools.combinations(nbs, 2))


def test_solvable_graph_extension_path():
    g = path_graph(3)
    verdict = solvable_graph_extension(g, (0,))
    assert verdict.is_solvable and verdict.branch == "star"
    assert verdict.kind == "fibered"


def test_solvable_graph_extension_triangle_blocked():
    g = complete_graph(3)
    verdict = solvable_graph_extension(g, (0, 1))
    assert not verdict.is_solvable
    assert verdict.witness[0] == "triangle"


def test_solvable_graph_extension_detached():
    g = Graph.of(4, [(1, 2), (3, 4)])
    verdict = solvable_graph_extension(g, (0,))
    assert verdict.is_solvable and verdict.branch == "detached_edge"


def test_graph_series_triangle_free_is_edge_order():
    for g in (graph_g1(), graph_g2()):
        series = hypersolvable_graph_series(g)
        assert series is not None and series.length == 9
        assert series.exponents == (1,) * 9
        assert series.steps == tuple(tuple(range(i + 1)) for i in range(9))


def test_graph_series_complete_graph_fibered():
    series = hypersolvable_graph_series(complete_graph(4))
    assert series is not None
    assert all(series.fibered_flags)
    assert sorted(series.exponents) == [1, 2, 3]


def test_four_cycles_listed():
    got1 = {tuple(i + 1 for i in c) for c in four_cycles(graph_g1()).cycles}
    assert got1 == {(1, 2, 7, 9), (5, 6, 7, 8)}
    got2 = {tuple(i + 1 for i in c) for c in four_cycles(graph_g2()).cycles}
    assert got2 == {(1, 2, 7, 9), (1, 6, 7, 8), (2, 6, 8, 9)}


def test_four_cycles_tree_empty():
    assert four_cycles(path_graph(5)).cycles == ()


def test_triangle_free_report_values():
    rep1 = triangle_free_report(graph_g1())
    rep2 = triangle_free_report(graph_g2())
    assert rep1.pi1_rank == rep2.pi1_rank == 9
    assert rep1.betti2 == rep2.betti2 == 36
    assert rep1.coinvariants_rank == 2 and rep2.coinvariants_rank == 3
    assert rep1.exponents == (1,) * 9
    assert not rep1.pi2_zero
    assert distinct_homotopy_2_types(rep1, rep2)
    assert rep1.model == "torus-skeleton (heuristic beyond coinvariants)"


def test_triangle_free_report_tree():
    rep = triangle_free_report(path_graph(4))
    assert rep.pi2_zero and rep.coinvariants_rank == 0
    assert rep.presentation is None


def test_triangle_free_report_square():
    rep = triangle_free_report(cycle_graph(4))
    assert rep.coinvariants_rank == 1
    pres = rep.presentation
    assert pres.n_generators == 1 and pres.n_relations == 1
    # single generator row: the broken circuit (first three edges); the one
    # relation kills the loop of the dropped top edge
    entry = pres.entries[0][0]
    from hyparr.laurent import LaurentPoly

    assert entry == LaurentPoly.generator_loop(pres.variables, 3).scaled(-1)
    # its coinvariants: evaluation at the trivial character is the zero map
    assert pres.is_eps_minimal()


def test_triangle_free_report_rejects_triangles():
    with pytest.raises(InputError):
        triangle_free_report(complete_graph(3))


def test_triangle_free_presentation_coinvariants_rank():
    from hyparr.fitting import coker_dim_at
    from hyparr.gaussian import GaussianRational

    for g in (graph_g1(), graph_g2()):
        rep = triangle_free_report(g)
        ones = tuple(GaussianRational.of(1) for _ in range(rep.num_edges))
        assert coker_dim_at(rep.presentation, ones) == rep.coinvariants_rank


def test_graph_series_matches_arrangement_series():
    # a graph has a solvable chain exactly when its arrangement does, with
    # the same exponent multiset
    from hyparr.hypersolvable import composition_series

    rng = Random(606)
    for _ in range(40):
        g = random_graph(rng, max_vertices=7, max_edges=9)
        g_series = hypersolvable_graph_series(g)
        a_series = composition_series(graphic_arrangement(g))
        assert (g_series is None) == (a_series is None)
        if g_series is not None:
            assert sorted(g_series.exponents) == sorted(a_series.exponents)
            assert g_series.length == a_series.length


def _simple_cycles_edge_sets(g: Graph) -> set[frozenset[int]]:
    # brute force: an edge subset is a simple cycle iff it is connected and
    # every touched vertex has degree exactly two
    out = set()
    for size in range(3, g.num_edges + 1):
        for combo in itertools.combinations(range(g.num_edges), size):
            deg: dict[int, int] = {}
            for i in combo:
                for v in g.edges[i]:
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            touched = set(deg)
            adj: dict[int, list[int]] = {v: [] for v in touched}
            for i in combo:
                a, b = g.edges[i]
                adj[a].append(b)
                adj[b].append(a)
            seen = {next(iter(touched))}
            stack = [next(iter(touched))]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == touched:
                out.add(frozenset(combo))
    return out


def test_graph_cycles_are_matroid_circuits():
    from hyparr.arrangement import circuits

    rng = Random(777)
    for _ in range(12):
        g = random_graph(rng, max_vertices=6, max_edges=8)
        arr = graphic_arrangement(g)
        matroid = {frozenset(c) for c in circuits(arr, g.num_edges).circuits}
        assert matroid == _simple_cycles_edge_sets(g)


def test_graph_nbc_formula():
    # the graded basis counts subgraphs that avoid every broken circuit,
    # where a broken circuit is a cycle minus its highest edge
    from hyparr.orlik_solomon import nbc_basis

    rng = Random(888)
    for _ in range(8):
        g = random_graph(rng, max_vertices=6, max_edges=8)
        broken = {
            frozenset(sorted(c)[:-1]) for c in _simple_cycles_edge_sets(g)
        }
        counts: dict[int, int] = {}
        for size in range(g.num_edges + 1):
            total = 0
            for combo in itertools.combinations(range(g.num_edges), size):
                cset = frozenset(combo)
                if not any(b <= cset for b in broken):
                    total += 1
            counts[size] = total
        dims = nbc_basis(graphic_arrangement(g)).dims()
        for size, total in counts.items():
            got = dims[size] if size < len(dims) else 0
            assert got == total


def test_parse_graph_files():
    g1 = load_graph(DATA / "g1.graph")
    assert g1 == graph_g1()
    g2 = load_graph(DATA / "g2.graph")
    assert g2 == graph_g2()


@pytest.mark.parametrize(
    "text",
    ["", "vertices x\n1 2", "vertices 3\n1", "vertices 3\n1 2\n1 b"],
)
def test_parse_graph_errors(text):
    with pytest.raises(InputError):
        parse_graph(text)
