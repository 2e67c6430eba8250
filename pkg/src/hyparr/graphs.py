"""Graphs and their arrangements of difference hyperplanes.

Each edge {i, j} contributes the hyperplane z_i = z_j, so three dual points
are collinear exactly when their edges form a triangle.  That dictionary
turns chordality into supersolvability (a perfect elimination order is a
fibered series) and triangles into collinearity, so triangle-free graphs are
hypersolvable one edge at a time, with second homotopy controlled by their
4-cycles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import Arrangement
from .chain_complex import PresentationMatrix, skeleton_presentation, torus_complex
from .errors import InputError, SearchBudgetExceeded
from .orlik_solomon import poincare_polynomial
from .polynomials import IntPolynomial

TORUS_SKELETON_MODEL = "torus-skeleton (heuristic beyond coinvariants)"
DEFAULT_GRAPH_BUDGET = 500_000


@dataclass(frozen=True)
class Graph:
    """Vertices 1..m, no isolated vertices, simple unordered edges."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for e in self.edges:
            i, j = e
            if i == j:
                raise InputError(f"loop at vertex {i}")
            norm.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(norm))
        if len(set(self.edges)) != len(self.edges):
            raise InputError("duplicate edge")
        touched = {v for e in self.edges for v in e}
        expected = set(range(1, self.num_vertices + 1))
        if not touched <= expected:
            raise InputError("edge endpoint out of the vertex range")
        if touched != expected:
            raise InputError("isolated vertices are not allowed")

    @staticmethod
    def of(num_vertices: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        return Graph(num_vertices, tuple((int(a), int(b)) for a, b in pairs))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.num_vertices + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}


@dataclass(frozen=True)
class CycleSet:
    cycles: tuple[tuple[int, ...], ...]  # edge-index tuples, sorted

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class GraphExtensionVerdict:
    kind: str  # 'not_solvable' | 'fibered' | 'singular'
    branch: str | None = None  # 'detached_edge' | 'star'
    witness: tuple = ()

    @property
    def is_solvable(self) -> bool:
        return self.kind != "not_solvable"


@dataclass(frozen=True)
class GraphSeries:
    steps: tuple[tuple[int, ...], ...]  # growing edge-index sets
    exponents: tuple[int, ...]
    fibered_flags: tuple[bool, ...]

    @property
    def length(self) -> int:
        return len(self.steps)


def graphic_arrangement(G: Graph) -> Arrangement:
    """One hyperplane z_i - z_j per edge, in edge-list order."""
    rows = []
    for i, j in G.edges:
        row = [0] * G.num_vertices
        row[i - 1], row[j - 1] = 1, -1
        rows.append(row)
    return Arrangement.of(G.num_vertices, rows, central=True)


def _components(vertices: set[int], edges: Iterable[tuple[int, int]]) -> int:
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(v) for v in vertices})


def _edge_rank(edges: Sequence[tuple[int, int]]) -> int:
    """Matroid rank of an edge set: touched vertices minus components."""
    touched = {v for e in edges for v in e}
    if not touched:
        return 0
    return len(touched) - _components(touched, edges)


def chromatic_polynomial(G: Graph) -> IntPolynomial:
    """Deletion-contraction with memoization on relabeled edge sets."""
    memo: dict[tuple[int, tuple[tuple[int, int], ...]], IntPolynomial] = {}
    T = IntPolynomial.of((0, 1))

    def canon(nv: int, edges: frozenset[tuple[int, int]]
              ) -> tuple[int, tuple[tuple[int, int], ...]]:
        order: dict[int, int] = {}
        out = []
        for i, j in sorted(edges):
            for v in (i, j):
                if v not in order:
                    order[v] = len(order)
            a, b = order[i], order[j]
            out.append((min(a, b), max(a, b)))
        return nv, tuple(sorted(out))

    def rec(nv: int, edges: frozenset[tuple[int, int]]) -> IntPolynomial:
        if not edges:
            poly = IntPolynomial.one()
            for _ in range(nv):
                poly = poly * T
            return poly
        key = canon(nv, edges)
        got = memo.get(key)
        if got is not None:
            return got
        e = min(edges)
        i, j = e
        deleted = rec(nv, edges - {e})
        merged = set()
        for a, b in edges - {e}:
            a = i if a == j else a
            b = i if b == j else b
            if a != b:
                merged.add((min(a, b), max(a, b)))
        contracted = rec(nv - 1, frozenset(merged))
        out = deleted - contracted
        memo[key] = out
        return out

    return rec(G.num_vertices, frozenset(G.edges))


def poincare_from_chromatic(G: Graph) -> IntPolynomial:
    """The substitution (-T)^m chi(-1/T), already a polynomial of degree rank.

    The vertex-count factor of the chromatic polynomial lands in the top
    coefficients and disappears; no extra normalization is needed.
    """
    chi = chromatic_polynomial(G)
    m = G.num_vertices
    coeffs = [0] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = (-1) ** (m + k) * chi[k]
    return IntPolynomial.of(coeffs)


def triangles(G: Graph) -> tuple[tuple[int, int, int], ...]:
    adj = G.adjacency()
    out = []
    for i, j, k in itertools.combinations(range(1, G.num_vertices + 1), 3):
        if j in adj[i] and k in adj[i] and k in adj[j]:
            out.append((i, j, k))
    return tuple(out)


def is_triangle_free(G: Graph) -> bool:
    return not triangles(G)


def is_chordal(G: Graph) -> bool:
    """Repeatedly remove a simplicial vertex; success means chordal."""
    return _perfect_elimination(G) is not None


def _perfect_elimination(G: Graph) -> list[int] | None:
    adj = {v: set(nb) for v, nb in G.adjacency().items()}
    alive = set(adj)
    removal: list[int] = []
    while alive:
        pick = None
        for v in sorted(alive):
            nbs = adj[v] & alive
            if all(b in adj[a] for a, b in itertools.combinations(sorted(nbs), 2)):
                pick = v
                break
        if pick is None:
            return None
        removal.append(pick)
        alive.remove(pick)
    return removal


def supersolvable_series(G: Graph) -> tuple[int, ...] | None:
    """A vertex build order whose neighbor sets arrive as cliques.

    Reversing a perfect elimination order does it: each added vertex sees a
    complete neighborhood among the vertices already present.
    """
    removal = _perfect_elimination(G)
    if removal is None:
        return None
    return tuple(reversed(removal))


def solvable_graph_extension(G: Graph, K_edges: Iterable[int]) -> GraphExtensionVerdict:
    """Decide solvability of the subgraph pair (G, K) in graph terms.

    Condition (1): no triangle of G with two K-edges and one new edge.
    Condition (2): the new edges are a single edge detached from K's
    vertices, or a star from one vertex onto a clique of K.
    """
    K = frozenset(K_edges)
    all_idx = frozenset(range(G.num_edges))
    if not K or not K < all_idx:
        raise InputError("need a nonempty proper edge subset")
    new = sorted(all_idx - K)
    k_edge_set = {G.edges[i] for i in K}
    k_vertices = {v for e in k_edge_set for v in e}
    adj_k: dict[int, set[int]] = {}
    for a, b in k_edge_set:
        adj_k.setdefault(a, set()).add(b)
        adj_k.setdefault(b, set()).add(a)

    for idx in new:
        u, w = G.edges[idx]
        common = adj_k.get(u, set()) & adj_k.get(w, set())
        if common:
            x = min(common)
            return GraphExtensionVerdict(
                "not_solvable", None, ("triangle", (u, w, x))
            )

    new_edges = [G.edges[i] for i in new]
    shape_ok = False
    branch = None
    if len(new_edges) == 1 and not (set(new_edges[0]) & k_vertices):
        shape_ok, branch = True, "detached_edge"
    else:
        centers = set(new_edges[0])
        for e in new_edges[1:]:
            centers &= set(e)
        for v in sorted(centers):
            tips = [a if b == v else b for a, b in new_edges]
            if len(set(tips)) != len(tips) or v in tips:
                continue
            if not set(tips) <= k_vertices:
                continue
            clique = all(
                (min(a, b), max(a, b)) in k_edge_set
                for a, b in itertools.combinations(sorted(set(tips)), 2)
            )
            if clique:
                shape_ok, branch = True, "star"
                break
    if not shape_ok:
        return GraphExtensionVerdict(
            "not_solvable", None, ("shape", tuple(new_edges))
        )
    rank_all = _edge_rank([G.edges[i] for i in sorted(all_idx)])
    rank_k = _edge_rank(sorted(k_edge_set))
    kind = "fibered" if rank_all == rank_k + 1 else "singular"
    return GraphExtensionVerdict(kind, branch)


def _graph_candidate_blocks(G: Graph, state: frozenset[int]) -> list[tuple[int, ...]]:
    """New-edge blocks allowed over the current subgraph, sorted."""
    eidx = G.edge_index()
    state_edges = {G.edges[i] for i in state}
    state_vertices = {v for e in state_edges for v in e}
    adj_state: dict[int, set[int]] = {}
    for a, b in state_edges:
        adj_state.setdefault(a, set()).add(b)
        adj_state.setdefault(b, set()).add(a)
    rest = [i for i in range(G.num_edges) if i not in state]

    def no_double_triangle(u: int, w: int) -> bool:
        return not (adj_state.get(u, set()) & adj_state.get(w, set()))

    blocks: set[tuple[int, ...]] = set()
    for i in rest:
        u, w = G.edges[i]
        if set((u, w)) & state_vertices:
            continue
        blocks.add((i,))  # detached edge; triangle condition is vacuous
    for v in range(1, G.num_vertices + 1):
        avail = []
        for w in range(1, G.num_vertices + 1):
            if w == v or w not in state_vertices:
                continue
            e = (min(v, w), max(v, w))
            i = eidx.get(e)
            if i is None or i in state:
                continue
            if not no_double_triangle(v, w):
                continue
            avail.append((w, i))
        for size in range(1, len(avail) + 1):
            for combo in itertools.combinations(avail, size):
                ws = [w for w, _ in combo]
                if not all(
                    b in adj_state.get(a, set())
                    for a, b in itertools.combinations(ws, 2)
                ):
                    continue  # tips must span a clique of the state
                blocks.add(tuple(sorted(i for _, i in combo)))
    return sorted(blocks, key=lambda s: (len(s), s))


def hypersolvable_graph_series(G: Graph, *, budget: int = DEFAULT_GRAPH_BUDGET
                               ) -> GraphSeries | None:
    """Backtracking search for a chain of solvable subgraph extensions."""
    full = frozenset(range(G.num_edges))
    failed: set[frozenset[int]] = set()
    nodes = 0

    def dfs(state: frozenset[int]) -> list[frozenset[int]] | None:
        nonlocal nodes
        if state == full:
            return []
        if state in failed:
            return None
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"graph series search exceeded {budget} nodes",
                                       nodes=nodes)
        for block in _graph_candidate_blocks(G, state):
            new = state | frozenset(block)
            tail = dfs(new)
            if tail is not None:
                return [new] + tail
        failed.add(state)
        return None

    for first in range(G.num_edges):
        start = frozenset((first,))
        tail = dfs(start)
        if tail is not None:
            chain = [start] + tail
            steps = tuple(tuple(sorted(s)) for s in chain)
            sizes = [len(steps[0])] + [
                len(steps[i]) - len(steps[i - 1]) for i in range(1, len(steps))
            ]
            flags = []
            prev_rank = 0
            for s in steps:
                r = _edge_rank([G.edges[i] for i in s])
                flags.append(r == prev_rank + 1)
                prev_rank = r
            return GraphSeries(steps, tuple(sizes), tuple(flags))
    return None


def four_cycles(G: Graph) -> CycleSet:
    """All simple 4-cycles as edge-index sets, deterministically ordered.

    Counted through pairs of common neighbors: vertices u, w with two common
    neighbors x != y span the cycle u-x-w-y-u.
    """
    adj = G.adjacency()
    eidx = G.edge_index()

    def idx(a: int, b: int) -> int:
        return eidx[(min(a, b), max(a, b))]

    seen: set[tuple[int, ...]] = set()
    for u, w in itertools.combinations(range(1, G.num_vertices + 1), 2):
        common = sorted((adj[u] & adj[w]) - {u, w})
        for x, y in itertools.combinations(common, 2):
            cycle = tuple(sorted((idx(u, x), idx(x, w), idx(w, y), idx(y, u))))
            seen.add(cycle)
    return CycleSet(tuple(sorted(seen)))


@dataclass(frozen=True)
class TriangleFreeReport:
    graph: Graph
    num_edges: int
    exponents: tuple[int, ...]
    pi1_rank: int
    betti2: int
    four_cycles: CycleSet
    pi2_zero: bool
    coinvariants_rank: int
    model: str
    presentation: PresentationMatrix | None


def triangle_free_report(G: Graph) -> TriangleFreeReport:
    """Second-homotopy summary available directly from a triangle-free graph.

    The fundamental group is free abelian on the edges and the coinvariants
    of the second homotopy group are free abelian on the 4-cycles.  The
    emitted presentation restricts the torus model to the rows indexed by
    broken 4-circuits (each 4-cycle minus its highest edge); beyond its
    cokernel-of-augmentation data it is a tagged heuristic model, which the
    `model` field records.
    """
    tri = triangles(G)
    if tri:
        raise InputError(f"graph has a 3-cycle on vertices {tri[0]}")
    n = G.num_edges
    arr = graphic_arrangement(G)
    betti2 = poincare_polynomial(arr)[2]
    cycles = four_cycles(G)
    pres = None
    if cycles.cycles and n >= 3:
        Y = torus_complex(n)
        full = skeleton_presentation(Y, 2)
        broken_rows = []
        basis = list(itertools.combinations(range(n), 3))
        pos = {b: i for i, b in enumerate(basis)}
        for cyc in cycles.cycles:
            broken = tuple(sorted(cyc)[:3])  # drop the highest edge index
            broken_rows.append(pos[broken])
        entries = tuple(full.entries[i] for i in broken_rows)
        pres = PresentationMatrix(
            variables=full.variables,
            entries=entries,
            generator_labels=tuple(full.generator_labels[i] for i in broken_rows),
            relation_labels=full.relation_labels,
        )
    return TriangleFreeReport(
        graph=G,
        num_edges=n,
        exponents=(1,) * n,
        pi1_rank=n,
        betti2=betti2,
        four_cycles=cycles,
        pi2_zero=not cycles.cycles,
        coinvariants_rank=len(cycles.cycles),
        model=TORUS_SKELETON_MODEL,
        presentation=pres,
    )


def distinct_homotopy_2_types(r1: TriangleFreeReport, r2: TriangleFreeReport) -> bool:
    """Certified distinction: matching low invariants, different coinvariants."""
    return (
        r1.pi1_rank == r2.pi1_rank
        and r1.betti2 == r2.betti2
        and r1.coinvariants_rank != r2.coinvariants_rank
    )


# -- text format --------------------------------------------------------------
#
# line 1: vertices <m>; then one edge per line 'i j'; '#' comments.


def parse_graph(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty graph file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "vertices":
        raise InputError("header must be: vertices <m>")
    try:
        m = int(header[1])
    except ValueError as exc:
        raise InputError(f"bad vertex count {header[1]!r}") from exc
    pairs = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise InputError(f"bad edge line {line!r}")
        try:
            pairs.append((int(toks[0]), int(toks[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line {line!r}") from exc
    return Graph.of(m, pairs)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
