"""Solvable extensions and hypersolvable composition series.

Everything is decided from rank-1 and rank-2 data: the dual points of the
hyperplanes and their collinearity relations.  A pair of sub-arrangements
(A, B) with complement written Bbar = A - B is a solvable extension when

  (I)   no point of Bbar lies on a line spanned by two points of B,
  (II)  every pair a, b in Bbar has a point f(a, b) of B on its line
        (unique once (I) holds), and
  (III) for distinct a, b, c in Bbar the points f(a,b), f(a,c), f(b,c)
        are equal or collinear.

A solvable extension either raises the rank by one (fibered) or preserves it
(singular); no other jump can occur.  An arrangement is hypersolvable when a
chain of solvable extensions climbs from a single hyperplane to the whole
arrangement, and supersolvable when some (equivalently: any) such chain is
all-fibered, which happens exactly when the chain length equals the rank.

The search below is an exhaustive memoized backtracking over index sets.
Candidate extension blocks are enumerated deterministically (size ascending,
then lexicographic), so the reported series is reproducible.  Failed states
are cached globally: whether a state can be completed depends only on the
state, not on the path that reached it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import Arrangement, CollinearityData, rank2_flats
from .errors import InputError, SearchBudgetExceeded, WorkBoundExceeded
from .linalg import rank_fraction

DEFAULT_NODE_BUDGET = 500_000
DEFAULT_MAX_HYPERPLANES = 18


@dataclass(frozen=True)
class ExtensionVerdict:
    kind: str  # 'not_solvable' | 'fibered' | 'singular'
    witness: tuple = ()

    @property
    def is_solvable(self) -> bool:
        return self.kind != "not_solvable"


@dataclass(frozen=True)
class CompositionSeries:
    steps: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]
    fibered_flags: tuple[bool, ...]

    @property
    def length(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class SeriesSearch:
    series: CompositionSeries | None
    nodes: int
    frontier: tuple[tuple[int, ...], ...]  # dead-end states, largest first


@dataclass(frozen=True)
class PointLookup:
    kind: str  # 'unique' | 'none' | 'ambiguous'
    points: tuple[int, ...]


def collinear_point(a: int, b: int, B: Iterable[int],
                    coll: CollinearityData) -> PointLookup:
    """The point of B on the line through a and b, when it exists.

    Ambiguity (two or more candidates) is reported as its own outcome: it
    certifies an axiom (I) failure for the enclosing extension rather than a
    malformed query.
    """
    if a == b:
        raise InputError("collinear_point needs two distinct points")
    B = frozenset(B)
    if a in B or b in B:
        raise InputError("query points must lie outside B")
    line = coll.line_through(a, b)
    hits = tuple(sorted(set(line or ()) & B))
    if not hits:
        return PointLookup("none", ())
    if len(hits) == 1:
        return PointLookup("unique", hits)
    return PointLookup("ambiguous", hits)


class Geometry:
    """Precomputed collinearity and rank data for one arrangement."""

    def __init__(self, arr: Arrangement):
        self.arr = arr
        self.n = len(arr.forms)
        self.coll = rank2_flats(arr)
        self.flats = [frozenset(line) for line in self.coll.lines]
        self.flats_of: dict[int, tuple[int, ...]] = {i: () for i in range(self.n)}
        self.pair_flat: dict[tuple[int, int], int] = {}
        for fid, line in enumerate(self.coll.lines):
            for i in line:
                self.flats_of[i] = self.flats_of[i] + (fid,)
            for i, j in itertools.combinations(line, 2):
                self.pair_flat[(i, j)] = fid
        self._rows = arr.coefficient_rows()
        self._rank_cache: dict[frozenset[int], int] = {frozenset(): 0}

    def rank_of(self, idxs: frozenset[int]) -> int:
        got = self._rank_cache.get(idxs)
        if got is None:
            got = rank_fraction([self._rows[i] for i in sorted(idxs)])
            self._rank_cache[idxs] = got
        return got

    def line_members(self, a: int, b: int) -> frozenset[int]:
        fid = self.pair_flat.get((a, b) if a < b else (b, a))
        return self.flats[fid] if fid is not None else frozenset((a, b))

    def collinear(self, p: int, q: int, r: int) -> bool:
        """Whether three pairwise distinct points lie on one line."""
        fid = self.pair_flat.get((p, q) if p < q else (q, p))
        return fid is not None and r in self.flats[fid]


def solvable_extension(arr: Arrangement, A_idx: Iterable[int], B_idx: Iterable[int],
                       geometry: Geometry | None = None) -> ExtensionVerdict:
    """Classify the sub-arrangement pair (A, B) by the three axioms.

    The verdict carries a violation witness: ('I', (a, p, q)) for a point of
    Bbar on the line through p, q of B; ('II', (a, b)) for a pair with no
    connecting point; ('III', (a, b, c)) for an incoherent triple.
    """
    geo = geometry or Geometry(arr)
    A = frozenset(A_idx)
    B = frozenset(B_idx)
    if not B or not B < A:
        raise InputError("need a nonempty proper sub-arrangement B of A")
    bbar = sorted(A - B)

    for a in bbar:
        for fid in geo.flats_of[a]:
            hits = sorted(geo.flats[fid] & B)
            if len(hits) >= 2:
                return ExtensionVerdict("not_solvable", ("I", (a, hits[0], hits[1])))

    fmap: dict[tuple[int, int], int] = {}
    for a, b in itertools.combinations(bbar, 2):
        hits = sorted(geo.line_members(a, b) & B)
        if not hits:
            return ExtensionVerdict("not_solvable", ("II", (a, b)))
        if len(hits) > 1:  # impossible once (I) holds
            return ExtensionVerdict("not_solvable", ("I", (a, hits[0], hits[1])))
        fmap[(a, b)] = hits[0]

    for a, b, c in itertools.combinations(bbar, 3):
        pts = {fmap[(a, b)], fmap[(a, c)], fmap[(b, c)]}
        if len(pts) == 3 and not geo.collinear(*sorted(pts)):
            return ExtensionVerdict("not_solvable", ("III", (a, b, c)))

    rank_a = geo.rank_of(A)
    rank_b = geo.rank_of(B)
    if rank_a == rank_b + 1:
        return ExtensionVerdict("fibered")
    if rank_a == rank_b:
        return ExtensionVerdict("singular")
    raise RuntimeError(
        f"solvable extension with rank jump {rank_b} -> {rank_a}; axiom check is broken"
    )


def _candidate_blocks(geo: Geometry, state: frozenset[int]) -> list[tuple[int, ...]]:
    """All Bbar blocks S making (state | S, state) solvable, sorted.

    Admissible points survive axiom (I); pairs must have a connecting point
    in the state ((II)); larger blocks are cliques in that compatibility
    relation filtered by the triple coherence test ((III)).
    """
    remaining = sorted(set(range(geo.n)) - state)
    admissible = []
    for a in remaining:
        ok = True
        for fid in geo.flats_of[a]:
            if len(geo.flats[fid] & state) >= 2:
                ok = False
                break
        if ok:
            admissible.append(a)

    fmap: dict[tuple[int, int], int] = {}
    compat: dict[int, set[int]] = {a: set() for a in admissible}
    for a, b in itertools.combinations(admissible, 2):
        hits = geo.line_members(a, b) & state
        if hits:
            (f,) = hits  # unique: admissibility already enforced axiom (I)
            fmap[(a, b)] = f
            compat[a].add(b)
            compat[b].add(a)

    blocks: list[tuple[int, ...]] = [(a,) for a in admissible]

    def grow(clique: tuple[int, ...], allowed: list[int]) -> None:
        for idx, v in enumerate(allowed):
            ok = True
            for a, b in itertools.combinations(clique, 2):
                pts = {fmap[(a, b)], fmap[(a, v)], fmap[(b, v)]}
                if len(pts) == 3 and not geo.collinear(*sorted(pts)):
                    ok = False
                    break
            if not ok:
                continue
            new = clique + (v,)
            blocks.append(new)
            grow(new, [w for w in allowed[idx + 1:] if w in compat[v]])

    for i, a in enumerate(admissible):
        grow((a,), [b for b in admissible[i + 1:] if b in compat[a]])

    blocks.sort(key=lambda s: (len(s), s))
    return blocks


def search_composition_series(arr: Arrangement, *,
                              budget: int = DEFAULT_NODE_BUDGET,
                              max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES
                              ) -> SeriesSearch:
    """Exhaustive deterministic search for a composition series.

    Returns the first series under the (size, lexicographic) candidate order,
    or None with a frontier of dead-end states.  Raises SearchBudgetExceeded
    when the node budget runs out; that abort is distinct from a negative
    verdict.
    """
    if not arr.central or not arr.forms:
        raise InputError("composition series require a nonempty central arrangement")
    n = len(arr.forms)
    if n > max_hyperplanes:
        raise WorkBoundExceeded(
            f"series search capped at {max_hyperplanes} hyperplanes (got {n})"
        )
    geo = Geometry(arr)
    full = frozenset(range(n))
    failed: set[frozenset[int]] = set()
    dead_ends: list[frozenset[int]] = []
    nodes = 0

    def dfs(state: frozenset[int]) -> list[tuple[frozenset[int], bool]] | None:
        nonlocal nodes
        if state == full:
            return []
        if state in failed:
            return None
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(
                f"series search exceeded {budget} nodes", nodes=nodes
            )
        blocks = _candidate_blocks(geo, state)
        progressed = False
        for block in blocks:
            new = state | frozenset(block)
            fibered = geo.rank_of(new) == geo.rank_of(state) + 1
            if not fibered and geo.rank_of(new) != geo.rank_of(state):
                raise RuntimeError("rank jumped by more than one in a solvable step")
            tail = dfs(new)
            progressed = True
            if tail is not None:
                return [(new, fibered)] + tail
        if not progressed:
            dead_ends.append(state)
        failed.add(state)
        return None

    for h in range(n):
        start = frozenset((h,))
        tail = dfs(start)
        if tail is not None:
            chain = [(start, True)] + tail
            steps = tuple(tuple(sorted(s)) for s, _ in chain)
            flags = tuple(flag for _, flag in chain)
            sizes = [len(steps[0])] + [
                len(steps[i]) - len(steps[i - 1]) for i in range(1, len(steps))
            ]
            series = CompositionSeries(steps, tuple(sizes), flags)
            return SeriesSearch(series, nodes, ())
    frontier = tuple(
        tuple(sorted(s))
        for s in sorted(dead_ends, key=lambda s: (-len(s), tuple(sorted(s))))[:32]
    )
    return SeriesSearch(None, nodes, frontier)


def composition_series(arr: Arrangement, *, budget: int = DEFAULT_NODE_BUDGET,
                       max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES
                       ) -> CompositionSeries | None:
    return search_composition_series(
        arr, budget=budget, max_hyperplanes=max_hyperplanes
    ).series


def is_supersolvable(arr: Arrangement, *, budget: int = DEFAULT_NODE_BUDGET,
                     max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES
                     ) -> tuple[bool, CompositionSeries | None]:
    """Whether an all-fibered series exists, with the witnessing series.

    Any series has exactly rank(A) fibered steps, and the chain length is an
    invariant of the arrangement, so the found series is all-fibered exactly
    when some all-fibered series exists.  The equivalent length == rank
    criterion is cross-validated on every call.
    """
    series = composition_series(arr, budget=budget, max_hyperplanes=max_hyperplanes)
    if series is None:
        return False, None
    all_fibered = all(series.fibered_flags)
    geo_rank = rank_fraction(arr.coefficient_rows())
    if all_fibered != (series.length == geo_rank):
        raise RuntimeError(
            "supersolvability criteria disagree: "
            f"flags={series.fibered_flags}, length={series.length}, rank={geo_rank}"
        )
    return all_fibered, (series if all_fibered else None)
