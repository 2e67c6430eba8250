"""Exact arrangements of hyperplanes over the rationals.

An arrangement is an ordered list of pairwise non-proportional linear forms.
Forms are canonicalized on construction (first nonzero coefficient scaled to
1) so proportionality and duplicate detection are plain equality tests.  All
values are immutable and safe to share across threads; every operation here
is a pure function of its arguments.

Only rank queries, rank-2 collinearity data and small circuits are computed;
no intersection-lattice structure above rank 2 is ever built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, WorkBoundExceeded
from .linalg import rank_fraction


@dataclass(frozen=True)
class LinearForm:
    """A nonzero form c . z + c0; central forms have c0 = 0."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        if all(c == 0 for c in self.coefficients):
            raise InputError("degenerate form: zero coefficient vector")

    @staticmethod
    def of(coefficients: Iterable, constant=0) -> "LinearForm":
        return LinearForm(
            tuple(Fraction(c) for c in coefficients), Fraction(constant)
        )

    def canonical(self) -> "LinearForm":
        lead = next(c for c in self.coefficients if c != 0)
        if lead == 1:
            return self
        return LinearForm(
            tuple(c / lead for c in self.coefficients), self.constant / lead
        )

    @property
    def dim(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    forms: tuple[LinearForm, ...]
    central: bool

    def __post_init__(self):
        canon = tuple(f.canonical() for f in self.forms)
        object.__setattr__(self, "forms", canon)
        for f in canon:
            if f.dim != self.ambient_dim:
                raise InputError("form dimension does not match ambient dimension")
            if self.central and f.constant != 0:
                raise InputError("central arrangement with a nonzero constant term")
        if len(set(canon)) != len(canon):
            raise InputError("proportional (duplicate) hyperplanes")

    @staticmethod
    def of(ambient_dim: int, rows: Iterable[Sequence], central: bool) -> "Arrangement":
        """Rows carry ambient_dim coefficients, plus a constant when affine."""
        forms = []
        for row in rows:
            row = list(row)
            if central:
                if len(row) != ambient_dim:
                    raise InputError("central row must have ambient_dim entries")
                forms.append(LinearForm.of(row))
            else:
                if len(row) != ambient_dim + 1:
                    raise InputError("affine row must have ambient_dim+1 entries")
                forms.append(LinearForm.of(row[:-1], row[-1]))
        return Arrangement(ambient_dim, tuple(forms), central)

    def __len__(self) -> int:
        return len(self.forms)

    def coefficient_rows(self) -> list[list[Fraction]]:
        return [list(f.coefficients) for f in self.forms]


@dataclass(frozen=True)
class CollinearityData:
    """All maximal sets (size >= 3) of forms spanning a 2-dimensional space."""

    lines: tuple[tuple[int, ...], ...]

    def line_through(self, a: int, b: int) -> tuple[int, ...] | None:
        for line in self.lines:
            if a in line and b in line:
                return line
        return None


@dataclass(frozen=True)
class CircuitList:
    circuits: tuple[tuple[int, ...], ...]


def rank(arr: Arrangement) -> int:
    """Dimension of the rational span of the coefficient vectors."""
    return rank_fraction(arr.coefficient_rows())


def rank_deficit(arr: Arrangement) -> int:
    """Ambient dimension minus rank; 0 means essential.

    Essentialization itself is never performed: every invariant computed by
    this package depends only on the underlying matroid, which an
    essentialization preserves.  The deficit is reported for diagnostics.
    """
    return arr.ambient_dim - rank(arr)


def cone(arr: Arrangement) -> Arrangement:
    """Homogenize with a new last coordinate and append that hyperplane."""
    if arr.central:
        raise InputError("cone of an already-central arrangement")
    rows = [list(f.coefficients) + [f.constant] for f in arr.forms]
    rows.append([Fraction(0)] * arr.ambient_dim + [Fraction(1)])
    return Arrangement.of(arr.ambient_dim + 1, rows, central=True)


def decone(arr: Arrangement, h: int) -> Arrangement:
    """Set the chosen form equal to 1, eliminate a coordinate, drop the form.

    The eliminated coordinate is the last one supporting the chosen form, so
    deconing a cone at its appended hyperplane recovers the original affine
    forms exactly.
    """
    if not arr.central:
        raise InputError("decone requires a central arrangement")
    if not 0 <= h < len(arr.forms):
        raise InputError("decone index out of range")
    f = arr.forms[h]
    j = max(i for i, c in enumerate(f.coefficients) if c != 0)
    cj = f.coefficients[j]
    rows = []
    for k, g in enumerate(arr.forms):
        if k == h:
            continue
        coeffs = [
            g.coefficients[i] - g.coefficients[j] * f.coefficients[i] / cj
            for i in range(arr.ambient_dim)
            if i != j
        ]
        constant = g.coefficients[j] / cj  # from substituting f = 1
        rows.append(coeffs + [constant])
    return Arrangement.of(arr.ambient_dim - 1, rows, central=False)


def rank2_flats(arr: Arrangement) -> CollinearityData:
    """Maximal collinear index sets of size >= 3 among the dual points.

    Deterministic ordering: by smallest member, then lexicographically.
    Distinct flats share at most one index.
    """
    if not arr.central:
        raise InputError("rank-2 data requires a central arrangement")
    rows = arr.coefficient_rows()
    n = len(rows)
    seen: set[tuple[int, ...]] = set()
    for i, j in itertools.combinations(range(n), 2):
        members = [i, j]
        for k in range(n):
            if k in (i, j):
                continue
            if rank_fraction([rows[i], rows[j], rows[k]]) == 2:
                members.append(k)
        if len(members) >= 3:
            seen.add(tuple(sorted(members)))
    return CollinearityData(tuple(sorted(seen)))


def circuits(arr: Arrangement, max_size: int, *, max_hyperplanes: int = 20) -> CircuitList:
    """All circuits of size <= max_size of the linear matroid of the forms.

    Subset enumeration with independence pruning; exponential in |A|, hence
    the hyperplane-count guard.
    """
    if not arr.central:
        raise InputError("circuits require a central arrangement")
    n = len(arr.forms)
    if max_size > n:
        raise InputError("max_size exceeds the number of hyperplanes")
    if n > max_hyperplanes:
        raise WorkBoundExceeded(
            f"circuit enumeration capped at {max_hyperplanes} hyperplanes (got {n})"
        )
    rows = arr.coefficient_rows()
    independent: set[frozenset[int]] = {frozenset()}
    found: list[tuple[int, ...]] = []
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(range(n), size):
            s = frozenset(combo)
            if any(s - {x} not in independent for x in combo):
                continue  # contains a smaller dependency
            if rank_fraction([rows[i] for i in combo]) == size:
                independent.add(s)
            else:
                found.append(combo)
    found.sort(key=lambda c: (len(c), c))
    return CircuitList(tuple(found))


# -- text format ------------------------------------------------------------
#
# line 1:  dim <m> central|affine
# then one form per line: m rationals (plus a trailing constant when affine),
# whitespace-separated; '#' starts a comment.


def parse_arrangement(text: str) -> Arrangement:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty arrangement file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "dim":
        raise InputError("header must be: dim <m> central|affine")
    try:
        dim = int(header[1])
    except ValueError as exc:
        raise InputError(f"bad dimension {header[1]!r}") from exc
    if dim < 1:
        raise InputError("ambient dimension must be positive")
    if header[2] not in ("central", "affine"):
        raise InputError("mode must be 'central' or 'affine'")
    central = header[2] == "central"
    rows = []
    for line in lines[1:]:
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational in line {line!r}") from exc
    return Arrangement.of(dim, rows, central)


def format_arrangement(arr: Arrangement) -> str:
    out = [f"dim {arr.ambient_dim} {'central' if arr.central else 'affine'}"]
    for f in arr.forms:
        toks = [str(c) for c in f.coefficients]
        if not arr.central:
            toks.append(str(f.constant))
        out.append(" ".join(toks))
    return "\n".join(out) + "\n"


def load_arrangement(path) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


# -- stock constructions ----------------------------------------------------


def boolean_arrangement(n: int) -> Arrangement:
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return Arrangement.of(n, rows, central=True)


def braid_arrangement(num_coords: int) -> Arrangement:
    """All z_i - z_j for i < j, in lexicographic (i, j) order."""
    rows = []
    for i, j in itertools.combinations(range(num_coords), 2):
        row = [Fraction(0)] * num_coords
        row[i], row[j] = Fraction(1), Fraction(-1)
        rows.append(row)
    return Arrangement.of(num_coords, rows, central=True)
