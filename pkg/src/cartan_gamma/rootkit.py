"""Exact construction of finite irreducible root systems.

Roots are integer coefficient vectors over the simple-root basis; the
invariant product is fixed by a rational Gram matrix normalized so that
long roots have squared length 2.  Everything here is integer/rational
arithmetic; no floating point enters at any stage.

Numbering of simple roots follows the standard plates (for the exceptional
types: node 2 is the branch vertex attached to node 4 in the E series;
F4 has the two long roots first; G2 starts with the short root).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidRank, NotARoot

Root = tuple[int, ...]
Matrix = tuple[tuple[Q, ...], ...]

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class RootSystemLabel:
    """Family letter plus rank, e.g. E8 or B6."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_RANGE:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"in {lo}..{hi}"
            raise InvalidRank(f"{self.family}{self.rank}: rank must be {bound}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemLabel":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in _RANK_RANGE or not text[1:].isdigit():
            raise InvalidRank(f"cannot parse root-system label {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _gram(label: RootSystemLabel) -> Matrix:
    """Simple-root Gram matrix with long-root norm 2."""
    fam, n = label.family, label.rank
    g = [[Q(0)] * n for _ in range(n)]

    def chain(norm: Q, upto: int, off: Q) -> None:
        for i in range(upto):
            g[i][i] = norm
        for i in range(upto - 1):
            g[i][i + 1] = g[i + 1][i] = off

    if fam == "A":
        chain(Q(2), n, Q(-1))
    elif fam == "B":
        chain(Q(2), n, Q(-1))
        g[n - 1][n - 1] = Q(1)  # last simple root is short
    elif fam == "C":
        chain(Q(1), n - 1, Q(-1, 2))
        g[n - 1][n - 1] = Q(2)  # last simple root is long
        g[n - 2][n - 1] = g[n - 1][n - 2] = Q(-1)
    elif fam == "D":
        chain(Q(2), n, Q(-1))
        g[n - 2][n - 1] = g[n - 1][n - 2] = Q(0)
        g[n - 3][n - 1] = g[n - 1][n - 3] = Q(-1)
    elif fam == "E":
        # Chain 1-3-4-...-n with the branch node 2 attached to node 4.
        for i in range(n):
            g[i][i] = Q(2)
        edges = [(1, 3), (2, 4)] + [(k, k + 1) for k in range(3, n)]
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = Q(-1)
    elif fam == "F":
        g[0][0] = g[1][1] = Q(2)
        g[2][2] = g[3][3] = Q(1)
        g[0][1] = g[1][0] = Q(-1)
        g[1][2] = g[2][1] = Q(-1)
        g[2][3] = g[3][2] = Q(-1, 2)
    elif fam == "G":
        g[0][0] = Q(2, 3)
        g[1][1] = Q(2)
        g[0][1] = g[1][0] = Q(-1)
    return tuple(tuple(row) for row in g)


@dataclass(frozen=True)
class RootSystem:
    """Immutable exact model of one finite irreducible root system.

    ``positive_roots`` is sorted by (height, coefficients) and contains
    integer coefficient vectors over the simple roots.  ``marks`` and
    ``comarks`` have length rank+1 and start with the affine entry 1.
    ``cartan[i][j]`` is the pairing of simple root i against simple
    coroot j, i.e. 2(a_i|a_j)/(a_j|a_j).
    """

    label: RootSystemLabel
    gram: Matrix
    positive_roots: tuple[Root, ...]
    cartan: tuple[tuple[int, ...], ...]
    h: int
    h_dual: int
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    highest_root: Root

    @property
    def rank(self) -> int:
        return self.label.rank

    def simple_root(self, i: int) -> Root:
        """Coefficient vector of the i-th simple root (1-based)."""
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def inner(self, v: Sequence[int], w: Sequence[int]) -> Q:
        """Exact invariant product of two coefficient vectors."""
        total = Q(0)
        for i, vi in enumerate(v):
            if vi:
                row = self.gram[i]
                total += vi * sum(row[j] * wj for j, wj in enumerate(w) if wj)
        return total

    def norm(self, alpha: Sequence[int]) -> Q:
        return self.inner(alpha, alpha)

    def is_root(self, v: Sequence[int]) -> bool:
        t = tuple(v)
        neg = tuple(-c for c in t)
        return t in self._root_set or neg in self._root_set

    @property
    def _root_set(self) -> frozenset:
        # Cached on first use; object.__setattr__ because the dataclass is frozen.
        cached = self.__dict__.get("_root_set_cache")
        if cached is None:
            cached = frozenset(self.positive_roots)
            object.__setattr__(self, "_root_set_cache", cached)
        return cached

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise NotARoot(f"simple-root index {i} out of range 1..{self.rank}")


def _closure(gram: Matrix) -> list[Root]:
    """Generate all positive roots from the simple ones.

    A candidate alpha + a_i is accepted exactly when the a_i-string through
    alpha ascends: q = p - <alpha, a_i-coroot> > 0, where p counts how far
    the string descends inside the already-known roots.
    """
    n = len(gram)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    def ip(v: Root, w: Root) -> Q:
        return sum(gram[i][j] * v[i] * w[j]
                   for i in range(n) if v[i] for j in range(n) if w[j])

    roots: set[Root] = set(simples)
    frontier: list[Root] = list(simples)
    while frontier:
        grown: list[Root] = []
        for alpha in frontier:
            for i, s in enumerate(simples):
                pairing = 2 * ip(alpha, s) / gram[i][i]
                p = 0
                down = tuple(a - b for a, b in zip(alpha, s))
                while all(c >= 0 for c in down) and down in roots:
                    p += 1
                    down = tuple(a - b for a, b in zip(down, s))
                if p - pairing > 0:
                    up = tuple(a + b for a, b in zip(alpha, s))
                    if up not in roots:
                        roots.add(up)
                        grown.append(up)
        frontier = grown
    return sorted(roots, key=lambda v: (sum(v), v))


@lru_cache(maxsize=None)
def build_root_system(label: RootSystemLabel) -> RootSystem:
    """Construct the full exact data set for one label.

    Raises InvalidRank for out-of-range labels (via RootSystemLabel).
    """
    gram = _gram(label)
    n = label.rank
    positives = _closure(gram)

    theta = positives[-1]
    h = sum(theta) + 1
    if len(positives) * 2 != n * h:
        raise AssertionError(f"{label}: root count {len(positives)} != rank*h/2")

    marks = (1,) + theta
    if sum(marks) != h:
        raise AssertionError(f"{label}: marks do not sum to the Coxeter number")

    comarks_q = [Q(1)] + [marks[i + 1] * gram[i][i] / 2 for i in range(n)]
    if any(c.denominator != 1 or c <= 0 for c in comarks_q):
        raise AssertionError(f"{label}: comarks are not positive integers")
    comarks = tuple(int(c) for c in comarks_q)

    cartan_q = [[2 * gram[i][j] / gram[j][j] for j in range(n)] for i in range(n)]
    if any(c.denominator != 1 for row in cartan_q for c in row):
        raise AssertionError(f"{label}: Cartan entries are not integers")
    cartan = tuple(tuple(int(c) for c in row) for row in cartan_q)

    return RootSystem(
        label=label,
        gram=gram,
        positive_roots=tuple(positives),
        cartan=cartan,
        h=h,
        h_dual=sum(comarks),
        marks=marks,
        comarks=comarks,
        highest_root=theta,
    )


def height(rs: RootSystem, alpha: Sequence[int]) -> int:
    """Coefficient sum of a positive root; equals its pairing with the
    half-sum of positive coroots under the long-norm-2 normalization."""
    t = tuple(alpha)
    if t not in rs._root_set:
        raise NotARoot(f"{t} is not a positive root of {rs.label}")
    return sum(t)


def coroot_pairing(rs: RootSystem, alpha: Sequence[int], i: int) -> int:
    """(alpha-coroot | a_i) = 2(alpha|a_i)/(alpha|alpha), an exact integer."""
    t = tuple(alpha)
    if not rs.is_root(t):
        raise NotARoot(f"{t} is not a root of {rs.label}")
    rs._check_index(i)
    value = 2 * rs.inner(t, rs.simple_root(i)) / rs.norm(t)
    if value.denominator != 1:
        raise AssertionError("coroot pairing is not an integer")
    return int(value)


def simple_coroot_pairing(rs: RootSystem, alpha: Sequence[int], i: int) -> int:
    """(alpha | a_i-coroot) = 2(alpha|a_i)/(a_i|a_i), an exact integer."""
    t = tuple(alpha)
    if not rs.is_root(t):
        raise NotARoot(f"{t} is not a root of {rs.label}")
    rs._check_index(i)
    value = 2 * rs.inner(t, rs.simple_root(i)) / rs.gram[i - 1][i - 1]
    if value.denominator != 1:
        raise AssertionError("simple-coroot pairing is not an integer")
    return int(value)


def affine_cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """(r+1)x(r+1) generalized Cartan matrix of the untwisted affine extension.

    Index 0 corresponds to the negated highest root.  Rows are oriented so
    that the marks vector spans the kernel; the transpose (the dual affine
    matrix, see :func:`affine_cartan_matrix_dual`) has the comarks vector in
    its kernel.
    """
    n = rs.rank
    alpha0 = tuple(-c for c in rs.highest_root)
    basis = [alpha0] + [rs.simple_root(i) for i in range(1, n + 1)]

    def norm(v):
        return rs.inner(v, v)

    rows = []
    for vi in basis:
        row = []
        for vj in basis:
            entry = 2 * rs.inner(vi, vj) / norm(vi)
            if entry.denominator != 1:
                raise AssertionError("affine Cartan entry is not an integer")
            row.append(int(entry))
        rows.append(tuple(row))
    return tuple(rows)


def affine_cartan_matrix_dual(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Transpose of the affine matrix; its kernel contains the comarks."""
    a = affine_cartan_matrix(rs)
    m = len(a)
    return tuple(tuple(a[j][i] for j in range(m)) for i in range(m))


def rational_nullspace(matrix: Iterable[Iterable]) -> list[tuple[Q, ...]]:
    """Exact kernel basis of a rational matrix via fraction-free elimination."""
    rows = [list(map(Q, row)) for row in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: dict[int, list[Q]] = {}
    for row in rows:
        for col in sorted(pivots):
            if row[col]:
                factor = row[col] / pivots[col][col]
                row[:] = [a - factor * b for a, b in zip(row, pivots[col])]
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is not None:
            pivots[lead] = row
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Q(0)] * ncols
        vec[f] = Q(1)
        for col in sorted(pivots, reverse=True):
            row = pivots[col]
            vec[col] = -sum(row[j] * vec[j] for j in range(col + 1, ncols)) / row[col]
        basis.append(tuple(vec))
    return basis
