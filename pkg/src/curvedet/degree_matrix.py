"""Exact integer degree-matrix algebra.

A grid of integers is *homogeneous* when every 2x2 submatrix
[[a, b], [c, e]] satisfies a + e = b + c; equivalently the entries
decompose as m[i][j] = u[i] + v[j] for a row potential u and a column
potential v.  Such grids record the entry degrees of matrices of
homogeneous forms: a square homogeneous grid has a well-defined degree
(any transversal sum), and an (n-1) x n grid presents the generator and
syzygy degrees of a codimension-two ideal through its maximal minors.

All row/column positions in the public API are 1-based, matching the
usual matrix notation; permutations are tuples of original 1-based
indices in their new order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import IncompatibleRowError, NotHomogeneousError

Grid = tuple[tuple[int, ...], ...]

#: Entries beyond this magnitude are rejected: degrees in practice are tiny,
#: and the cap keeps every transversal sum far from any integer-width limit.
ENTRY_BOUND = 10**6


def _as_grid(grid) -> Grid:
    rows = tuple(tuple(row) for row in grid)
    if not rows or not rows[0]:
        raise ValueError("grid must be non-empty")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"ragged grid: row {i + 1} has {len(row)} entries, expected {width}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"grid entries must be integers, got {x!r}")
            if abs(x) > ENTRY_BOUND:
                raise ValueError(f"entry {x} exceeds the supported bound {ENTRY_BOUND}")
    return rows


def potentials(grid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a homogeneous grid into (row, column) potentials with v[1] = 0.

    Raises NotHomogeneousError carrying a violating 2x2 block if the grid
    is not homogeneous.  The normalization v[1] = 0 makes the pair unique.
    """
    rows = _as_grid(grid)
    base = rows[0][0]
    u = tuple(row[0] for row in rows)
    v = tuple(x - base for x in rows[0])
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x != u[i] + v[j]:
                # The block on rows (1, i+1) and columns (1, j+1) is a witness.
                raise NotHomogeneousError(1, 1, i + 1, j + 1)
    return u, v


def grid_from_potentials(u, v) -> Grid:
    """Rebuild the grid m[i][j] = u[i] + v[j]; inverse of `potentials`."""
    return tuple(tuple(ui + vj for vj in v) for ui in u)


def is_homogeneous(grid) -> bool:
    try:
        potentials(grid)
    except NotHomogeneousError:
        return False
    return True


def transversal_degree(grid) -> int:
    """Degree of a square homogeneous grid: the common transversal sum."""
    rows = _as_grid(grid)
    if len(rows) != len(rows[0]):
        raise ValueError("transversal degree requires a square grid")
    potentials(rows)
    return sum(rows[i][i] for i in range(len(rows)))


@dataclass(frozen=True)
class DegreeMatrix:
    """A homogeneous integer grid together with its canonical potentials."""

    entries: Grid
    row_potentials: tuple[int, ...]
    col_potentials: tuple[int, ...]

    @classmethod
    def from_grid(cls, grid) -> "DegreeMatrix":
        rows = _as_grid(grid)
        u, v = potentials(rows)
        return cls(rows, u, v)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def is_well_ordered(self) -> bool:
        """Entries non-increasing downward, non-decreasing rightward."""
        u, v = self.row_potentials, self.col_potentials
        return all(u[i] >= u[i + 1] for i in range(len(u) - 1)) and all(
            v[j] <= v[j + 1] for j in range(len(v) - 1)
        )


@dataclass(frozen=True)
class WellOrderedSquare:
    """A well-ordered homogeneous n x n grid and its degree."""

    base: DegreeMatrix

    def __post_init__(self):
        if self.base.rows != self.base.cols:
            raise ValueError("expected a square grid")
        if not self.base.is_well_ordered():
            raise ValueError("grid is not well-ordered; use canonicalize()")

    @property
    def n(self) -> int:
        return self.base.rows

    @property
    def entries(self) -> Grid:
        return self.base.entries

    @cached_property
    def degree(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    @cached_property
    def subdiagonal(self) -> tuple[int, ...]:
        """Entries m[k][k-1] for k = 2..n (in that order)."""
        return tuple(self.entries[k][k - 1] for k in range(1, self.n))


@dataclass(frozen=True)
class DHBMatrix:
    """A well-ordered homogeneous (n-1) x n degree Hilbert-Burch candidate.

    `minor_degrees[j]` is the degree of the maximal minor that erases
    column j; `shifts[i]` is the twist of the i-th syzygy, so that
    entries satisfy q[i][j] = shifts[i] - minor_degrees[j].  The matrix
    is a valid presentation of a non-empty zero-dimensional scheme
    exactly when the diagonal is non-negative and not identically zero.
    """

    base: DegreeMatrix

    def __post_init__(self):
        if self.base.rows + 1 != self.base.cols:
            raise ValueError(f"expected an (n-1) x n grid, got {self.base.rows} x {self.base.cols}")
        if not self.base.is_well_ordered():
            raise ValueError("grid is not well-ordered; use canonicalize()")

    @property
    def n(self) -> int:
        return self.base.cols

    @property
    def entries(self) -> Grid:
        return self.base.entries

    @cached_property
    def minor_degrees(self) -> tuple[int, ...]:
        """Transversal degree of each column-erased square, non-increasing."""
        q = self.entries
        n = self.n
        out = []
        for j in range(n):
            # row i pairs with column i when i < j, with column i+1 otherwise
            out.append(
                sum(q[i][i] for i in range(j)) + sum(q[i][i + 1] for i in range(j, n - 1))
            )
        return tuple(out)

    @cached_property
    def shifts(self) -> tuple[int, ...]:
        """Syzygy degrees b with q[i][j] = b[i] - a[j]; non-increasing."""
        a0 = self.minor_degrees[0]
        return tuple(a0 + row[0] for row in self.entries)

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[k][k] for k in range(self.n - 1))

    @cached_property
    def subdiagonal(self) -> tuple[int, ...]:
        """Entries q[k][k-1] for k = 2..n-1 (empty when n <= 2)."""
        return tuple(self.entries[k][k - 1] for k in range(1, self.n - 1))

    @cached_property
    def diag_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.diagonal)

    @cached_property
    def max_diag_positive(self) -> bool:
        return max(self.diagonal) > 0

    @property
    def is_valid(self) -> bool:
        return self.diag_nonnegative and self.max_diag_positive

    @cached_property
    def is_numerically_minimal(self) -> bool:
        """True when no minor degree equals a shift, i.e. no entry is zero."""
        return all(x != 0 for row in self.entries for x in row)


def canonicalize(grid):
    """Sort a homogeneous grid into canonical well-ordered form.

    Rows are sorted by row potential non-increasing and columns by
    column potential non-decreasing; ties keep the original order.
    Returns (matrix, row_perm, col_perm) where the matrix is a
    WellOrderedSquare for square input and a DHBMatrix for (n-1) x n
    input, and the permutations list original 1-based indices in their
    new order.  Other shapes are rejected.
    """
    rows = _as_grid(grid)
    u, v = potentials(rows)
    r, c = len(rows), len(rows[0])
    row_order = sorted(range(r), key=lambda i: -u[i])
    col_order = sorted(range(c), key=lambda j: v[j])
    sorted_entries = tuple(tuple(rows[i][j] for j in col_order) for i in row_order)
    shift = v[col_order[0]]
    new_u = tuple(u[i] + shift for i in row_order)
    new_v = tuple(v[j] - shift for j in col_order)
    base = DegreeMatrix(sorted_entries, new_u, new_v)
    row_perm = tuple(i + 1 for i in row_order)
    col_perm = tuple(j + 1 for j in col_order)
    if r == c:
        return WellOrderedSquare(base), row_perm, col_perm
    if r + 1 == c:
        return DHBMatrix(base), row_perm, col_perm
    raise ValueError(f"unsupported shape {r} x {c}: expected n x n or (n-1) x n")


def insert_row_sorted(Q: DHBMatrix, row) -> tuple[WellOrderedSquare, int]:
    """Insert a compatible row into Q at its well-ordered position.

    The row must have constant sum with the minor degrees (row[j] + a[j]
    independent of j), which is exactly homogeneity of the extended
    grid.  A new row tying with existing rows lands below them.
    Returns the square matrix and the 1-based landing position.
    """
    row = tuple(row)
    a = Q.minor_degrees
    n = Q.n
    if len(row) != n:
        raise IncompatibleRowError(f"row has {len(row)} entries, expected {n}")
    t = row[0] + a[0]
    if any(row[j] + a[j] != t for j in range(n)):
        raise IncompatibleRowError("row breaks homogeneity: row[j] + minor_degrees[j] is not constant")
    b = Q.shifts
    pos = sum(1 for bi in b if bi >= t)  # 0-based insertion index
    entries = Q.entries[:pos] + (row,) + Q.entries[pos:]
    u = tuple(bi - a[0] for bi in b)
    new_u = u[:pos] + (t - a[0],) + u[pos:]
    base = DegreeMatrix(entries, new_u, Q.base.col_potentials)
    return WellOrderedSquare(base), pos + 1


def erase_row(M: WellOrderedSquare, i: int) -> DHBMatrix:
    """Erase the i-th row (1-based) of a square, keeping well-ordering.

    The result is a candidate presentation matrix; inspect its
    `diag_nonnegative` / `max_diag_positive` flags to see whether it
    actually presents a (non-empty) zero-dimensional scheme.
    """
    n = M.n
    if not 1 <= i <= n:
        raise ValueError(f"row index {i} out of range 1..{n}")
    entries = M.entries[: i - 1] + M.entries[i:]
    u = M.base.row_potentials
    base = DegreeMatrix(entries, u[: i - 1] + u[i:], M.base.col_potentials)
    return DHBMatrix(base)
