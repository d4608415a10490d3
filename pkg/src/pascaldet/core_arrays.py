"""The Khayyam-Pascal squared array ``P[i][j] = C(i+j, i)`` and sequence views of tables.

Indexing is zero-based, ``i`` the row and ``j`` the column; anti-diagonal ``d``
is the set of cells with ``i + j = d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from pascaldet.errors import DomainError

Grid = tuple[tuple[int, ...], ...]


def _check_index(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"index must be a non-negative integer, got {v!r}")


def binomial(n: int, k: int) -> int:
    _check_index(n, k)
    if k > n:
        raise DomainError(f"binomial({n}, {k}): k exceeds n")
    return math.comb(n, k)


def pascal_entry(i: int, j: int) -> int:
    _check_index(i, j)
    return math.comb(i + j, i)


@dataclass(frozen=True)
class Table:
    """Immutable rectangular grid of exact integers.

    Base for :class:`PascalTable` and the determinantal arrays; also used
    directly for handcrafted tables in checks.
    """

    entries: Grid
    name: str = "table"
    rows: int = field(init=False)
    cols: int = field(init=False)

    def __post_init__(self) -> None:
        grid = tuple(tuple(int(x) for x in row) for row in self.entries)
        if not grid or not grid[0]:
            raise DomainError("table must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DomainError("table rows have unequal lengths")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)

    @property
    def table_id(self) -> str:
        return f"{self.name}[{self.rows}x{self.cols}]"

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DomainError(f"cell ({i}, {j}) outside {self.table_id}")
        return self.entries[i][j]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entry(*ij)


@dataclass(frozen=True)
class PascalTable(Table):
    name: str = "pascal"


def build_pascal_table(rows: int, cols: int) -> PascalTable:
    """Fill a ``rows x cols`` window by anti-diagonal wavefronts of ``u = v + w``."""
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise DomainError(f"table dimensions must be >= 1, got {rows}x{cols}")
    grid = [[0] * cols for _ in range(rows)]
    for d in range(rows + cols - 1):
        for i in range(max(0, d - cols + 1), min(d, rows - 1) + 1):
            j = d - i
            if i == 0 or j == 0:
                grid[i][j] = 1
            else:
                grid[i][j] = grid[i - 1][j] + grid[i][j - 1]
    return PascalTable(tuple(map(tuple, grid)))


@dataclass(frozen=True)
class SequenceOrigin:
    axis: str  # "row", "column", "antidiagonal" or "literal"
    index: int | None = None
    source: str = ""

    def __str__(self) -> str:
        if self.axis == "literal":
            return "literal"
        return f"{self.axis} {self.index} of {self.source}"


@dataclass(frozen=True)
class ExactSequence:
    values: tuple[int, ...]
    origin: SequenceOrigin = SequenceOrigin("literal")

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise DomainError("sequence must have at least one term")
        if any(v < 0 for v in vals):
            raise DomainError("sequence terms must be non-negative")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, idx):
        return self.values[idx]

    def __iter__(self):
        return iter(self.values)


def as_sequence(s: ExactSequence | Sequence[int]) -> ExactSequence:
    return s if isinstance(s, ExactSequence) else ExactSequence(tuple(s))


def row_sequence(t: Table, i: int, length: int) -> ExactSequence:
    if length < 1 or not (0 <= i < t.rows) or length > t.cols:
        raise DomainError(f"row {i} of length {length} not inside {t.table_id}")
    return ExactSequence(t.entries[i][:length], SequenceOrigin("row", i, t.table_id))


def column_sequence(t: Table, j: int, length: int) -> ExactSequence:
    if length < 1 or not (0 <= j < t.cols) or length > t.rows:
        raise DomainError(f"column {j} of length {length} not inside {t.table_id}")
    vals = tuple(t.entries[i][j] for i in range(length))
    return ExactSequence(vals, SequenceOrigin("column", j, t.table_id))


def antidiagonal_sequence(t: Table, d: int) -> ExactSequence:
    """Cells ``(i, d - i)`` for ``i = 0..d``, i.e. from the top-right end to the bottom-left end."""
    if d < 0 or d >= t.rows or d >= t.cols:
        raise DomainError(f"anti-diagonal {d} not entirely inside {t.table_id}")
    vals = tuple(t.entries[i][d - i] for i in range(d + 1))
    return ExactSequence(vals, SequenceOrigin("antidiagonal", d, t.table_id))
