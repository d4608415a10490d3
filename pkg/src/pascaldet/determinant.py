"""Exact integer determinants and contiguous square minors of tables.

Bareiss elimination is the primary engine; Dodgson condensation is kept as an
independent cross-check. Both run on the kernel backend chosen at import.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Iterator, Sequence

from pascaldet._backend import kernels
from pascaldet.core_arrays import Table
from pascaldet.errors import DomainError


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        grid = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(grid)
        if n < 1 or any(len(row) != n for row in grid):
            raise DomainError("matrix must be square with size >= 1")
        object.__setattr__(self, "entries", grid)

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MinorSpec:
    top: int
    left: int
    size: int

    def __post_init__(self) -> None:
        if self.top < 0 or self.left < 0 or self.size < 1:
            raise DomainError(f"invalid minor window {self}")


MatrixLike = ExactMatrix | Sequence[Sequence[int]]

_collectors: list[set] = []


@contextlib.contextmanager
def collect_minors() -> Iterator[set]:
    """Record every matrix handed to :func:`det_bareiss` inside the block."""
    seen: set = set()
    _collectors.append(seen)
    try:
        yield seen
    finally:
        _collectors.remove(seen)


def _grid(m: MatrixLike) -> tuple[tuple[int, ...], ...]:
    return m.entries if isinstance(m, ExactMatrix) else ExactMatrix(tuple(map(tuple, m))).entries


def minor(t: Table, spec: MinorSpec) -> ExactMatrix:
    i, j, k = spec.top, spec.left, spec.size
    if i + k > t.rows or j + k > t.cols:
        raise DomainError(f"{k}x{k} window at ({i}, {j}) exceeds {t.table_id}")
    return ExactMatrix(tuple(row[j : j + k] for row in t.entries[i : i + k]))


def det_bareiss(m: MatrixLike) -> int:
    g = _grid(m)
    for seen in _collectors:
        seen.add(g)
    return kernels.det_bareiss(g)


def det_condensation(m: MatrixLike) -> int:
    g = _grid(m)
    d = kernels.det_condensation(g)
    if d is None:
        # a zero interior divisor; condensation cannot proceed on this instance
        return kernels.det_bareiss(g)
    return d
