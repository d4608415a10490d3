"""Determinantal arrays ``PD_k``: entry ``(i, j)`` is the determinant of the
``k x k`` contiguous window of the Pascal array anchored at ``(i, j)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from pascaldet.core_arrays import Table, binomial, build_pascal_table, pascal_entry
from pascaldet.determinant import MinorSpec, det_bareiss, minor
from pascaldet.errors import DomainError


@dataclass(frozen=True)
class DetArrayTable(Table):
    order: int = 1
    source_rows: int = field(default=0)
    source_cols: int = field(default=0)
    name: str = "PD"

    @property
    def table_id(self) -> str:
        return f"PD_{self.order}[{self.rows}x{self.cols}]"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a sweep. ``witness`` holds the first counterexample found in
    lexicographic coordinate order, or None."""

    passed: bool
    checked: int
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.passed


def _check_order(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"order must be an integer >= 1, got {k!r}")


@lru_cache(maxsize=None)
def _det_entry(k: int, i: int, j: int) -> int:
    window = tuple(tuple(pascal_entry(i + a, j + b) for b in range(k)) for a in range(k))
    return det_bareiss(window)


def det_entry(k: int, i: int, j: int) -> int:
    _check_order(k)
    if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
        raise DomainError(f"indices must be non-negative, got ({i}, {j})")
    return _det_entry(k, i, j)


def clear_cache() -> None:
    _det_entry.cache_clear()


def build_det_array(k: int, rows: int, cols: int) -> DetArrayTable:
    _check_order(k)
    if rows < 1 or cols < 1:
        raise DomainError(f"table dimensions must be >= 1, got {rows}x{cols}")
    src = build_pascal_table(rows + k - 1, cols + k - 1)
    grid = tuple(
        tuple(det_bareiss(minor(src, MinorSpec(i, j, k))) for j in range(cols)) for i in range(rows)
    )
    return DetArrayTable(grid, order=k, source_rows=src.rows, source_cols=src.cols)


def column_identity_first(k: int, i_max: int) -> Verdict:
    """``PD_k[i][0] == 1`` for ``0 <= i <= i_max``."""
    _check_order(k)
    for i in range(i_max + 1):
        v = det_entry(k, i, 0)
        if v != 1:
            return Verdict(False, i + 1, {"k": k, "i": i, "j": 0, "left": v, "right": 1})
    return Verdict(True, i_max + 1)


def column_identity_second(k: int, i_max: int) -> Verdict:
    """``PD_k[i][1] == C(i+k, k)`` and the column is strictly increasing in ``i``."""
    _check_order(k)
    prev = None
    for i in range(i_max + 1):
        v = det_entry(k, i, 1)
        expected = binomial(i + k, k)
        if v != expected:
            return Verdict(False, i + 1, {"k": k, "i": i, "j": 1, "left": v, "right": expected})
        if prev is not None and not v > prev:
            return Verdict(
                False, i + 1, {"k": k, "i": i, "j": 1, "left": v, "right": prev, "kind": "not increasing"}
            )
        prev = v
    return Verdict(True, i_max + 1)
