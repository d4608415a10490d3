"""Sequence predicates and row / anti-diagonal log-concavity scans of tables.

Every inequality is decided by integer arithmetic only. Predicates are total
on non-negative sequences; sequences of length <= 2 pass vacuously.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from pascaldet.core_arrays import (
    ExactSequence,
    Table,
    antidiagonal_sequence,
    as_sequence,
    row_sequence,
)
from pascaldet.det_array import Verdict
from pascaldet.errors import DomainError, PreconditionError

SeqLike = ExactSequence | Sequence[int]


@dataclass(frozen=True)
class SequenceReport:
    passed: bool
    property: str
    origin: str
    first_violation: int | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "origin": self.origin,
            "property": self.property,
            "passed": self.passed,
            "first_violation": self.first_violation,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def _interior_scan(s: SeqLike, name: str, ok) -> SequenceReport:
    seq = as_sequence(s)
    a = seq.values
    for i in range(1, len(a) - 1):
        if not ok(a[i - 1], a[i], a[i + 1]):
            return SequenceReport(False, name, str(seq.origin), i, (a[i - 1], a[i], a[i + 1]))
    return SequenceReport(True, name, str(seq.origin))


def is_log_concave(s: SeqLike) -> SequenceReport:
    return _interior_scan(s, "log-concave", lambda lo, mid, hi: lo * hi <= mid * mid)


def is_concave(s: SeqLike) -> SequenceReport:
    return _interior_scan(s, "concave", lambda lo, mid, hi: lo + hi <= 2 * mid)


def is_symmetric(s: SeqLike) -> SequenceReport:
    seq = as_sequence(s)
    a = seq.values
    n = len(a) - 1
    for i in range(len(a) // 2):
        if a[i] != a[n - i]:
            return SequenceReport(False, "symmetric", str(seq.origin), i, (a[i], a[n - i]))
    return SequenceReport(True, "symmetric", str(seq.origin))


def poly_is_log_concave(coeffs: SeqLike) -> SequenceReport:
    """Coefficients listed from the constant term upward."""
    return is_log_concave(coeffs)


def cross_ratio_check(s: SeqLike, n: int) -> Verdict:
    """``a_2 a_{n+1} >= a_1 a_{n+2}`` for a positive log-concave ``a_1, a_2, ...``.

    Indexing is one-based: ``a_1`` is ``s[0]``.
    """
    seq = as_sequence(s)
    a = seq.values
    if n < 1 or len(a) < n + 2:
        raise DomainError(f"need n >= 1 and at least n + 2 = {n + 2} terms, got n={n}, {len(a)} terms")
    if any(x <= 0 for x in a):
        raise PreconditionError("cross-ratio inequality needs strictly positive terms")
    lc = is_log_concave(seq)
    if not lc:
        raise PreconditionError(f"sequence is not log-concave (first violation at {lc.first_violation})")
    left = a[1] * a[n]
    right = a[0] * a[n + 1]
    if left >= right:
        return Verdict(True, 1)
    return Verdict(False, 1, {"n": n, "left": left, "right": right})


@dataclass(frozen=True)
class AdjacentMinorReport:
    table_id: str
    row_max: int
    col_max: int
    passed: bool
    checked: int
    first_negative: tuple[int, int] | None = None
    value: int | None = None

    def __bool__(self) -> bool:
        return self.passed


def adjacent_minors_scan(t: Table, row_max: int, col_max: int) -> AdjacentMinorReport:
    """Every 2x2 minor anchored at ``(i, j)``, ``0 <= i <= row_max``, ``0 <= j <= col_max``."""
    if row_max < 0 or col_max < 0 or row_max + 1 >= t.rows or col_max + 1 >= t.cols:
        raise DomainError(f"adjacent minors up to ({row_max}, {col_max}) need cells outside {t.table_id}")
    g = t.entries
    checked = 0
    for i in range(row_max + 1):
        top, bottom = g[i], g[i + 1]
        for j in range(col_max + 1):
            checked += 1
            m = top[j] * bottom[j + 1] - top[j + 1] * bottom[j]
            if m < 0:
                return AdjacentMinorReport(t.table_id, row_max, col_max, False, checked, (i, j), m)
    return AdjacentMinorReport(t.table_id, row_max, col_max, True, checked)


def table_row_lc(t: Table, i_max: int, length: int) -> list[SequenceReport]:
    return [is_log_concave(row_sequence(t, i, length)) for i in range(i_max + 1)]


def table_antidiag_lc(t: Table, d_max: int) -> list[SequenceReport]:
    return [is_log_concave(antidiagonal_sequence(t, d)) for d in range(d_max + 1)]


@dataclass(frozen=True)
class ImplicationReport:
    """One finite instance of: anti-diagonal log-concave and non-negative
    adjacent minors imply row log-concave."""

    antidiagonals_ok: bool
    minors_ok: bool
    rows_ok: bool
    witness: object = None

    @property
    def status(self) -> str:
        if not (self.antidiagonals_ok and self.minors_ok):
            return "premise failed"
        return "holds" if self.rows_ok else "violated"

    @property
    def passed(self) -> bool:
        # a failed premise makes the implication vacuously true
        return self.status != "violated"

    def __bool__(self) -> bool:
        return self.passed


def corollary_2_4_check(t: Table, n: int) -> ImplicationReport:
    """Check the implication on the window of cells ``[0, n] x [0, n]``."""
    if n < 1 or n >= t.rows or n >= t.cols:
        raise DomainError(f"window [0, {n}]^2 not inside {t.table_id}")
    diag = table_antidiag_lc(t, n)
    minors = adjacent_minors_scan(t, n - 1, n - 1)
    rows = table_row_lc(t, n, n + 1)
    diag_ok = all(diag)
    rows_ok = all(rows)
    witness = None
    if not diag_ok:
        witness = next(r for r in diag if not r)
    elif not minors.passed:
        witness = minors
    elif not rows_ok:
        witness = next(r for r in rows if not r)
    return ImplicationReport(diag_ok, minors.passed, rows_ok, witness)
