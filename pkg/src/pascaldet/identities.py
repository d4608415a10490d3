"""Exact checks of the determinantal identities satisfied by Pascal and ``PD_k`` arrays.

All comparisons are exact: integers are compared directly, ratios as
:class:`fractions.Fraction` or by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from pascaldet.core_arrays import PascalTable, Table, binomial, build_pascal_table
from pascaldet.det_array import DetArrayTable, Verdict, build_det_array, det_entry
from pascaldet.determinant import MinorSpec, det_bareiss, minor
from pascaldet.errors import DomainError


@dataclass(frozen=True)
class ParallelepipedCells:
    anchor: tuple[int, int]
    anchor2: tuple[int, int]
    u: int
    v: int
    w: int
    u2: int
    v2: int
    w2: int

    @classmethod
    def from_table(cls, t: Table, i: int, j: int, i2: int, j2: int) -> "ParallelepipedCells":
        if min(i, j, i2, j2) < 1:
            raise DomainError("parallelepiped anchors need i, j >= 1 so both parents exist")
        return cls(
            (i, j), (i2, j2),
            t.entry(i, j), t.entry(i - 1, j), t.entry(i, j - 1),
            t.entry(i2, j2), t.entry(i2 - 1, j2), t.entry(i2, j2 - 1),
        )

    def faces(self) -> tuple[int, int, int]:
        """The three face determinants |u v; u' v'|, |w v; w' v'|, |w u; w' u'|."""
        return (
            self.u * self.v2 - self.u2 * self.v,
            self.w * self.v2 - self.w2 * self.v,
            self.w * self.u2 - self.w2 * self.u,
        )


def parallelepiped_check(t: Table, i: int, j: int, i2: int, j2: int) -> Verdict:
    cells = ParallelepipedCells.from_table(t, i, j, i2, j2)
    uv, wv, wu = cells.faces()
    if uv != wv:
        return Verdict(False, 1, {"identity": "i", "anchor": (i, j), "anchor2": (i2, j2), "left": uv, "right": wv})
    if wv != wu:
        return Verdict(False, 1, {"identity": "ii", "anchor": (i, j), "anchor2": (i2, j2), "left": wv, "right": wu})
    return Verdict(True, 1)


def parallelepiped_sweep(max_index: int, t: PascalTable | None = None) -> Verdict:
    """Both identities for every pair of anchors in ``[1, max_index]^2``."""
    if max_index < 1:
        raise DomainError("max_index must be >= 1")
    if t is None:
        t = build_pascal_table(max_index + 1, max_index + 1)
    cells = [
        (i, j, t.entry(i, j), t.entry(i - 1, j), t.entry(i, j - 1))
        for i in range(1, max_index + 1)
        for j in range(1, max_index + 1)
    ]
    checked = 0
    for i, j, u, v, w in cells:
        for i2, j2, u2, v2, w2 in cells:
            checked += 1
            uv = u * v2 - u2 * v
            wv = w * v2 - w2 * v
            wu = w * u2 - w2 * u
            if uv != wv or wv != wu:
                return replace(parallelepiped_check(t, i, j, i2, j2), checked=checked)
    return Verdict(True, checked)


@dataclass(frozen=True)
class StarWeight:
    order: int
    anchor: tuple[int, int]
    offsets: tuple[int, int]
    value: Fraction


def star_weight(k: int, i: int, j: int, m: int, l: int) -> StarWeight:
    if min(i, j, m, l) < 0:
        raise DomainError(f"star weight needs non-negative anchor and offsets, got ({i}, {j}, {m}, {l})")
    num = det_entry(k, i + m, j + l) * det_entry(k, i, j)
    den = det_entry(k, i + m, j) * det_entry(k, i, j + l)
    if den == 0:
        raise DomainError(f"zero denominator in star weight at ({i}, {j})")
    return StarWeight(k, (i, j), (m, l), Fraction(num, den))


def star_invariance_check(k: int, s: int, m: int, l: int) -> Verdict:
    """The weight with offsets ``(m, l)`` is one rational for every anchor on anti-diagonal ``s``."""
    if s < 0:
        raise DomainError("anti-diagonal index must be >= 0")
    first = None
    for i in range(s + 1):
        w = star_weight(k, i, s - i, m, l).value
        if first is None:
            first = w
        elif w != first:
            return Verdict(False, i + 1, {
                "k": k, "s": s, "m": m, "l": l,
                "anchor": (i, s - i), "left": w, "anchor0": (0, s), "right": first,
            })
    return Verdict(True, s + 1)


def backdiag_product(dt: Table, i: int, j: int, r: int) -> int:
    """Product of the anti-diagonal of the ``r x r`` window at ``(i, j)``."""
    if r < 1 or i < 0 or j < 0 or i + r > dt.rows or j + r > dt.cols:
        raise DomainError(f"{r}x{r} window at ({i}, {j}) outside {dt.table_id}")
    p = 1
    for a in range(r):
        p *= dt.entry(i + a, j + r - 1 - a)
    return p


@dataclass(frozen=True)
class RatioWitness:
    order: int
    r: int
    anchor: tuple[int, int]
    anchor2: tuple[int, int]
    minor: int
    minor2: int
    backdiag: int
    backdiag2: int
    status: str  # "pass", "mismatch" or "zero_denominator"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def left(self) -> Fraction | None:
        return Fraction(self.minor, self.minor2) if self.minor2 else None

    @property
    def right(self) -> Fraction | None:
        return Fraction(self.backdiag, self.backdiag2) if self.backdiag2 else None


def ratio_identity_check(dt: DetArrayTable, r: int, i: int, j: int, i2: int, j2: int) -> RatioWitness:
    if i + j != i2 + j2:
        raise DomainError(f"anchors ({i}, {j}) and ({i2}, {j2}) are not on one anti-diagonal")
    m1 = det_bareiss(minor(dt, MinorSpec(i, j, r)))
    m2 = det_bareiss(minor(dt, MinorSpec(i2, j2, r)))
    b1 = backdiag_product(dt, i, j, r)
    b2 = backdiag_product(dt, i2, j2, r)
    if m2 == 0 or b2 == 0:
        status = "zero_denominator"
    elif m1 * b2 == m2 * b1:
        status = "pass"
    else:
        status = "mismatch"
    return RatioWitness(getattr(dt, "order", 0), r, (i, j), (i2, j2), m1, m2, b1, b2, status)


def ratio_identity_sweep(k: int, r: int, max_d: int) -> Verdict:
    """Every anchor pair ``i < i2`` on each anti-diagonal ``s <= max_d``."""
    if r < 1 or max_d < 0:
        raise DomainError("need r >= 1 and max_d >= 0")
    dt = build_det_array(k, max_d + r, max_d + r)
    checked = 0
    for s in range(max_d + 1):
        for i in range(s + 1):
            for i2 in range(i + 1, s + 1):
                checked += 1
                w = ratio_identity_check(dt, r, i, s - i, i2, s - i2)
                if not w.passed:
                    return Verdict(False, checked, {
                        "k": k, "r": r, "s": s, "kind": w.status,
                        "anchor": w.anchor, "anchor2": w.anchor2,
                        "left": w.left if w.left is not None else f"{w.minor}/{w.minor2}",
                        "right": w.right if w.right is not None else f"{w.backdiag}/{w.backdiag2}",
                    })
    return Verdict(True, checked)


def narayana_closed_form(n: int, r: int) -> int:
    if not (1 <= r <= n):
        raise DomainError(f"Narayana number needs 1 <= r <= n, got n={n}, r={r}")
    q, rem = divmod(binomial(n, r) * binomial(n, r - 1), n)
    assert rem == 0
    return q


def narayana_map_check(i_max: int, j_max: int) -> Verdict:
    """``PD_2[i][j] == N(i+j+1, j+1)`` on ``[0, i_max] x [0, j_max]``."""
    checked = 0
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            checked += 1
            left = det_entry(2, i, j)
            right = narayana_closed_form(i + j + 1, j + 1)
            if left != right:
                return Verdict(False, checked, {"i": i, "j": j, "left": left, "right": right})
    return Verdict(True, checked)
