from math import comb

import pytest
from hypothesis import given, strategies as st

from pascaldet import DomainError, PreconditionError, Table, build_det_array, build_pascal_table
from pascaldet.logconcavity import (
    adjacent_minors_scan,
    corollary_2_4_check,
    cross_ratio_check,
    is_concave,
    is_log_concave,
    is_symmetric,
    poly_is_log_concave,
    table_antidiag_lc,
    table_row_lc,
)


def test_log_concave_examples():
    assert is_log_concave([1, 3, 3, 1])
    r = is_log_concave([1, 1, 2])
    assert not r and r.first_violation == 1 and r.witness == (1, 1, 2)
    assert is_log_concave([1, 4, 6, 4, 1])
    assert is_log_concave([5]) and is_log_concave([0, 9])


def test_concave_examples():
    assert is_concave([1, 2, 1])
    r = is_concave([1, 2, 4])
    assert not r and r.first_violation == 1
    assert is_concave([0, 0, 0])


def test_symmetric_examples():
    assert is_symmetric([1, 4, 6, 4, 1])
    assert not is_symmetric([1, 2, 3])
    assert is_symmetric([7])


def test_poly():
    assert poly_is_log_concave([1, 2, 1])
    assert not poly_is_log_concave([1, 1, 2])
    assert poly_is_log_concave([4])


@given(st.lists(st.integers(0, 10**6), min_size=1, max_size=20))
def test_witness_reproduces_verdict(seq):
    r = is_log_concave(seq)
    if r.passed:
        assert r.first_violation is None
        assert all(seq[i - 1] * seq[i + 1] <= seq[i] ** 2 for i in range(1, len(seq) - 1))
    else:
        lo, mid, hi = r.witness
        assert lo * hi > mid * mid
        assert (lo, mid, hi) == tuple(seq[r.first_violation - 1 : r.first_violation + 2])


def test_cross_ratio_examples():
    assert cross_ratio_check([1, 5, 10, 10, 5, 1], 2).passed
    assert cross_ratio_check([1, 3, 6, 10, 15], 3).passed
    # n = 1 is log-concavity at the second term
    assert cross_ratio_check([2, 3, 4], 1).passed


def test_cross_ratio_preconditions():
    with pytest.raises(PreconditionError):
        cross_ratio_check([1, 1, 2, 3], 1)
    with pytest.raises(PreconditionError):
        cross_ratio_check([0, 1, 1], 1)
    with pytest.raises(DomainError):
        cross_ratio_check([1, 2, 1], 2)


@st.composite
def positive_log_concave(draw):
    # successive ratios non-increasing: build from integer geometric-like pieces
    n = draw(st.integers(3, 15))
    seq = [draw(st.integers(1, 50))]
    for _ in range(n - 1):
        seq.append(draw(st.integers(1, 60)))
    seq = sorted(seq)
    peak = draw(st.integers(0, n - 1))
    cand = seq[: peak + 1] + sorted(seq[peak + 1 :], reverse=True)
    return cand


@given(positive_log_concave())
def test_cross_ratio_universal(seq):
    if not is_log_concave(seq):
        return
    for n in range(1, len(seq) - 1):
        assert cross_ratio_check(seq, n).passed


@given(st.integers(1, 6), st.integers(1, 30), st.integers(1, 30))
def test_cross_ratio_on_binomial_products(k, a, b):
    # products of binomial rows are log-concave; a natural generator
    seq = [comb(a, t) * comb(b, t) for t in range(min(a, b) + 1)]
    for n in range(1, len(seq) - 1):
        assert cross_ratio_check(seq, n).passed


def test_pascal_row_ratio_formula():
    for n in range(1, 31):
        for k in range(1, n):
            lhs = comb(n, k) ** 2 * (k * (n - k))
            rhs = comb(n, k - 1) * comb(n, k + 1) * ((k + 1) * (n - k + 1))
            assert lhs == rhs
            assert is_log_concave([comb(n, r) for r in range(n + 1)])


def test_pascal_column_ratio_formula():
    for n in range(0, 31):
        for i in range(1, 30):
            lhs = comb(n + i, i) ** 2 * i * (n + i + 1)
            rhs = comb(n + i - 1, i - 1) * comb(n + i + 1, i + 1) * (n + i) * (i + 1)
            assert lhs >= rhs
            assert lhs == rhs  # the ratio of the two sides is exactly 1 in cross-multiplied form


def test_antidiagonals_symmetric():
    t = build_pascal_table(25, 25)
    for d in range(25):
        from pascaldet import antidiagonal_sequence

        assert is_symmetric(antidiagonal_sequence(t, d))


def test_adjacent_minors():
    t = build_pascal_table(12, 12)
    assert adjacent_minors_scan(t, 10, 10).passed
    pd2 = build_det_array(2, 12, 12)
    assert adjacent_minors_scan(pd2, 10, 10).passed
    r = adjacent_minors_scan(Table(((1, 2), (3, 1))), 0, 0)
    assert not r and r.first_negative == (0, 0) and r.value == -5
    with pytest.raises(DomainError):
        adjacent_minors_scan(t, 11, 0)


def test_pascal_adjacent_minors_are_narayana():
    from pascaldet.identities import narayana_closed_form

    t = build_pascal_table(12, 12)
    for i in range(10):
        for j in range(10):
            m = t.entry(i, j) * t.entry(i + 1, j + 1) - t.entry(i, j + 1) * t.entry(i + 1, j)
            assert m == narayana_closed_form(i + j + 1, j + 1)


def test_table_scans():
    assert all(table_row_lc(build_pascal_table(11, 11), 10, 11))
    assert all(table_row_lc(build_det_array(2, 11, 11), 10, 11))
    assert all(table_row_lc(build_det_array(5, 9, 9), 8, 9))
    assert all(table_antidiag_lc(build_pascal_table(13, 13), 12))
    assert all(table_antidiag_lc(build_det_array(2, 13, 13), 12))
    assert table_antidiag_lc(build_pascal_table(1, 1), 0)[0].passed


def test_corollary_instances():
    for k in range(1, 5):
        rep = corollary_2_4_check(build_det_array(k, 12, 12), 11)
        assert rep.status == "holds"
    assert corollary_2_4_check(build_pascal_table(12, 12), 11).status == "holds"
    bad = Table(((1, 2, 1), (3, 1, 1), (1, 1, 1)))
    rep = corollary_2_4_check(bad, 2)
    assert rep.status == "premise failed" and rep.passed


def test_corollary_violation_reported():
    # anti-diagonals log-concave, minors non-negative, first row not log-concave
    t = Table(((1, 1, 5), (1, 5, 30), (1, 6, 40)))
    rep = corollary_2_4_check(t, 2)
    assert rep.antidiagonals_ok and rep.minors_ok
    assert rep.status == "violated" and not rep.passed
