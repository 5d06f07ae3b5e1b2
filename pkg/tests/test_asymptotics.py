import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deepnodes.asymptotics import (
    LIMIT,
    DomainError,
    InsufficientOrder,
    SingularSystem,
    eval_sum_F,
    format_fraction,
    limit_gap_check,
    numeric_point,
    ratio_table,
    singular_coefficient_fit,
)

# Direct summation of 5000 terms of k v^(2k) q^k / (1 - q^k) at v = 1/2,
# times the prefactor, done once outside the library:
#   v = 0.5; q = v*(2+v)/(1+2*v)
#   pref * sum(k*v**(2*k)*q**k/(1-q**k) for k in range(1, 5001))
F_HALF = 0.11595971652778798


def test_rows_small():
    rows = ratio_table(4)
    assert [r.csv() for r in rows] == [
        "1,1,1,1.000000",
        "2,1,1,1.000000",
        "3,4,3,1.333333",
        "4,14,10,1.400000",
    ]
    assert rows[3].exact == Fraction(7, 5)


def test_table_trees_column():
    assert [r.trees for r in ratio_table(8)] == [1, 1, 3, 10, 36, 137, 543, 2219]


def test_row_invariants():
    for r in ratio_table(60):
        assert r.deepest_total >= r.trees >= 1
        assert 1 <= r.exact <= r.n
        assert abs(Fraction(r.ratio) - r.exact) <= Fraction(1, 10**6)


@pytest.mark.parametrize(
    "x, digits, text",
    [
        (Fraction(2, 3), 6, "0.666667"),
        (Fraction(7, 5), 6, "1.400000"),
        (Fraction(1, 8), 2, "0.13"),
        (Fraction(-1, 3), 3, "-0.333"),
        (Fraction(5, 2), 0, "3"),
    ],
)
def test_format_fraction(x, digits, text):
    assert format_fraction(x, digits) == text


def test_gap_at_four():
    rows = ratio_table(4)
    assert abs(rows[3].exact - LIMIT) == Fraction(4, 15)


def test_gap_check():
    rows = ratio_table(40)
    report = limit_gap_check(rows, 4, 40)
    assert report.passed and report.gap_small == Fraction(4, 15)
    with pytest.raises(InsufficientOrder):
        limit_gap_check(rows, 4, 41)
    with pytest.raises(AssertionError):
        # the ratio rises from 1 at n=1; n=2 ties it, so no improvement
        limit_gap_check(rows, 1, 2)


def test_numeric_point_domain():
    p = numeric_point(0.9)
    assert 0 < p.q < 1 and p.w > 0
    assert math.isclose(p.delta * p.q, 0.81)
    for bad in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(DomainError):
            numeric_point(bad)
        with pytest.raises(DomainError):
            eval_sum_F(bad)


def test_F_at_half_matches_direct_sum():
    assert math.isclose(eval_sum_F(0.5), F_HALF, rel_tol=1e-13)


def test_F_vanishes_near_zero():
    assert eval_sum_F(1e-6) < 1e-11
    assert eval_sum_F(1e-3) < eval_sum_F(1e-2) < eval_sum_F(0.1)


@given(st.floats(min_value=0.05, max_value=0.999))
def test_F_monotone_in_truncation(v):
    coarse = eval_sum_F(v, eps=1e-6)
    fine = eval_sum_F(v, eps=1e-15)
    assert coarse <= fine
    assert fine - coarse <= 1e-3 * fine


def test_F_near_one_consistent_with_fit():
    c0, c1, c2 = singular_coefficient_fit((0.99, 0.995, 0.999))
    e = 1 - 0.998
    assert math.isclose(eval_sum_F(0.998), c0 + c1 * e + c2 * e * e, rel_tol=1e-8)


def test_fit_recovers_model_polynomial():
    def model(v):
        return -(1 - v) / 3 - 2 / 27 * (1 - v) ** 2

    c0, c1, c2 = singular_coefficient_fit((0.99, 0.995, 0.999), model)
    assert abs(c1 + 1 / 3) < 1e-12
    assert abs(c0) < 1e-15
    assert abs(c2 + 2 / 27) < 1e-8


def test_fit_symmetric_in_points():
    a = singular_coefficient_fit((0.99, 0.995, 0.999))
    b = singular_coefficient_fit((0.999, 0.99, 0.995))
    assert a == b


def test_fit_rejects_repeated_points():
    with pytest.raises(SingularSystem):
        singular_coefficient_fit((0.99, 0.99, 0.999))
