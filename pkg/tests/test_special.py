"""Scalar special-function helpers: identities, golden values, and
property-based checks of the incomplete-gamma pair.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfuncs.special import (double_factorial, erfc, gaussian_q, log_gamma,
                            log_lower_inc_gamma, log_upper_inc_gamma,
                            lower_inc_gamma, pochhammer, reg_lower_gamma,
                            reg_upper_gamma, signum, upper_inc_gamma)

finite = st.floats(min_value=-30.0, max_value=30.0,
                   allow_nan=False, allow_infinity=False)
shape = st.floats(min_value=0.05, max_value=60.0,
                  allow_nan=False, allow_infinity=False)
positive = st.floats(min_value=1e-6, max_value=120.0,
                     allow_nan=False, allow_infinity=False)


@given(finite)
def test_erfc_reflection(x):
    assert erfc(x) + erfc(-x) == pytest.approx(2.0, rel=1e-14)


@given(finite)
def test_gaussian_q_complement(x):
    assert gaussian_q(x) + gaussian_q(-x) == pytest.approx(1.0, rel=1e-14)


def test_gaussian_q_golden():
    # frozen reference values from an independent normal-cdf evaluation
    assert gaussian_q(0.0) == pytest.approx(0.5, abs=0.0)
    assert gaussian_q(1.0) == pytest.approx(0.15865525393145705, rel=1e-15)
    assert gaussian_q(5.0) == pytest.approx(2.866515718791939e-07, rel=1e-13)


def test_erfc_golden():
    assert erfc(1.0) == pytest.approx(0.15729920705028513, rel=1e-15)
    assert erfc(-2.0) == pytest.approx(1.9953222650189528, rel=1e-15)


@given(shape, positive)
def test_regularized_pair_sums_to_one(s, x):
    assert reg_lower_gamma(s, x) + reg_upper_gamma(s, x) == pytest.approx(
        1.0, rel=1e-12)


@given(shape, positive)
@settings(max_examples=200)
def test_lower_gamma_recursion(s, x):
    # P(s+1, x) = P(s, x) - x^s e^{-x} / Gamma(s+1); the subtraction
    # cancels near x -> 0, so allow error at the scale of the operands
    step = math.exp(s * math.log(x) - x - log_gamma(s + 1.0))
    lhs = reg_lower_gamma(s + 1.0, x)
    rhs = reg_lower_gamma(s, x) - step
    assert lhs == pytest.approx(rhs, rel=1e-10,
                                abs=1e-13 * reg_lower_gamma(s, x))


@given(shape, positive)
def test_log_gamma_variants_consistent(s, x):
    lower = lower_inc_gamma(s, x)
    upper = upper_inc_gamma(s, x)
    if lower > 0.0:
        assert log_lower_inc_gamma(s, x) == pytest.approx(
            math.log(lower), rel=1e-12)
    if upper > 0.0:
        assert log_upper_inc_gamma(s, x) == pytest.approx(
            math.log(upper), rel=1e-12)


def test_incomplete_gamma_golden():
    # independent references: P(2, 1) = 1 - 2/e, Gamma(0.5, x) via erfc
    assert reg_lower_gamma(2.0, 1.0) == pytest.approx(
        1.0 - 2.0 / math.e, rel=1e-14)
    assert upper_inc_gamma(0.5, 4.0) == pytest.approx(
        math.sqrt(math.pi) * erfc(2.0), rel=1e-13)


def test_pochhammer_matches_gamma_ratio():
    for x in (0.5, 1.0, 2.5, 7.0):
        for n in (0, 1, 2, 5):
            expect = math.exp(log_gamma(x + n) - log_gamma(x))
            assert pochhammer(x, n) == pytest.approx(expect, rel=1e-12)


def test_double_factorial_table():
    assert [double_factorial(n) for n in (-1, 0, 1, 2, 3, 4, 5, 6)] == [
        1.0, 1.0, 1.0, 2.0, 3.0, 8.0, 15.0, 48.0]


def test_signum():
    assert signum(3.2) == 1.0
    assert signum(-0.1) == -1.0
    assert signum(0.0) == 0.0
