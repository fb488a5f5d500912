"""Scaled modified Bessel evaluation and the order-normalized gamma
helper."""

import math

import pytest

from qfuncs.bessel import bessel_i, bessel_i_scaled, normalized_gamma_nu

# frozen reference values computed with 30-digit arbitrary precision
IVE_GOLDEN = [
    (0.5, 0.7, 0.35924308050380716),
    (1.5, 2.0, 0.14879751539472358),
    (2.5, 10.0, 0.09209433670789835),
    (4.5, 0.3, 2.786388411293756e-06),
    (0.5, 50.0, 0.05641895835477563),
    (8.5, 25.0, 0.018623911779611684),
]


@pytest.mark.parametrize("nu, x, expect", IVE_GOLDEN)
def test_scaled_bessel_golden(nu, x, expect):
    assert bessel_i_scaled(nu, x) == pytest.approx(expect, rel=1e-13)


@pytest.mark.parametrize("nu, x, expect", IVE_GOLDEN)
def test_unscaled_relation(nu, x, expect):
    assert bessel_i(nu, x) == pytest.approx(
        expect * math.exp(abs(x)), rel=1e-12)


def test_half_order_closed_form():
    # I_{1/2}(x) = sqrt(2/(pi x)) sinh(x)
    for x in (0.3, 1.0, 4.0, 12.0):
        expect = math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)
        assert bessel_i(0.5, x) == pytest.approx(expect, rel=1e-12)


def test_scaled_stays_finite_at_large_argument():
    v = bessel_i_scaled(1.5, 700.0)
    assert math.isfinite(v) and v > 0.0


def test_normalized_gamma_nu_at_zero_limit():
    assert normalized_gamma_nu(2.0, 0.0, limit_at_zero=True) == 1.0
    # 2^nu Gamma(nu+1) x^{-nu/2} I_nu(sqrt(x)) increases from 1 for x > 0
    assert normalized_gamma_nu(2.0, 3.0) > 1.0
    assert normalized_gamma_nu(2.0, 1e-8) == pytest.approx(1.0, rel=1e-7)
    with pytest.raises(Exception):
        normalized_gamma_nu(2.0, 0.0)
