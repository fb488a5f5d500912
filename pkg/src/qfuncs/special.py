"""Scalar special functions used by the closed forms and bounds.

The incomplete gamma functions follow the classic two-regime scheme: a
power series for x < s + 1 and a continued fraction for x >= s + 1.
Both regimes are also exposed in log form so that callers can assemble
cancellation-prone sums from log-magnitudes without underflow.
"""
from __future__ import annotations

import math

from .params import ConvergenceError, require, require_finite

_MAX_ITER = 500
_EPS = 1e-16


def erfc(x: float) -> float:
    """Complementary error function."""
    require_finite("x", x)
    return math.erfc(x)


def gaussian_q(x: float) -> float:
    """Gaussian tail probability Q(x) = erfc(x / sqrt(2)) / 2."""
    require_finite("x", x)
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def log_gamma(s: float) -> float:
    """log Gamma(s) for s > 0."""
    require(s > 0.0, f"log_gamma requires s > 0, got {s}")
    return math.lgamma(s)


def _gamma_series(s: float, x: float) -> float:
    """Sum of the lower-gamma power series; gamma(s, x) equals
    sum * exp(-x + s*log(x)).  Valid for x < s + 1."""
    term = 1.0 / s
    total = term
    ap = s
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total
    raise ConvergenceError(f"lower-gamma series stalled at s={s}, x={x}")


def _gamma_cf(s: float, x: float) -> float:
    """Modified Lentz continued fraction; Gamma(s, x) equals
    cf * exp(-x + s*log(x)).  Valid for x >= s + 1."""
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise ConvergenceError(f"upper-gamma continued fraction stalled at s={s}, x={x}")


def reg_lower_gamma(s: float, x: float) -> float:
    """Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s)."""
    require(s > 0.0, f"requires s > 0, got {s}")
    require(x >= 0.0, f"requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    log_scale = -x + s * math.log(x) - math.lgamma(s)
    if x < s + 1.0:
        return _gamma_series(s, x) * math.exp(log_scale)
    return 1.0 - _gamma_cf(s, x) * math.exp(log_scale)


def reg_upper_gamma(s: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s)."""
    require(s > 0.0, f"requires s > 0, got {s}")
    require(x >= 0.0, f"requires x >= 0, got {x}")
    if x == 0.0:
        return 1.0
    log_scale = -x + s * math.log(x) - math.lgamma(s)
    if x < s + 1.0:
        return 1.0 - _gamma_series(s, x) * math.exp(log_scale)
    return _gamma_cf(s, x) * math.exp(log_scale)


def lower_inc_gamma(s: float, x: float) -> float:
    """Unregularized lower incomplete gamma  gamma(s, x).

    May underflow to 0.0 for very large x; use log_lower_inc_gamma when
    the magnitude itself is needed.
    """
    lg = log_lower_inc_gamma(s, x)
    return 0.0 if lg == -math.inf else math.exp(lg)


def upper_inc_gamma(s: float, x: float) -> float:
    """Unregularized upper incomplete gamma  Gamma(s, x)."""
    lg = log_upper_inc_gamma(s, x)
    return 0.0 if lg == -math.inf else math.exp(lg)


def log_lower_inc_gamma(s: float, x: float) -> float:
    """log gamma(s, x); -inf at x = 0."""
    require(s > 0.0, f"requires s > 0, got {s}")
    require(x >= 0.0, f"requires x >= 0, got {x}")
    if x == 0.0:
        return -math.inf
    if x < s + 1.0:
        return math.log(_gamma_series(s, x)) - x + s * math.log(x)
    q = _gamma_cf(s, x) * math.exp(-x + s * math.log(x) - math.lgamma(s))
    return math.lgamma(s) + math.log1p(-q)


def log_upper_inc_gamma(s: float, x: float) -> float:
    """log Gamma(s, x)."""
    require(s > 0.0, f"requires s > 0, got {s}")
    require(x >= 0.0, f"requires x >= 0, got {x}")
    if x == 0.0:
        return math.lgamma(s)
    if x >= s + 1.0:
        return math.log(_gamma_cf(s, x)) - x + s * math.log(x)
    p = _gamma_series(s, x) * math.exp(-x + s * math.log(x) - math.lgamma(s))
    return math.lgamma(s) + math.log1p(-p)


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    require(isinstance(n, int) and n >= 0,
            f"pochhammer index must be a nonnegative integer, got {n!r}")
    require_finite("x", x)
    result = 1.0
    for k in range(n):
        result *= x + k
    return result


def double_factorial(n: int) -> float:
    """n!! with the usual empty-product conventions (-1)!! = 0!! = 1."""
    require(isinstance(n, int) and n >= -1,
            f"double factorial needs an integer >= -1, got {n!r}")
    result = 1.0
    k = n
    while k > 1:
        result *= k
        k -= 2
    return result


def signum(x: float) -> float:
    """Sign of x as -1.0, 0.0 or 1.0."""
    require_finite("x", x)
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0
