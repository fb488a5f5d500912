"""Modified Bessel functions of the first kind for real order.

All integrand code works with the exponentially scaled variant
exp(-x) I_nu(x), which stays inside double range for every argument the
integrals produce; the unscaled value is reconstructed only on demand.
Evaluation is backed by scipy's Amos implementation and accepts both
scalars and arrays.
"""
from __future__ import annotations

import math

import numpy as np
from scipy import special as _sp

from .params import DomainError, require, require_finite

_LOG_DBL_MAX = math.log(np.finfo(float).max)


def bessel_i_scaled(nu: float, x):
    """exp(-x) I_nu(x) for x >= 0; vectorized in x."""
    require_finite("nu", nu)
    require(nu >= 0.0, f"order nu must be >= 0, got {nu}")
    if np.any(np.asarray(x) < 0.0):
        raise DomainError(f"argument x must be >= 0, got {x!r}")
    return _sp.ive(nu, x)


def bessel_i(nu: float, x: float) -> float:
    """I_nu(x) for scalar x >= 0.

    Computed as exp(x) * ive(nu, x); raises OverflowError once the
    rescaled value leaves double range (x beyond roughly 713).
    """
    require_finite("nu", nu)
    require_finite("x", x)
    require(nu >= 0.0, f"order nu must be >= 0, got {nu}")
    require(x >= 0.0, f"argument x must be >= 0, got {x}")
    scaled = float(_sp.ive(nu, x))
    if scaled == 0.0:
        return 0.0
    log_value = x + math.log(scaled)
    if log_value > _LOG_DBL_MAX:
        raise OverflowError(f"I_{nu}({x}) exceeds double range")
    return math.exp(log_value)


def normalized_gamma_nu(nu: float, x: float, *, limit_at_zero: bool = False) -> float:
    """2**nu Gamma(nu+1) x**(-nu/2) I_nu(sqrt(x)) for x > 0.

    The function extends continuously to 1 at x = 0; that limit is only
    substituted when limit_at_zero is set, otherwise x <= 0 is a domain
    error.
    """
    require_finite("nu", nu)
    require_finite("x", x)
    require(nu > -1.0, f"order nu must be > -1, got {nu}")
    if x <= 0.0:
        if x == 0.0 and limit_at_zero:
            return 1.0
        raise DomainError(
            f"normalized_gamma_nu requires x > 0 (got {x}); "
            "pass limit_at_zero=True to use the x -> 0 limit 1")
    r = math.sqrt(x)
    scaled = float(_sp.ive(nu, r))
    log_value = (nu * math.log(2.0) + math.lgamma(nu + 1.0)
                 - 0.5 * nu * math.log(x) + r + math.log(scaled))
    return math.exp(log_value)
