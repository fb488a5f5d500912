"""Shared evaluation caches for the test suite.

Exact values recur across test modules (soundness, sandwiches, order
inequalities all probe the same grid); caching keeps the suite fast
without loosening any tolerance.
"""

from functools import lru_cache

import pytest

from qfuncs import (MarcumArgs, NuttallArgs, marcum_eval, marcum_q_quad,
                    nuttall_eval, nuttall_q_norm_quad, nuttall_q_quad,
                    select_bounds)


@lru_cache(maxsize=None)
def marcum_value(nu: float, a: float, b: float) -> float:
    return marcum_eval(MarcumArgs(nu, a, b)).value


@lru_cache(maxsize=None)
def marcum_oracle(nu: float, a: float, b: float) -> float:
    return marcum_q_quad(MarcumArgs(nu, a, b)).value


@lru_cache(maxsize=None)
def nuttall_value(mu: float, nu: float, a: float, b: float,
                  normalized: bool = False) -> float:
    return nuttall_eval(NuttallArgs(mu, nu, a, b),
                        normalized=normalized).value


@lru_cache(maxsize=None)
def nuttall_oracle(mu: float, nu: float, a: float, b: float,
                   normalized: bool = False) -> float:
    quad = nuttall_q_norm_quad if normalized else nuttall_q_quad
    return quad(NuttallArgs(mu, nu, a, b)).value


@lru_cache(maxsize=None)
def marcum_report(nu: float, a: float, b: float):
    return select_bounds(MarcumArgs(nu, a, b))


@lru_cache(maxsize=None)
def nuttall_report(mu: float, nu: float, a: float, b: float,
                   normalized: bool):
    return select_bounds(NuttallArgs(mu, nu, a, b), normalized=normalized)


@pytest.fixture(scope="session")
def cached():
    """Namespace fixture bundling the cached evaluators."""
    class _Cached:
        marcum = staticmethod(marcum_value)
        marcum_oracle = staticmethod(marcum_oracle)
        nuttall = staticmethod(nuttall_value)
        nuttall_oracle = staticmethod(nuttall_oracle)
        marcum_report = staticmethod(marcum_report)
        nuttall_report = staticmethod(nuttall_report)
    return _Cached
