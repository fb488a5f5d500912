"""Shared parameter records, evaluation results, and error types."""
from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument violates the documented precondition of an operation."""


class ConvergenceError(RuntimeError):
    """The adaptive integrator exhausted its subdivision budget."""


class BoundUnavailable(RuntimeError):
    """A bound cannot be produced here (validity condition fails or an
    operand underflowed); carries a human-readable reason."""


def require(condition: bool, message: str) -> None:
    """Raise DomainError with `message` unless `condition` holds."""
    if not condition:
        raise DomainError(message)


def require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class MarcumArgs:
    """Arguments of the generalized Marcum Q-function Q_nu(a, b).

    nu is the real order (> 0), a >= 0 the noncentrality parameter and
    b >= 0 the threshold.  a == 0 selects the central (limiting) case.
    """

    nu: float
    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("nu", "a", "b"):
            require_finite(name, getattr(self, name))
        require(self.nu > 0.0, f"order nu must be > 0, got {self.nu}")
        require(self.a >= 0.0, f"parameter a must be >= 0, got {self.a}")
        require(self.b >= 0.0, f"threshold b must be >= 0, got {self.b}")


@dataclass(frozen=True)
class NuttallArgs:
    """Arguments of the Nuttall Q-function Q_{mu,nu}(a, b).

    Both orders are real and >= 0; a must be strictly positive (the
    normalized variant divides by a**nu) and b >= 0.
    """

    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("mu", "nu", "a", "b"):
            require_finite(name, getattr(self, name))
        require(self.mu >= 0.0, f"order mu must be >= 0, got {self.mu}")
        require(self.nu >= 0.0, f"order nu must be >= 0, got {self.nu}")
        require(self.a > 0.0, f"parameter a must be > 0, got {self.a}")
        require(self.b >= 0.0, f"threshold b must be >= 0, got {self.b}")


#: Evaluation strategies an Eval may report.
EVAL_METHODS = ("quadrature", "series", "closed_form", "bound")


@dataclass(frozen=True)
class Eval:
    """A numerical value together with an absolute error estimate and the
    strategy that produced it."""

    value: float
    abs_error_estimate: float
    method: str

    def __post_init__(self) -> None:
        require_finite("value", self.value)
        require(self.abs_error_estimate >= 0.0,
                "abs_error_estimate must be >= 0")
        require(self.method in EVAL_METHODS,
                f"method must be one of {EVAL_METHODS}, got {self.method!r}")
