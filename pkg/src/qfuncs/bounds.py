"""Lower and upper bounds for real orders by half-odd bracketing.

Log-concavity of the order maps (directly, and with the central value
subtracted) lets a Q-function of real order nu be pinched between
geometric interpolations and extrapolations of its half-odd neighbors
nu2 <= nu < nu1 = nu2 + 1, each neighbor evaluated by exact closed
form.  Six bound constructions exist for the Marcum function (two
lower, four upper) and three each for the normalized and standard
Nuttall functions with integer order gap.

All power combinations run in the log domain.  A bracket value (or
central-anchored difference) that underflows to zero makes the bound
unrepresentable; such bounds are reported absent via BoundUnavailable
rather than returned as 0 or infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .closed_form import (HalfOddOrder, NuttallHalfOddOrders, is_half_odd,
                          marcum_central, marcum_central_half_odd,
                          marcum_half_odd, nuttall_half_odd,
                          nuttall_norm_half_odd)
from .params import (BoundUnavailable, ConvergenceError, DomainError, Eval,
                     MarcumArgs, NuttallArgs, require, require_finite)
from .quadrature import marcum_q_quad, nuttall_q_norm_quad, nuttall_q_quad

#: Relative error budget of one closed-form evaluation, used for the
#: report's exact value and the negative-difference tolerance.
_CLOSED_FORM_RTOL = 1e-13

_LOWER_NAMES = ("lb1", "lb2")
_UPPER_NAMES = ("ub1", "ub2", "ub3", "ub4")


@dataclass(frozen=True)
class OrderBracket:
    """Half-odd neighbors of a real order: nu1 = floor(nu+0.5)+0.5 is
    the smallest half-odd order greater than nu, nu2 = floor(nu-0.5)+0.5
    the largest one less than or equal to it; nu1 - nu2 = 1 always."""

    nu: float

    def __post_init__(self) -> None:
        require_finite("nu", self.nu)
        require(self.nu > 0.0, f"order nu must be > 0, got {self.nu}")

    @property
    def nu1(self) -> float:
        return math.floor(self.nu + 0.5) + 0.5

    @property
    def nu2(self) -> float:
        return math.floor(self.nu - 0.5) + 0.5

    @property
    def degenerate(self) -> bool:
        """True when nu itself is half-odd, so nu2 == nu."""
        return is_half_odd(self.nu)


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds at one parameter point, the exact value
    they bracket, and a tightness-validated recommendation.

    bounds holds the representable bounds by name; unavailable maps the
    rest to a diagnostic (validity gate or underflow).  rel_errors are
    signed, (bound - exact) / exact.  When the order is half-odd every
    bound collapses to the exact closed form and degenerate_exact is
    set.  recommendation_validated records whether the heuristically
    recommended pair coincides with the pointwise-tightest pair."""

    kind: str
    exact: Eval
    bounds: dict[str, float] = field(default_factory=dict)
    unavailable: dict[str, str] = field(default_factory=dict)
    rel_errors: dict[str, float] = field(default_factory=dict)
    degenerate_exact: bool = False
    recommended_lower: str | None = None
    recommended_upper: str | None = None
    recommendation_validated: bool = False

    @property
    def lb1(self) -> float | None:
        return self.bounds.get("lb1")

    @property
    def lb2(self) -> float | None:
        return self.bounds.get("lb2")

    @property
    def ub1(self) -> float | None:
        return self.bounds.get("ub1")

    @property
    def ub2(self) -> float | None:
        return self.bounds.get("ub2")

    @property
    def ub3(self) -> float | None:
        return self.bounds.get("ub3")

    @property
    def ub4(self) -> float | None:
        return self.bounds.get("ub4")

    def tightest_lower(self) -> str | None:
        present = [n for n in _LOWER_NAMES if n in self.bounds]
        if not present:
            return None
        return max(present, key=lambda n: self.bounds[n])

    def tightest_upper(self) -> str | None:
        present = [n for n in _UPPER_NAMES if n in self.bounds]
        if not present:
            return None
        return min(present, key=lambda n: self.bounds[n])


# ---------------------------------------------------------------------------
# bracket-value evaluation (exact closed forms at half-odd orders)


# anchor values recur across the bound formulas of one report and
# across neighboring orders in sweeps; memoized with a bounded cache
@lru_cache(maxsize=4096)
def _marcum_at(nu_h: float, a: float, b: float) -> float:
    order = HalfOddOrder(nu_h)
    if a == 0.0:
        return marcum_central_half_odd(order, b)
    return marcum_half_odd(order, a, b)


def _power_combine(parts: list[tuple[float, float]], what: str) -> float:
    """exp(sum w * ln v) with underflow/overflow reported as absence."""
    log_total = 0.0
    for weight, value in parts:
        if weight == 0.0:
            continue
        if value <= 0.0:
            raise BoundUnavailable(
                f"{what}: bracket value underflowed to zero")
        log_total += weight * math.log(value)
    if log_total > 700.0:
        raise BoundUnavailable(f"{what}: combination overflows")
    combined = math.exp(log_total)
    if combined == 0.0:
        raise BoundUnavailable(f"{what}: combination underflows")
    return combined


def _anchored_difference(nu_h: float, a: float, b: float,
                         what: str) -> float:
    """Q_nu(a, b) - Q_nu(0, b) at a half-odd order, the quantity whose
    log-concavity in nu drives the central-anchored bounds."""
    q = _marcum_at(nu_h, a, b)
    q0 = marcum_central_half_odd(HalfOddOrder(nu_h), b)
    diff = q - q0
    # noise floor of the subtraction of two closed forms
    tol = _CLOSED_FORM_RTOL * max(q, q0)
    if diff < -tol:
        raise ConvergenceError(
            f"{what}: bracket difference at order {nu_h} is negative "
            f"({diff:.3e}), closed-form inconsistency")
    if diff <= tol:
        raise BoundUnavailable(
            f"{what}: bracket difference at order {nu_h} lost to "
            "cancellation")
    return diff


def _check_marcum_point(name: str, bracket: OrderBracket, a: float,
                        b: float) -> None:
    require_finite("a", a)
    require_finite("b", b)
    require(b > 0.0, f"{name} requires b > 0, got {b}")


# ---------------------------------------------------------------------------
# Marcum bounds


def marcum_lb1(bracket: OrderBracket, a: float, b: float) -> float:
    """Lower bound by geometric interpolation of the bracketing
    closed-form values; valid for nu >= 1.5, a >= 0."""
    require(bracket.nu >= 1.5,
            f"lb1 requires nu >= 1.5, got {bracket.nu}")
    _check_marcum_point("lb1", bracket, a, b)
    require(a >= 0.0, f"lb1 requires a >= 0, got {a}")
    return _power_combine(
        [(bracket.nu - bracket.nu2, _marcum_at(bracket.nu1, a, b)),
         (bracket.nu1 - bracket.nu, _marcum_at(bracket.nu2, a, b))],
        "lb1")


def marcum_ub1(bracket: OrderBracket, a: float, b: float) -> float:
    """Upper bound by geometric extrapolation from above (orders nu1
    and nu1 + 1); valid for nu >= 1, a >= 0."""
    require(bracket.nu >= 1.0, f"ub1 requires nu >= 1, got {bracket.nu}")
    _check_marcum_point("ub1", bracket, a, b)
    require(a >= 0.0, f"ub1 requires a >= 0, got {a}")
    w = bracket.nu1 - bracket.nu
    return _power_combine(
        [(w + 1.0, _marcum_at(bracket.nu1, a, b)),
         (-w, _marcum_at(bracket.nu1 + 1.0, a, b))],
        "ub1")


def marcum_ub2(bracket: OrderBracket, a: float, b: float) -> float:
    """Upper bound by geometric extrapolation from below (orders nu2
    and nu2 - 1); valid for nu >= 2.5, a >= 0."""
    require(bracket.nu >= 2.5, f"ub2 requires nu >= 2.5, got {bracket.nu}")
    _check_marcum_point("ub2", bracket, a, b)
    require(a >= 0.0, f"ub2 requires a >= 0, got {a}")
    w = bracket.nu - bracket.nu2
    return _power_combine(
        [(w + 1.0, _marcum_at(bracket.nu2, a, b)),
         (-w, _marcum_at(bracket.nu2 - 1.0, a, b))],
        "ub2")


def marcum_lb2(bracket: OrderBracket, a: float, b: float) -> float:
    """Central-anchored lower bound: the exact central value plus the
    geometric interpolation of the bracket differences
    Q_nu_i(a, b) - Q_nu_i(0, b); valid for nu >= 0.5, a > 0."""
    require(bracket.nu >= 0.5, f"lb2 requires nu >= 0.5, got {bracket.nu}")
    _check_marcum_point("lb2", bracket, a, b)
    require(a > 0.0, f"lb2 requires a > 0, got {a}")
    anchor = marcum_central(bracket.nu, b)
    try:
        spread = _power_combine(
            [(bracket.nu - bracket.nu2,
              _anchored_difference(bracket.nu1, a, b, "lb2")),
             (bracket.nu1 - bracket.nu,
              _anchored_difference(bracket.nu2, a, b, "lb2"))],
            "lb2")
    except BoundUnavailable:
        # the interpolated spread is below double resolution; the
        # anchor alone is still a valid (marginally looser) lower bound
        return anchor
    return anchor + spread


def marcum_ub3(bracket: OrderBracket, a: float, b: float) -> float:
    """Central-anchored upper bound extrapolating the bracket
    differences from above; valid for nu > 0, a > 0."""
    require(bracket.nu > 0.0, f"ub3 requires nu > 0, got {bracket.nu}")
    _check_marcum_point("ub3", bracket, a, b)
    require(a > 0.0, f"ub3 requires a > 0, got {a}")
    anchor = marcum_central(bracket.nu, b)
    w = bracket.nu1 - bracket.nu
    spread = _power_combine(
        [(w + 1.0, _anchored_difference(bracket.nu1, a, b, "ub3")),
         (-w, _anchored_difference(bracket.nu1 + 1.0, a, b, "ub3"))],
        "ub3")
    return anchor + spread


def marcum_ub4(bracket: OrderBracket, a: float, b: float) -> float:
    """Central-anchored upper bound extrapolating the bracket
    differences from below; valid for nu >= 1.5, a > 0."""
    require(bracket.nu >= 1.5, f"ub4 requires nu >= 1.5, got {bracket.nu}")
    _check_marcum_point("ub4", bracket, a, b)
    require(a > 0.0, f"ub4 requires a > 0, got {a}")
    anchor = marcum_central(bracket.nu, b)
    w = bracket.nu - bracket.nu2
    spread = _power_combine(
        [(w + 1.0, _anchored_difference(bracket.nu2, a, b, "ub4")),
         (-w, _anchored_difference(bracket.nu2 - 1.0, a, b, "ub4"))],
        "ub4")
    return anchor + spread


# ---------------------------------------------------------------------------
# Nuttall bounds (integer order gap, bracketed on nu with mu shifted along)


def _nuttall_gap(args: NuttallArgs) -> int:
    gap = args.mu - args.nu
    rounded = round(gap)
    require(abs(gap - rounded) <= 1e-9 and rounded >= 1,
            f"bounds require mu - nu to be a positive integer, "
            f"got mu - nu = {gap}")
    return rounded


@lru_cache(maxsize=4096)
def _nuttall_at(nu_h: float, gap: int, a: float, b: float,
                normalized: bool) -> float:
    orders = NuttallHalfOddOrders(nu_h + gap, nu_h)
    if normalized:
        return nuttall_norm_half_odd(orders, a, b)
    return nuttall_half_odd(orders, a, b)


def _nuttall_lb(args: NuttallArgs, normalized: bool) -> float:
    require(args.nu >= 0.5, f"lb1 requires nu >= 0.5, got {args.nu}")
    require(args.b > 0.0, f"lb1 requires b > 0, got {args.b}")
    gap = _nuttall_gap(args)
    br = OrderBracket(args.nu)
    return _power_combine(
        [(br.nu - br.nu2, _nuttall_at(br.nu1, gap, args.a, args.b, normalized)),
         (br.nu1 - br.nu, _nuttall_at(br.nu2, gap, args.a, args.b, normalized))],
        "lb1")


def _nuttall_ub1(args: NuttallArgs, normalized: bool) -> float:
    require(args.b > 0.0, f"ub1 requires b > 0, got {args.b}")
    gap = _nuttall_gap(args)
    br = OrderBracket(args.nu)
    w = br.nu1 - args.nu
    return _power_combine(
        [(w + 1.0, _nuttall_at(br.nu1, gap, args.a, args.b, normalized)),
         (-w, _nuttall_at(br.nu1 + 1.0, gap, args.a, args.b, normalized))],
        "ub1")


def _nuttall_ub2(args: NuttallArgs, normalized: bool) -> float:
    require(args.nu >= 1.5, f"ub2 requires nu >= 1.5, got {args.nu}")
    require(args.b > 0.0, f"ub2 requires b > 0, got {args.b}")
    gap = _nuttall_gap(args)
    br = OrderBracket(args.nu)
    w = args.nu - br.nu2
    return _power_combine(
        [(w + 1.0, _nuttall_at(br.nu2, gap, args.a, args.b, normalized)),
         (-w, _nuttall_at(br.nu2 - 1.0, gap, args.a, args.b, normalized))],
        "ub2")


def nuttall_norm_lb(args: NuttallArgs) -> float:
    """Lower bound for the normalized function by interpolating the
    half-odd order pairs (nu_i + gap, nu_i); nu >= 0.5."""
    return _nuttall_lb(args, normalized=True)


def nuttall_norm_ub1(args: NuttallArgs) -> float:
    """Upper bound extrapolating from (nu1 + gap, nu1) and one order
    above; valid for all nu >= 0."""
    return _nuttall_ub1(args, normalized=True)


def nuttall_norm_ub2(args: NuttallArgs) -> float:
    """Upper bound extrapolating from (nu2 + gap, nu2) and one order
    below; nu >= 1.5."""
    return _nuttall_ub2(args, normalized=True)


def nuttall_std_lb(args: NuttallArgs) -> float:
    """Standard-function analogue of nuttall_norm_lb; also valid for
    0 < a < 1."""
    return _nuttall_lb(args, normalized=False)


def nuttall_std_ub1(args: NuttallArgs) -> float:
    return _nuttall_ub1(args, normalized=False)


def nuttall_std_ub2(args: NuttallArgs) -> float:
    return _nuttall_ub2(args, normalized=False)


# ---------------------------------------------------------------------------
# report assembly


def _gather(candidates: dict[str, object]) -> tuple[dict, dict]:
    bounds: dict[str, float] = {}
    unavailable: dict[str, str] = {}
    for name, thunk in candidates.items():
        try:
            bounds[name] = thunk()
        except DomainError as exc:
            unavailable[name] = f"validity: {exc}"
        except BoundUnavailable as exc:
            unavailable[name] = str(exc)
    return bounds, unavailable


def _finish_report(kind: str, exact: Eval, bounds: dict[str, float],
                   unavailable: dict[str, str], degenerate: bool,
                   rec_lower: str | None, rec_upper: str | None) -> BoundReport:
    rel = {}
    if exact.value > 0.0:
        rel = {n: (v - exact.value) / exact.value for n, v in bounds.items()}
    slack = exact.abs_error_estimate + 1e-12 * abs(exact.value)
    for name, value in bounds.items():
        if name in _LOWER_NAMES and value > exact.value + slack:
            raise ConvergenceError(
                f"{kind} {name} = {value} exceeds exact = {exact.value}")
        if name in _UPPER_NAMES and value < exact.value - slack:
            raise ConvergenceError(
                f"{kind} {name} = {value} is below exact = {exact.value}")
    report = BoundReport(kind=kind, exact=exact, bounds=bounds,
                         unavailable=unavailable, rel_errors=rel,
                         degenerate_exact=degenerate,
                         recommended_lower=rec_lower,
                         recommended_upper=rec_upper)
    tol = 1e-12 * max(abs(exact.value), 1e-300)
    ok_lower = (rec_lower is None or report.tightest_lower() is None
                or bounds[rec_lower] >= bounds[report.tightest_lower()] - tol)
    ok_upper = (rec_upper is None or report.tightest_upper() is None
                or bounds[rec_upper] <= bounds[report.tightest_upper()] + tol)
    return BoundReport(kind=kind, exact=exact, bounds=bounds,
                       unavailable=unavailable, rel_errors=rel,
                       degenerate_exact=degenerate,
                       recommended_lower=rec_lower,
                       recommended_upper=rec_upper,
                       recommendation_validated=ok_lower and ok_upper)


def _recommend(nu: float, a: float, bracket: OrderBracket,
               present: dict[str, float]) -> tuple[str | None, str | None]:
    """Family preference: central-anchored bounds for small a, direct
    bracket bounds otherwise; within a family pick the extrapolation
    side with the smaller fractional distance."""
    upper_first = bracket.nu1 - nu <= nu - bracket.nu2
    if 0.0 < a <= 2.0:
        lower_order = ("lb2", "lb1")
        upper_order = (("ub3", "ub4") if upper_first else ("ub4", "ub3")) + \
                      (("ub1", "ub2") if upper_first else ("ub2", "ub1"))
    else:
        lower_order = ("lb1", "lb2")
        upper_order = (("ub1", "ub2") if upper_first else ("ub2", "ub1")) + \
                      (("ub3", "ub4") if upper_first else ("ub4", "ub3"))
    rec_lower = next((n for n in lower_order if n in present), None)
    rec_upper = next((n for n in upper_order if n in present), None)
    return rec_lower, rec_upper


def marcum_bounds(args: MarcumArgs) -> BoundReport:
    """Evaluate every applicable Marcum bound at one point, bracketing
    the oracle value (or collapsing to the exact closed form when the
    order is half-odd or a == 0)."""
    bracket = OrderBracket(args.nu)
    if args.b == 0.0:
        exact = Eval(1.0, 0.0, "closed_form")
        reason = "requires b > 0"
        return _finish_report(
            "marcum", exact, {}, {n: reason for n in ("lb1", "lb2", "ub1",
                                                      "ub2", "ub3", "ub4")},
            False, None, None)
    if bracket.degenerate:
        value = _marcum_at(bracket.nu2, args.a, args.b)
        exact = Eval(value, _CLOSED_FORM_RTOL * value, "closed_form")
        gates = {"lb1": args.nu >= 1.5, "lb2": args.a > 0.0,
                 "ub1": args.nu >= 1.0, "ub2": args.nu >= 2.5,
                 "ub3": args.a > 0.0, "ub4": args.nu >= 1.5 and args.a > 0.0}
        bounds = {n: value for n, ok in gates.items() if ok}
        unavailable = {n: "validity gate failed"
                       for n, ok in gates.items() if not ok}
        rec_lower, rec_upper = _recommend(args.nu, args.a, bracket, bounds)
        return BoundReport(kind="marcum", exact=exact, bounds=bounds,
                           unavailable=unavailable,
                           rel_errors={n: 0.0 for n in bounds},
                           degenerate_exact=True,
                           recommended_lower=rec_lower,
                           recommended_upper=rec_upper,
                           recommendation_validated=True)
    if args.a == 0.0:
        value = marcum_central(args.nu, args.b)
        exact = Eval(value, _CLOSED_FORM_RTOL * value, "closed_form")
    else:
        exact = marcum_q_quad(args)
    candidates = {
        "lb1": lambda: marcum_lb1(bracket, args.a, args.b),
        "lb2": lambda: marcum_lb2(bracket, args.a, args.b),
        "ub1": lambda: marcum_ub1(bracket, args.a, args.b),
        "ub2": lambda: marcum_ub2(bracket, args.a, args.b),
        "ub3": lambda: marcum_ub3(bracket, args.a, args.b),
        "ub4": lambda: marcum_ub4(bracket, args.a, args.b),
    }
    bounds, unavailable = _gather(candidates)
    rec_lower, rec_upper = _recommend(args.nu, args.a, bracket, bounds)
    return _finish_report("marcum", exact, bounds, unavailable, False,
                          rec_lower, rec_upper)


def nuttall_bounds(args: NuttallArgs, *, normalized: bool) -> BoundReport:
    """Evaluate the Nuttall bounds (requires integer mu - nu >= 1) at
    one point against the oracle, or collapse to the closed form when
    nu is half-odd."""
    gap = _nuttall_gap(args)
    kind = "nuttall_norm" if normalized else "nuttall_std"
    bracket = OrderBracket(args.nu) if args.nu > 0 else None
    if args.b == 0.0:
        exact = _nuttall_exact(args, normalized)
        reason = "requires b > 0"
        return _finish_report(kind, exact, {},
                              {n: reason for n in ("lb1", "ub1", "ub2")},
                              False, None, None)
    if is_half_odd(args.nu):
        value = _nuttall_at(args.nu, gap, args.a, args.b, normalized)
        exact = Eval(value, _CLOSED_FORM_RTOL * abs(value), "closed_form")
        gates = {"lb1": args.nu >= 0.5, "ub1": True, "ub2": args.nu >= 1.5}
        bounds = {n: value for n, ok in gates.items() if ok}
        unavailable = {n: "validity gate failed"
                       for n, ok in gates.items() if not ok}
        return BoundReport(kind=kind, exact=exact, bounds=bounds,
                           unavailable=unavailable,
                           rel_errors={n: 0.0 for n in bounds},
                           degenerate_exact=True,
                           recommended_lower="lb1" if "lb1" in bounds else None,
                           recommended_upper="ub1",
                           recommendation_validated=True)
    exact = _nuttall_exact(args, normalized)
    ops = {
        "lb1": lambda: _nuttall_lb(args, normalized),
        "ub1": lambda: _nuttall_ub1(args, normalized),
        "ub2": lambda: _nuttall_ub2(args, normalized),
    }
    bounds, unavailable = _gather(ops)
    upper_first = bracket.nu1 - args.nu <= args.nu - bracket.nu2
    upper_order = ("ub1", "ub2") if upper_first else ("ub2", "ub1")
    rec_upper = next((n for n in upper_order if n in bounds), None)
    return _finish_report(kind, exact, bounds, unavailable, False,
                          "lb1" if "lb1" in bounds else None, rec_upper)


def _nuttall_exact(args: NuttallArgs, normalized: bool) -> Eval:
    if normalized:
        return nuttall_q_norm_quad(args)
    return nuttall_q_quad(args)


def nuttall_std_bounds(args: NuttallArgs) -> BoundReport:
    return nuttall_bounds(args, normalized=False)


def nuttall_norm_bounds(args: NuttallArgs) -> BoundReport:
    return nuttall_bounds(args, normalized=True)


def select_bounds(args: MarcumArgs | NuttallArgs, *,
                  normalized: bool = False) -> BoundReport:
    """Dispatch to the Marcum or Nuttall report (the normalized flag
    applies only to Nuttall arguments)."""
    if isinstance(args, MarcumArgs):
        return marcum_bounds(args)
    if isinstance(args, NuttallArgs):
        return nuttall_bounds(args, normalized=normalized)
    raise DomainError(f"unsupported argument type {type(args).__name__}")
