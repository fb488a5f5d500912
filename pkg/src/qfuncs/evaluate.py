"""Method dispatch for point evaluation.

Chooses the fastest exact route for the requested parameters: finite
closed forms when the orders admit them, the incomplete-gamma form for
central Marcum arguments, and the adaptive quadrature oracle otherwise.
force_oracle makes every evaluation take the quadrature route, which is
how the closed forms are audited.
"""
from __future__ import annotations

from .closed_form import (HalfOddOrder, NuttallHalfOddOrders, is_half_odd,
                          marcum_central, marcum_half_odd)
from .params import Eval, MarcumArgs, NuttallArgs
from .quadrature import (DEFAULT_EPSREL, marcum_q_quad, nuttall_q_norm_quad,
                         nuttall_q_quad)
from . import closed_form as _cf

#: Relative error budget attached to closed-form evaluations.
_CLOSED_FORM_RTOL = 1e-13


def marcum_eval(args: MarcumArgs, *, force_oracle: bool = False,
                rel_tol: float | None = None) -> Eval:
    """Q_nu(a, b) by the best available method.

    rel_tol loosens or tightens the oracle's relative target; the
    closed forms are exact finite sums and ignore it.
    """
    if not force_oracle:
        if is_half_odd(args.nu):
            value = (marcum_half_odd(HalfOddOrder(args.nu), args.a, args.b)
                     if args.a > 0.0 else
                     _cf.marcum_central_half_odd(HalfOddOrder(args.nu), args.b))
            return Eval(value, _CLOSED_FORM_RTOL * value, "closed_form")
        if args.a == 0.0:
            value = marcum_central(args.nu, args.b)
            return Eval(value, _CLOSED_FORM_RTOL * value, "closed_form")
    return marcum_q_quad(args, epsrel=rel_tol or DEFAULT_EPSREL)


def nuttall_eval(args: NuttallArgs, *, normalized: bool = False,
                 force_oracle: bool = False,
                 rel_tol: float | None = None) -> Eval:
    """Q_{mu,nu}(a, b) (or its a**-nu normalization) by the best
    available method; closed forms apply when both orders are half-odd
    with mu >= nu.  rel_tol adjusts the oracle's relative target and
    the escalation threshold of the alternating closed-form sums."""
    if (not force_oracle and is_half_odd(args.mu) and is_half_odd(args.nu)
            and args.mu >= args.nu):
        orders = NuttallHalfOddOrders(args.mu, args.nu)
        sum_tol = rel_tol or _cf.DEFAULT_REL_TOL
        if normalized:
            value = _cf.nuttall_norm_half_odd(orders, args.a, args.b,
                                              rel_tol=sum_tol)
        else:
            value = _cf.nuttall_half_odd(orders, args.a, args.b,
                                         rel_tol=sum_tol)
        return Eval(value, _CLOSED_FORM_RTOL * abs(value), "closed_form")
    epsrel = rel_tol or DEFAULT_EPSREL
    if normalized:
        return nuttall_q_norm_quad(args, epsrel=epsrel)
    return nuttall_q_quad(args, epsrel=epsrel)
