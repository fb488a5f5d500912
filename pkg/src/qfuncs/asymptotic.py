"""Large-threshold asymptotic estimates.

As b grows with the other parameters fixed, each Q-function approaches
a Gaussian tail scaled by a power prefactor.  Evaluation runs in the
log domain (via the log of the normal tail) so the estimates survive
far into the region where the tail itself underflows.
"""
from __future__ import annotations

import math

from scipy.special import log_ndtr

from .params import MarcumArgs, NuttallArgs, require


def _log_gaussian_q(x: float) -> float:
    """log of the standard normal upper tail at x."""
    return float(log_ndtr(-x))


def marcum_asym(args: MarcumArgs) -> float:
    """(b/a)**(nu - 1/2) times the normal tail at b - a."""
    require(args.a > 0.0, f"asymptotic form requires a > 0, got {args.a}")
    require(args.b > 0.0, f"asymptotic form requires b > 0, got {args.b}")
    return math.exp((args.nu - 0.5) * (math.log(args.b) - math.log(args.a))
                    + _log_gaussian_q(args.b - args.a))


def nuttall_norm_asym(args: NuttallArgs) -> float:
    """b**(mu - 1/2) / a**(nu + 1/2) times the normal tail at b - a."""
    require(args.b > 0.0, f"asymptotic form requires b > 0, got {args.b}")
    return math.exp((args.mu - 0.5) * math.log(args.b)
                    - (args.nu + 0.5) * math.log(args.a)
                    + _log_gaussian_q(args.b - args.a))


def nuttall_std_asym(args: NuttallArgs) -> float:
    """b**(mu - 1/2) / sqrt(a) times the normal tail at b - a; equals
    nuttall_norm_asym scaled by a**nu."""
    require(args.b > 0.0, f"asymptotic form requires b > 0, got {args.b}")
    return math.exp((args.mu - 0.5) * math.log(args.b)
                    - 0.5 * math.log(args.a)
                    + _log_gaussian_q(args.b - args.a))
