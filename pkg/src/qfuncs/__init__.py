"""Generalized Marcum and Nuttall Q-functions: adaptive-quadrature
reference evaluation, exact closed forms at half-odd orders,
exponential-type bounds, large-threshold asymptotics, and a numerical
verification harness for the monotonicity and log-concavity properties
these functions satisfy.
"""

__version__ = "0.1.0"

from .asymptotic import marcum_asym, nuttall_norm_asym, nuttall_std_asym
from .bounds import (BoundReport, OrderBracket, marcum_bounds,
                     nuttall_bounds, select_bounds)
from .closed_form import (HalfOddOrder, NuttallHalfOddOrders, is_half_odd,
                          marcum_central, marcum_central_half_odd,
                          marcum_central_step, marcum_half_odd,
                          nuttall_gamma_sum, nuttall_half_odd,
                          nuttall_norm_half_odd)
from .evaluate import marcum_eval, nuttall_eval
from .params import (BoundUnavailable, ConvergenceError, DomainError, Eval,
                     MarcumArgs, NuttallArgs)
from .properties import (CONJECTURE_SCANS, THEOREM_CLAUSES, GridSpec,
                         PropertyVerdict, check_logconcave, check_logconvex,
                         check_monotone, clause_statement,
                         conjecture_scan_ids, run_clause, run_theorem_suite,
                         scan_conjectures, theorem_clause_ids)
from .quadrature import (DEFAULT_EPSREL, STANDARD_A, STANDARD_B, STANDARD_NU,
                         ccdf_zero_dof, marcum_p_quad, marcum_q_quad,
                         nuttall_lower_quad, nuttall_q_norm_quad,
                         nuttall_q_quad, pdf_noncentral_chi,
                         pdf_noncentral_chisq)

__all__ = [
    "__version__",
    "BoundReport", "BoundUnavailable", "ConvergenceError", "DomainError",
    "Eval", "GridSpec", "HalfOddOrder", "MarcumArgs", "NuttallArgs",
    "NuttallHalfOddOrders", "OrderBracket", "PropertyVerdict",
    "CONJECTURE_SCANS", "THEOREM_CLAUSES",
    "DEFAULT_EPSREL", "STANDARD_A", "STANDARD_B", "STANDARD_NU",
    "ccdf_zero_dof", "check_logconcave", "check_logconvex", "check_monotone",
    "clause_statement", "conjecture_scan_ids", "is_half_odd",
    "marcum_asym", "marcum_bounds", "marcum_central",
    "marcum_central_half_odd", "marcum_central_step", "marcum_eval",
    "marcum_half_odd", "marcum_p_quad", "marcum_q_quad",
    "nuttall_bounds", "nuttall_eval", "nuttall_gamma_sum",
    "nuttall_half_odd", "nuttall_lower_quad", "nuttall_norm_asym",
    "nuttall_norm_half_odd", "nuttall_q_norm_quad", "nuttall_q_quad",
    "nuttall_std_asym", "pdf_noncentral_chi", "pdf_noncentral_chisq",
    "run_clause", "run_theorem_suite", "scan_conjectures", "select_bounds",
    "theorem_clause_ids",
]
