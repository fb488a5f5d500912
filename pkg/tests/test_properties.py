"""Verification harness internals and registry: grid validation, the
three inequality checkers on known functions, clause execution, and the
documented positive and negative findings.
"""

import math

import pytest

from qfuncs import (CONJECTURE_SCANS, THEOREM_CLAUSES, GridSpec,
                    PropertyVerdict, check_logconcave, check_logconvex,
                    check_monotone, clause_statement, conjecture_scan_ids,
                    run_clause, theorem_clause_ids)
from qfuncs.params import DomainError

from conftest import marcum_value, nuttall_value


def uniform_grid(start, stop, count, **kw):
    step = (stop - start) / (count - 1)
    return GridSpec(points=tuple(start + k * step for k in range(count)), **kw)


def test_grid_spec_validation():
    with pytest.raises(DomainError):
        GridSpec(axis="order_nu", points=(1.0,), fixed={})  # too short
    with pytest.raises(DomainError):
        GridSpec(axis="order_nu", points=(2.0, 1.0), fixed={})  # not increasing
    with pytest.raises(DomainError):
        GridSpec(axis="sideways", points=(1.0, 2.0), fixed={})
    grid = GridSpec(axis="param_b", points=(1.0, 4.0), fixed={"nu": 2.0},
                    transform="sqrt")
    assert grid.arguments() == pytest.approx((1.0, 2.0))


def test_monotone_checker_accepts_and_rejects():
    grid = uniform_grid(0.0, 5.0, 21, axis="param_b", fixed={})
    rising = check_monotone(lambda x: x * x + 1.0, grid,
                            direction="increasing")
    assert rising.passed and rising.checked_points == 21
    falling = check_monotone(lambda x: x * x + 1.0, grid,
                             direction="decreasing", property_id="bad")
    assert not falling.passed
    assert falling.property_id == "bad"
    assert len(falling.violations) == 20  # every consecutive pair rises


def test_monotone_checker_skips_underflowed_values():
    grid = uniform_grid(1.0, 6.0, 6, axis="param_b", fixed={})
    # dip below the positivity floor in the middle; the checker must
    # not compare across the gap
    def f(x):
        return 0.0 if 2.5 < x < 4.5 else math.exp(-x)
    verdict = check_monotone(f, grid, direction="decreasing")
    assert verdict.passed
    assert len(verdict.excluded_points) == 2


def test_curvature_checkers_on_known_functions():
    grid = uniform_grid(0.5, 4.0, 36, axis="param_b", fixed={})
    gauss = check_logconcave(lambda x: math.exp(-x * x), grid)
    assert gauss.passed
    anti = check_logconvex(lambda x: math.exp(x * x), grid)
    assert anti.passed
    swapped = check_logconcave(lambda x: math.exp(x * x), grid)
    assert not swapped.passed
    assert swapped.max_residual > 0.0


def test_curvature_checker_requires_uniform_spacing():
    grid = GridSpec(axis="param_b", points=(0.0, 1.0, 3.0), fixed={})
    with pytest.raises(DomainError):
        check_logconcave(lambda x: 1.0, grid)


def test_verdict_consistency_enforced():
    with pytest.raises(ValueError):
        PropertyVerdict(property_id="x", checked_points=3,
                        violations=((1.0, 2.0),), max_residual=2.0,
                        passed=True)


def test_registry_shape():
    ids = theorem_clause_ids()
    assert len(ids) == 40
    assert ids[0] == "theorem1a_nu"
    assert "theorem3b" in ids and "turan" in ids
    assert len(conjecture_scan_ids()) == 8
    for clause_id in ids:
        statement = clause_statement(clause_id)
        assert statement and "theorem" not in statement.lower()
    with pytest.raises(DomainError):
        clause_statement("theorem99")
    with pytest.raises(DomainError):
        run_clause("theorem99")


@pytest.mark.parametrize("clause_id", [
    "theorem1a_nu", "theorem2a", "theorem3b", "theorem5d", "theorem7a_norm",
    "corollary2b", "theorem8a", "turan",
])
def test_representative_clauses_pass(clause_id):
    verdict = run_clause(clause_id)
    assert verdict.passed, verdict.note
    assert verdict.checked_points > 0


def test_refinement_does_not_flip_a_passing_clause():
    coarse = run_clause("theorem3b")
    fine = run_clause("theorem3b", refine=2)
    assert coarse.passed and fine.passed
    assert fine.checked_points > coarse.checked_points


def test_negative_findings_reproduce():
    # the order-3/4 concavity scan and its convexity twin must both
    # locate violations: the map is neither log-concave nor log-convex
    concave = run_clause("remark1_concavity")
    convex = run_clause("remark1_convexity")
    assert not concave.passed and len(concave.violations) > 0
    assert not convex.passed and len(convex.violations) > 0
    # below order one half the complement loses log-concavity
    small_order = run_clause("remark2_direct")
    assert not small_order.passed
    assert small_order.max_residual > 1e-4


def test_order_map_increases_along_documented_example():
    values = [marcum_value(float(nu), 2.0, 3.0) for nu in range(1, 7)]
    assert values == sorted(values)


def test_second_order_map_is_log_convex_not_log_concave():
    # along the first order with the second fixed, the normalized
    # function bends upward in the log: ratios grow
    mus = (3.0, 4.0, 5.0, 6.0)
    vals = [nuttall_value(mu, 2.0, 1.0, 1.5, True) for mu in mus]
    ratios = [vals[i + 1] / vals[i] for i in range(3)]
    assert ratios[1] > ratios[0] * (1.0 - 1e-9)
    assert ratios[2] > ratios[1] * (1.0 - 1e-9)


def test_theorem_clause_gating_examples_present():
    # the registry pins the documented example points for the
    # log-convexity clauses
    combos = THEOREM_CLAUSES["theorem7a_norm"].combos
    assert {"nu": 2.0, "a": 1.0, "b": 1.5} in [dict(c) for c in combos]
    assert "remark2_direct" in CONJECTURE_SCANS
