"""Bound constructions: soundness against the exact value, validity
gating, degenerate short-circuits, documented tightness crossovers, and
report invariants.
"""

import pytest

from qfuncs import MarcumArgs, NuttallArgs, OrderBracket, select_bounds
from qfuncs.params import DomainError

from conftest import marcum_report, nuttall_report

TOL = 1e-9


def test_order_bracket():
    br = OrderBracket(2.2)
    assert (br.nu1, br.nu2) == (2.5, 1.5)
    br = OrderBracket(2.5)
    assert (br.nu1, br.nu2) == (3.5, 2.5)  # upper neighbor is strict


@pytest.mark.parametrize("nu", [0.7, 1.2, 1.8, 2.0, 3.3, 5.1, 7.6, 9.4])
@pytest.mark.parametrize("a", [0.0, 0.5, 2.0, 6.0])
def test_marcum_bounds_bracket_exact(nu, a):
    for b in (0.1, 1.0, 3.0, 8.0, 15.0):
        rep = marcum_report(nu, a, b)
        exact = rep.exact.value
        if exact <= 1e-280:
            continue
        for name, v in rep.bounds.items():
            if name.startswith("lb"):
                assert v <= exact * (1.0 + TOL), (name, nu, a, b)
            else:
                assert v >= exact * (1.0 - TOL), (name, nu, a, b)


@pytest.mark.parametrize("gap", [1, 2, 3])
@pytest.mark.parametrize("normalized", [False, True])
def test_nuttall_bounds_bracket_exact(gap, normalized):
    for nu in (0.7, 1.8, 4.2, 6.5):
        for a in (0.5, 2.0, 6.0):
            for b in (0.1, 1.0, 4.0, 9.0):
                rep = nuttall_report(nu + gap, nu, a, b, normalized)
                exact = rep.exact.value
                if exact <= 1e-280:
                    continue
                for name, v in rep.bounds.items():
                    if name.startswith("lb"):
                        assert v <= exact * (1.0 + TOL), (name, nu, a, b)
                    else:
                        assert v >= exact * (1.0 - TOL), (name, nu, a, b)


def test_validity_gating_and_reasons():
    rep = marcum_report(1.2, 3.0, 1.0)
    assert set(rep.bounds) == {"lb2", "ub1", "ub3"}
    assert rep.unavailable["lb1"] == "validity: lb1 requires nu >= 1.5, got 1.2"
    assert rep.unavailable["ub2"] == "validity: ub2 requires nu >= 2.5, got 1.2"
    assert rep.unavailable["ub4"] == "validity: ub4 requires nu >= 1.5, got 1.2"


def test_central_case_gates_difference_bounds():
    # lb2/ub3/ub4 anchor on the noncentral-central difference, which
    # vanishes identically at a = 0
    rep = marcum_report(2.0, 0.0, 1.5)
    assert "lb1" in rep.bounds and "ub1" in rep.bounds
    for name in ("lb2", "ub3", "ub4"):
        assert name in rep.unavailable


def test_cancellation_gates_difference_bounds_near_zero_threshold():
    # at tiny b both bracket values are 1 to machine precision, so the
    # anchored differences vanish in doubles and the bounds go absent
    rep = marcum_report(5.1, 1.8, 0.05)
    assert "ub3" in rep.unavailable and "ub4" in rep.unavailable
    assert "cancellation" in rep.unavailable["ub3"]
    assert "lb1" in rep.bounds and "ub1" in rep.bounds


def test_half_odd_order_degenerates_to_exact():
    rep = marcum_report(2.5, 2.0, 3.0)
    assert rep.degenerate_exact
    exact = rep.exact.value
    for name in ("lb1", "ub1", "ub2"):
        assert rep.bounds[name] == pytest.approx(exact, rel=1e-12)
        assert abs(rep.rel_errors[name]) < 1e-12


def test_rel_error_signs_match_bound_side():
    rep = marcum_report(3.3, 2.0, 4.0)
    for name, rel in rep.rel_errors.items():
        if name.startswith("lb"):
            assert rel <= TOL
        else:
            assert rel >= -TOL


def test_upper_family_crossover_prefers_short_extrapolation():
    # the family anchored nearer the real order wins: fractional part
    # 0.1 extrapolates 0.4 upward from below vs 0.6 downward from above
    for k in range(1, 49):
        b = 0.25 * k
        rep = marcum_report(5.1, 1.8, b)
        if "ub3" in rep.bounds and "ub4" in rep.bounds:
            assert rep.bounds["ub3"] <= rep.bounds["ub4"] * (1.0 + 1e-12)
        rep = marcum_report(1.8, 1.8, b)
        if "ub3" in rep.bounds and "ub4" in rep.bounds:
            assert rep.bounds["ub4"] <= rep.bounds["ub3"] * (1.0 + 1e-12)


def test_nuttall_upper_crossover():
    for k in range(1, 49):
        b = 0.25 * k
        rep = nuttall_report(3.7, 1.7, 1.0, b, True)
        assert rep.bounds["ub2"] <= rep.bounds["ub1"] * (1.0 + 1e-12)


def test_recommendation_tracks_order_fraction():
    rep = marcum_report(5.1, 1.8, 3.0)
    assert rep.recommended_upper == "ub3"
    rep = marcum_report(1.8, 1.8, 3.0)
    assert rep.recommended_upper == "ub4"
    assert rep.recommended_lower is not None


def test_recommendation_validation_flag_is_honest():
    rep = marcum_report(5.1, 1.8, 3.0)
    if rep.recommendation_validated:
        assert rep.tightest_upper() == rep.recommended_upper
        assert rep.tightest_lower() == rep.recommended_lower


def test_small_amplitude_bounds_stay_valid():
    # the bracketing remains sound for amplitudes below one
    for b in (0.5, 2.0, 5.0):
        rep = nuttall_report(3.0, 1.0, 0.5, b, False)
        exact = rep.exact.value
        for name, v in rep.bounds.items():
            if name.startswith("lb"):
                assert v <= exact * (1.0 + TOL)
            else:
                assert v >= exact * (1.0 - TOL)


def test_gap_must_be_positive_integer():
    with pytest.raises(DomainError):
        select_bounds(NuttallArgs(2.7, 1.2, 1.0, 2.0))
    with pytest.raises(DomainError):
        select_bounds(NuttallArgs(1.2, 1.2, 1.0, 2.0))


def test_report_norm_and_std_rel_errors_agree():
    # the amplitude power cancels in relative error, so both
    # normalizations see identical tightness
    std = nuttall_report(4.2, 2.2, 2.0, 3.0, False)
    norm = nuttall_report(4.2, 2.2, 2.0, 3.0, True)
    for name in std.rel_errors:
        assert std.rel_errors[name] == pytest.approx(
            norm.rel_errors[name], rel=1e-9, abs=1e-12)
