"""Test suite for the asymptotic character ratio estimates, the mixing criterion and the dimension sum."""

__author__ = "pycutoff contributors"
__status__ = "Development"

from fractions import Fraction
from math import exp, inf, log

import pandas as pd
import pytest

from pycutoff import config
from pycutoff.asymptotics import RatioEstimate, log_abs, main_term_part_a, error_bound_part_a, mt_upper_bound, \
    bound_part_b, power_sum, main_term_part_c, small_k_bound, criterion_bound, power_sum_bound, \
    mixing_criterion_check, mixing_constant_threshold, calibrate_mixing_constant, dimension_sum, \
    diaconis_shahshahani_bound, cutoff_time, upper_mixing_time, lower_mixing_time, estimate_ratio, regime_table
from pycutoff.characters import char_ratio_kcycle, log_dimension
from pycutoff.exceptions import RegimeViolation
from pycutoff.partitions import Partition, enumerate_partitions, partition_count

# meta infos
accuracy = 1e-6


def setup_module():
    print("\n")
    print("==========================")
    print("| Test Suite Asymptotics |")
    print("==========================")


def P(*parts):
    return Partition(parts)


def test_ratio_estimate():
    est = RatioEstimate.from_value(Fraction(-1, 2), -inf, "exact", exact=Fraction(-1, 2))
    assert est.sign == -1
    assert est.main_term == pytest.approx(-0.5, rel=accuracy)
    assert est.valid
    assert est.to_dict()["exact"] == "-1/2"

    est = RatioEstimate.from_value(0, inf, "part_b")
    assert est.main_term == 0.0
    assert not est.valid

    with pytest.raises(ValueError):
        RatioEstimate(0.0, 1, 0.0, "part_d")


def test_log_abs():
    assert log_abs(0) == -inf
    assert log_abs(Fraction(-1, 2)) == pytest.approx(log(0.5), rel=accuracy)
    assert log_abs(Fraction(10 ** 400, 3)) == pytest.approx(400 * log(10) - log(3), rel=accuracy)


##########
# part a #
##########


def test_main_term_part_a_examples():
    assert main_term_part_a(P(5, 1), 3) == Fraction(2, 5)
    for n in (6, 20, 57):
        for k in (2, 3, n - 1):
            assert main_term_part_a(Partition([n]), k) == 1
    assert main_term_part_a(P(8, 2), 5) == char_ratio_kcycle(P(8, 2), 5)


def test_main_term_part_a_regime():
    with pytest.raises(RegimeViolation):
        main_term_part_a(P(5, 1), 3, strict=True)
    with pytest.raises(RegimeViolation):
        main_term_part_a(P(6), 6)
    with pytest.raises(ValueError):
        main_term_part_a(P(5, 1), 1)
    assert main_term_part_a(P(40, 2), 3, strict=True) == char_ratio_kcycle(P(40, 2), 3)


def test_main_term_part_a_exact_below_r():
    """The main term is the exact ratio whenever r < k."""

    for n in range(6, 13):
        for lam in enumerate_partitions(n):
            r = n - lam.parts[0]
            for k in range(max(2, r + 1), n + 1):
                if r + k + 1 >= n / 2:
                    break
                assert main_term_part_a(lam, k) == char_ratio_kcycle(lam, k)


def test_error_bound_part_a():
    assert error_bound_part_a(100, 5, 3) == -inf
    expected = 10 * (log(1.01 * 111 / 9990) + 0.1)
    assert error_bound_part_a(10 ** 4, 10, 100, epsilon=0.01) == pytest.approx(expected, rel=accuracy)
    assert expected == pytest.approx(-43.9, abs=0.1)
    with pytest.raises(ValueError):
        error_bound_part_a(10, 10, 0)
    with pytest.raises(RegimeViolation):
        error_bound_part_a(10, 3, 4, strict=True)


def test_mt_upper_bound():
    assert mt_upper_bound(100, 4, 0) == 0.0
    assert mt_upper_bound(100, 4, 10) == pytest.approx(-0.4, rel=accuracy)
    assert mt_upper_bound(10, 2, 3) == pytest.approx(-0.6, rel=accuracy)
    with pytest.raises(RegimeViolation):
        mt_upper_bound(10, 2, 3, strict=True)


@pytest.mark.slow
def test_mt_upper_bound_first_row_90():
    bound = exp(mt_upper_bound(100, 4, 10))
    for tail in enumerate_partitions(10):
        lam = Partition((90,) + tail.parts)
        assert float(main_term_part_a(lam, 4)) <= bound


##########
# part b #
##########


def test_bound_part_b():
    n = 10 ** 6
    lam = P(400000, 400000, 200000)
    assert bound_part_b(lam, 100) == -50.0
    assert bound_part_b(Partition([n]), 100) is None
    assert bound_part_b(lam, int(5 * log(n))) is None
    assert bound_part_b(lam, int(5 * log(n)), force=True) == pytest.approx(-5 * log(n) / 2, abs=1.0)


def test_bound_part_b_forced_regime():
    """Where the large-k bound applies with the k-range check dropped, it bounds the exact ratio."""

    for n in (12, 14):
        for lam in enumerate_partitions(n):
            for k in (n - 1, n):
                bound = bound_part_b(lam, k, force=True)
                if bound is not None:
                    assert log_abs(char_ratio_kcycle(lam, k)) <= bound


##########
# part c #
##########


def test_power_sum():
    lam = P(3, 2)
    a, b = lam.to_frobenius().a, lam.to_frobenius().b
    expected = sum((x / 5) ** 3 for x in a + b)
    assert power_sum(lam, 3) == expected


def test_main_term_part_c_examples():
    n = 100
    est = main_term_part_c(Partition([n]), 2)
    assert est.regime == "part_c"
    assert est.valid
    assert est.main_term == pytest.approx((99.5 / 100) ** 2, rel=accuracy)

    est = main_term_part_c(Partition([1] * n), 3)
    assert est.sign == 1
    assert est.main_term == pytest.approx((99.5 / 100) ** 3, rel=accuracy)

    est = main_term_part_c(Partition([1] * n), 2)
    assert est.sign == -1

    with pytest.raises(RegimeViolation):
        main_term_part_c(Partition([n]), 20, strict=True)
    assert not main_term_part_c(Partition([n]), 20).valid


@pytest.mark.slow
def test_main_term_part_c_convergence():
    gaps = []
    for n in (100, 200, 400):
        lam = P(n - 10, 10)
        est = main_term_part_c(lam, 2)
        assert est.main_term == pytest.approx(((n - 10.5) / n) ** 2, rel=accuracy)
        exact = float(char_ratio_kcycle(lam, 2))
        gaps.append(abs(est.main_term - exact) / abs(exact))
    assert gaps[0] > gaps[1] > gaps[2]


def test_small_k_bound():
    n = 400
    for lam in (Partition([n]), P(n - 10, 10), P(200, 200)):
        assert small_k_bound(lam, 2) >= log_abs(char_ratio_kcycle(lam, 2)) - accuracy


######################
# criterion and sums #
######################


def test_criterion_bound():
    for n, k in ((10, 2), (50, 7)):
        assert criterion_bound(n, k, 1, 0.0) == pytest.approx(-k / n, rel=accuracy)
    log_n = log(100)
    small = -5 + 10 * 50 * log(50) / (2 * 100 * log_n) + 500 / (100 * log_n)
    assert criterion_bound(100, 10, 50, 1.0) == pytest.approx(small, rel=accuracy)
    assert small == pytest.approx(-1.7906, abs=1e-3)
    with pytest.raises(ValueError):
        criterion_bound(10, 2, 0, 1.0)


def test_power_sum_bound():
    assert power_sum_bound(10, 2, 5) == pytest.approx(log(0.5), rel=accuracy)
    assert power_sum_bound(10 ** 6, 2, 1) == pytest.approx(0.0, abs=1e-4)
    assert power_sum_bound(10, 2, 10) == -inf
    assert power_sum_bound(100, 4, 10, "small_r") == pytest.approx(-0.4 + 0.04, rel=accuracy)
    # beyond c0 the small r envelope is the universal one
    assert power_sum_bound(100, 4, 40, "small_r") == power_sum_bound(100, 4, 40, "all_r") == pytest.approx(-0.8)
    assert power_sum_bound(100, 4, 40, "small_r", cfg=config.asymptotics().update_template(c0=0.5)) == \
        pytest.approx(-1.6 + 0.64)
    with pytest.raises(RegimeViolation):
        power_sum_bound(100, 4, 40, "small_r", strict=True)
    with pytest.raises(ValueError):
        power_sum_bound(100, 4, 10, "medium_r")
    with pytest.raises(ValueError):
        power_sum_bound(10, 2, 11)


def test_power_sum_bound_grid():
    for r in range(1, 100):
        for k in range(2, 51):
            assert power_sum_bound(100, k, r) <= power_sum_bound(100, k, r, "all_r") + 1e-12


def test_mixing_criterion_trivial_cases():
    n = 10
    sign = Partition([1] * n)
    for k in range(2, n):
        assert mixing_criterion_check(sign, k, 0.0)
        assert mixing_constant_threshold(sign, k) == -inf
    # vanishing ratios satisfy the criterion for every constant
    assert char_ratio_kcycle(P(9, 1), 9) == 0
    assert mixing_criterion_check(P(9, 1), 9, -100.0)


def test_mixing_constant_threshold():
    lam, k = P(7, 1), 2
    c = mixing_constant_threshold(lam, k)
    assert c == pytest.approx(2 * log(7) / (8 * -log(5 / 7)) - log(8), rel=accuracy)
    assert mixing_criterion_check(lam, k, c + 1e-9)
    assert not mixing_criterion_check(lam, k, c - 1e-3)


@pytest.mark.slow
def test_calibrated_constant():
    """The shipped constant dominates the calibrated one, and the criterion holds for every nontrivial partition."""

    cfg = config.asymptotics()
    c = calibrate_mixing_constant([8, 10])
    assert c <= cfg.c1
    for lam in enumerate_partitions(10):
        if len(lam) == 1:
            continue
        for k in range(2, 10):
            assert mixing_criterion_check(lam, k, cfg.c1)


def test_dimension_sum():
    for n in (5, 10, 20):
        assert dimension_sum(n, 0.0) == pytest.approx(partition_count(n), rel=accuracy)
    with pytest.raises(ValueError):
        dimension_sum(1, 1.0)


@pytest.mark.slow
def test_dimension_sum_bounded():
    reference = dimension_sum(10, 8.0)
    for n in (20, 30, 40):
        assert dimension_sum(n, 8.0) <= reference


def test_diaconis_shahshahani_bound():
    for lam in enumerate_partitions(10):
        assert log_dimension(lam) <= diaconis_shahshahani_bound(lam) + accuracy


################
# mixing times #
################


def test_mixing_times():
    assert cutoff_time(10, 2) == pytest.approx(5 * log(10), rel=accuracy)
    assert lower_mixing_time(10, 2, 0.1) == pytest.approx(4.5 * log(10), rel=accuracy)
    assert upper_mixing_time(10, 2, 0.0) > cutoff_time(10, 2)
    with pytest.raises(ValueError):
        lower_mixing_time(10, 2, 1.0)


##############
# dispatcher #
##############


def test_estimate_ratio_exact():
    est = estimate_ratio(P(5, 1), 3)
    assert est.regime == "exact"
    assert est.exact == Fraction(2, 5)
    assert est.log_error_bound == -inf


def test_estimate_ratio_part_a():
    n = 100
    est = estimate_ratio(Partition([n]), 2, use_exact=False)
    assert est.regime == "part_a"
    assert est.main_term == pytest.approx(1.0, rel=accuracy)
    assert est.log_error_bound == -inf

    # conjugation flips the sign by (-1)^{k-1}
    assert estimate_ratio(Partition([1] * n), 2, use_exact=False).main_term == pytest.approx(-1.0, rel=accuracy)
    assert estimate_ratio(Partition([1] * n), 3, use_exact=False).main_term == pytest.approx(1.0, rel=accuracy)


def test_estimate_ratio_part_a_matches_exact():
    lam = P(20, 1, 1)
    for k in (3, 4):
        est = estimate_ratio(lam, k, use_exact=False)
        assert est.regime == "part_a"
        assert est.main_term == pytest.approx(float(char_ratio_kcycle(lam, k)), rel=accuracy)


def test_estimate_ratio_large_k():
    est = estimate_ratio(P(500, 500), 50, use_exact=False)
    assert est.regime == "part_b"
    assert est.log_error_bound == -25.0

    est = estimate_ratio(P(50, 50), 28, use_exact=False)
    assert est.regime == "part_b"
    assert not est.valid


def test_estimate_ratio_part_c():
    est = estimate_ratio(P(200, 200), 2, use_exact=False)
    assert est.regime == "part_c"
    assert est.valid
    assert est.main_term == pytest.approx((199.5 ** 2 + 198.5 ** 2) / 400 ** 2, rel=accuracy)


def test_regime_table():
    table = regime_table(8, 3)
    assert len(table) == partition_count(8)
    assert list(table.columns) == ["partition", "frobenius", "regime", "sign", "log_main_term", "log_error_bound",
                                   "exact_log_ratio", "log_dimension_ratio"]
    assert set(table["regime"]) <= {"part_a", "part_b", "part_c"}
    row = table.loc[table["partition"] == "8"].iloc[0]
    assert row["exact_log_ratio"] == 0.0
    assert pd.isna(row["log_dimension_ratio"])
    # f and D agree on (n-1,1)
    row = table.loc[table["partition"] == "7,1"].iloc[0]
    assert row["log_dimension_ratio"] == pytest.approx(1.0, rel=accuracy)
    assert (table["log_dimension_ratio"].dropna() > 0).all()
