# -*- coding: utf-8 -*-
#
#
# pycutoff software framework for exact and asymptotic character ratios
# of the symmetric group and the mixing behaviour of conjugacy class
# random walks on S_n.
#
# Copyright (C) the pycutoff contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>
"""Asymptotic main terms and bounds for character ratios of S_n at k-cycles, the criterion behind the mixing time
upper bound and the dimension sum. All estimates are returned in log space, with signs tracked separately.
"""

# external _imports
from fractions import Fraction
from math import comb, exp, floor, inf, lgamma, log, sqrt
from typing import Iterable, Optional, Union

import numpy as np
import pandas as pd
from scipy.special import logsumexp

# pycutoff internal _imports
from pycutoff import config
from pycutoff.characters import char_ratio_kcycle, dimension, log_dimension, falling_factorial, larsen_shalev_ratio
from pycutoff.exceptions import CapExceeded, RegimeViolation
from pycutoff.partitions import Partition, enumerate_partitions

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


#########
# types #
#########


class RatioEstimate:
    """Estimate of a character ratio. The main term is sign * exp(log_main_term) and the true ratio lies within
    exp(log_error_bound) of it; `log_error_bound = inf` flags an estimate whose hypotheses are not met."""

    __slots__ = ["log_main_term", "sign", "log_error_bound", "regime", "exact"]

    def __init__(self, log_main_term: float, sign: int, log_error_bound: float, regime: str,
                 exact: Fraction = None):
        if regime not in ("part_a", "part_b", "part_c", "exact"):
            raise ValueError(f"Unknown regime '{regime}'.")
        self.log_main_term = log_main_term
        self.sign = sign
        self.log_error_bound = log_error_bound
        self.regime = regime
        self.exact = exact

    @classmethod
    def from_value(cls, value: Fraction, log_error_bound: float, regime: str, exact: Fraction = None):
        """Create an estimate from an exact (signed) main term."""
        return cls(log_abs(value), _sign(value), log_error_bound, regime, exact=exact)

    @property
    def main_term(self) -> float:
        return self.sign * exp(self.log_main_term) if self.sign else 0.0

    @property
    def valid(self) -> bool:
        return self.log_error_bound != inf

    def to_dict(self) -> dict:
        return {"regime": self.regime,
                "sign": self.sign,
                "log_main_term": self.log_main_term,
                "log_error_bound": self.log_error_bound,
                "exact": None if self.exact is None else str(self.exact)}

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.regime}: {self.main_term:.6g}>"


def log_abs(x: Union[Fraction, int]) -> float:
    """log|x| for exact rationals of arbitrary size, -inf for zero."""
    x = Fraction(x)
    if x == 0:
        return -inf
    return log(abs(x.numerator)) - log(x.denominator)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _frobenius_halves(lam: Partition):
    fc = lam.to_frobenius()
    return fc.a, fc.b


##########
# part a #
##########


def main_term_part_a(lam: Partition, k: int, cfg=None, strict: bool = False) -> Fraction:
    """Main term of the character ratio for partitions with a long first row,

    MT = (a_1 - 1/2)^(k) / n^(k) prod_{j>=2} (a_1 - a_j - k) / (a_1 - a_j) prod_{j>=1} (a_1 + b_j) / (a_1 + b_j - k).

    Parameters
    ----------
    lam
        Partition of n.
    k
        Cycle length.
    cfg
        `AsymptoticConfig` or path to one.
    strict
        If true, raise a `RegimeViolation` unless r + k + 1 < (1/2 - epsilon) n with r = n - lambda_1.

    Returns
    -------
    Fraction
    """
    n = lam.n
    if not 2 <= k <= n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n] for n = {n}.")
    if strict:
        cfg = config.asymptotics(cfg)
        r = n - lam.parts[0]
        if r + k + 1 >= (0.5 - cfg.epsilon) * n:
            raise RegimeViolation(f"Long first row regime requires r + k + 1 < (1/2 - epsilon) n, received r = {r}, "
                                  f"k = {k}, n = {n}.")

    a, b = _frobenius_halves(lam)
    a1 = a[0]
    value = Fraction(falling_factorial(int(a1 - Fraction(1, 2)), k), falling_factorial(n, k))
    for a_j in a[1:]:
        value *= (a1 - a_j - k) / (a1 - a_j)
    for b_j in b:
        if a1 + b_j == k:
            raise RegimeViolation(f"Main term of {lam} is undefined at k = {k}: a_1 + b_j = k.")
        value *= (a1 + b_j) / (a1 + b_j - k)
    return value


def error_bound_part_a(n: int, k: int, r: int, epsilon: float = None, cfg=None, strict: bool = False) -> float:
    """Log of the additive error envelope k [log((1 + eps)(k + 1 + r) / (n - k)) + O r^{-1/2}] of the long first row
    estimate. The error vanishes exactly for r < k, which is reported as -inf."""
    cfg = config.asymptotics(cfg)
    epsilon = cfg.epsilon if epsilon is None else epsilon
    if not 2 <= k < n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n) for n = {n}.")
    if strict and r + k + 1 >= (0.5 - epsilon) * n:
        raise RegimeViolation(f"Long first row regime requires r + k + 1 < (1/2 - epsilon) n, received r = {r}, "
                              f"k = {k}, n = {n}.")
    if r < k:
        return -inf
    return k * (log((1 + epsilon) * (k + 1 + r) / (n - k)) + cfg.o_part_a / sqrt(r))


def mt_upper_bound(n: int, k: int, r: int, strict: bool = False) -> float:
    """Log of the bound MT <= exp(-kr/n), valid for k + r + 1 < n/2."""
    if strict and not k + r + 1 < n / 2:
        raise RegimeViolation(f"The main term bound requires k + r + 1 < n/2, received k = {k}, r = {r}, n = {n}.")
    return -k * r / n


##########
# part b #
##########


def bound_part_b(lam: Partition, k: int, cfg=None, force: bool = False) -> Optional[float]:
    """Log bound -k/2 on |chi / f| for large k and partitions with short first row and column. Applies if
    k_switch_factor log n <= k <= delta n and b_1 <= a_1 <= exp(-theta) n; returns None otherwise. With `force`, the
    condition on k is not checked.
    """
    cfg = config.asymptotics(cfg)
    n = lam.n
    a, b = _frobenius_halves(lam)
    if not force and not cfg.k_switch_factor * log(n) <= k <= cfg.delta * n:
        return None
    if not b[0] <= a[0] <= exp(-cfg.theta) * n:
        return None
    return -k / 2


##########
# part c #
##########


def power_sum(lam: Partition, k: int) -> Fraction:
    """Exact sum_i (a_i/n)^k + sum_i (b_i/n)^k over the Frobenius coordinates."""
    n = lam.n
    a, b = _frobenius_halves(lam)
    return sum((x / n) ** k for x in a + b)


def _large_coordinate_terms(lam: Partition, k: int):
    n = lam.n
    threshold = k * sqrt(n)
    a, b = _frobenius_halves(lam)
    big_a = [x for x in a if x > threshold]
    big_b = [x for x in b if x > threshold]
    return n, big_a, big_b


def main_term_part_c(lam: Partition, k: int, cfg=None, strict: bool = False) -> RatioEstimate:
    """Power sum approximation for small k,

    chi / f ~ sum_{a_i > k sqrt(n)} (a_i/n)^k + (-1)^{k-1} sum_{b_i > k sqrt(n)} (b_i/n)^k,

    with relative errors O(k n^{3/4+eps} / a_i) on each term and an additive error
    O(n^{1/2} (log n)^2 (k (log n)^p / sqrt(n))^k), where p is `part_c_log_power`. The error envelope reported is the
    sum of the relative errors times their terms plus the additive error.
    """
    cfg = config.asymptotics(cfg)
    n, big_a, big_b = _large_coordinate_terms(lam, k)
    if k >= n ** (0.5 - cfg.epsilon):
        if strict:
            raise RegimeViolation(f"The power sum approximation requires k < n^(1/2 - epsilon), received k = {k}, "
                                  f"n = {n}.")
        hypotheses_hold = False
    else:
        hypotheses_hold = True

    sign_b = 1 if k % 2 else -1
    main = sum((x / n) ** k for x in big_a) + sign_b * sum((x / n) ** k for x in big_b)

    log_n = log(n)
    log_rel = log(cfg.o_part_c_relative * k) + (0.75 + cfg.epsilon) * log_n
    log_terms = [k * (log(x) - log_n) + log_rel - log(x) for x in big_a + big_b]
    log_add = log(cfg.o_part_c_additive) + 0.5 * log_n + 2 * log(log_n) + \
        k * (log(k) + cfg.part_c_log_power * log(log_n) - 0.5 * log_n)
    log_err = float(logsumexp(log_terms + [log_add]))

    return RatioEstimate.from_value(main, log_err if hypotheses_hold else inf, "part_c")


def small_k_bound(lam: Partition, k: int, cfg=None) -> float:
    """Log of the small-k envelope

    (1 + O(log n / n^{1/4})) [sum_{a_i > k sqrt(n)} (a_i/n)^k + sum_{b_i > k sqrt(n)} (b_i/n)^k]
    + O(e^{-k} (log n)^4 / n^{1/4}).
    """
    cfg = config.asymptotics(cfg)
    n, big_a, big_b = _large_coordinate_terms(lam, k)
    log_n = log(n)
    total = sum((x / n) ** k for x in big_a + big_b)
    log_main = log_abs(total) + log(1 + cfg.o_small_k_relative * log_n / n ** 0.25)
    log_add = log(cfg.o_small_k_additive) - k + 4 * log(log_n) - 0.25 * log_n
    return float(np.logaddexp(log_main, log_add))


######################
# criterion and sums #
######################


def criterion_bound(n: int, k: int, r: int, c: float) -> float:
    """max(-kr/n + kr log r / (2 n log n) + c k r / (n log n), -k/2 + c k / log n)"""
    if n < 3 or not 1 <= r <= n - 1:
        raise ValueError(f"The criterion needs n >= 3 and 1 <= r <= n - 1, received n = {n}, r = {r}.")
    log_n = log(n)
    small = -k * r / n + k * r * log(r) / (2 * n * log_n) + c * k * r / (n * log_n)
    large = -k / 2 + c * k / log_n
    return max(small, large)


def power_sum_bound(n: int, k: int, r: int, which: str = "sharp", cfg=None, strict: bool = False) -> float:
    """Log-scale envelopes of the power sum sum (a_i/n)^k + sum (b_i/n)^k for partitions with n - lambda_1 = r and
    a_1 >= b_1, with delta = r/n:

    - sharp: log(l (1-delta)^k + (1 - l (1-delta))^k), l = floor(1/(1-delta)),
    - small_r: -k delta + k delta^2, for delta <= c0,
    - all_r: -k delta / 2.

    Beyond delta = c0 the small_r envelope falls back to all_r, or raises a `RegimeViolation` if `strict`.
    """
    delta = Fraction(r, n)
    if not 0 <= delta <= 1:
        raise ValueError(f"r/n must lie in [0, 1], received r = {r}, n = {n}.")
    if which == "sharp":
        if delta == 1:
            return -inf
        rest = 1 - delta
        ell = floor(1 / rest)
        return log_abs(ell * rest ** k + (1 - ell * rest) ** k)
    if which == "small_r":
        c0 = config.asymptotics(cfg).c0
        if delta <= c0:
            return float(-k * delta + k * delta ** 2)
        if strict:
            raise RegimeViolation(f"The small r envelope requires r/n <= c0 = {c0}, received r = {r}, n = {n}.")
        which = "all_r"
    if which == "all_r":
        return float(-k * delta / 2)
    raise ValueError(f"Unknown envelope '{which}'. Allowed values: sharp, small_r, all_r.")


def mixing_criterion_check(lam: Partition, k: int, c: float, ratio: Fraction = None) -> bool:
    """Whether |chi / f|^{(n/k)(log n + c)} <= 1 / f, i.e. (n/k)(log n + c) log|chi / f| <= -log f. The exact ratio
    is computed unless given."""
    n = lam.n
    if ratio is None:
        ratio = char_ratio_kcycle(lam, k)
    log_ratio = log_abs(ratio)
    if log_ratio == -inf:
        return True
    return (n / k) * (log(n) + c) * log_ratio <= -log(dimension(lam)) + 1e-12


def mixing_constant_threshold(lam: Partition, k: int, ratio: Fraction = None) -> float:
    """Smallest c for which `mixing_criterion_check` holds on (lam, k); -inf if it holds for every c."""
    n = lam.n
    if ratio is None:
        ratio = char_ratio_kcycle(lam, k)
    log_ratio = log_abs(ratio)
    log_f = log(dimension(lam))
    if log_ratio == -inf or (log_ratio == 0.0 and log_f == 0.0):
        return -inf
    if log_ratio == 0.0:
        return inf
    return k * log_f / (n * -log_ratio) - log(n)


def calibrate_mixing_constant(ns: Iterable[int], workers: int = 1, verbose: bool = False) -> float:
    """Smallest constant c for which `mixing_criterion_check` holds for every partition lambda != (n) of every n in
    `ns` and every 2 <= k <= n - 1, using exact ratios. The check is linear in c, so the constant is the maximum of
    the per-case thresholds."""
    c = -inf
    for n in ns:
        if verbose:
            print(f"\t Calibrating over partitions of n = {n}...")
        for lam in enumerate_partitions(n):
            if len(lam) == 1:
                continue
            for k in range(2, n):
                c = max(c, mixing_constant_threshold(lam, k))
    return c


def dimension_sum(n: int, c: float, caps=None) -> float:
    """sum_{lambda |- n} f^{-c / log n}, accumulated in log space from hook lengths."""
    if n < 2:
        raise ValueError(f"The dimension sum needs n >= 2, received n = {n}.")
    caps = config.caps(caps)
    if not caps.allows("hook_n_max", n):
        raise CapExceeded(f"Dimension sum over partitions of n = {n} requested, but the configured cap is "
                          f"n <= {caps.hook_n_max}.")
    exponent = -c / log(n)
    log_terms = np.fromiter((exponent * log_dimension(lam) for lam in enumerate_partitions(n)), dtype=np.float64)
    return float(np.exp(logsumexp(log_terms)))


def diaconis_shahshahani_bound(lam: Partition) -> float:
    """log of C(n, lambda_1) sqrt((n - lambda_1)!), an upper bound on f^lambda."""
    n, first = lam.n, lam.parts[0]
    return log(comb(n, first)) + 0.5 * lgamma(n - first + 1)


################
# mixing times #
################


def cutoff_time(n: int, k: int) -> float:
    return n / k * log(n)


def upper_mixing_time(n: int, k: int, C: float, cfg=None) -> float:
    """Number of steps (n/k)(log n + c1)(1 + (c2 + C) / (2 log n)) after which the L2 bound gives TV^2 = O(e^{-C})."""
    cfg = config.asymptotics(cfg)
    log_n = log(n)
    return n / k * (log_n + cfg.c1) * (1 + (cfg.c2 + C) / (2 * log_n))


def lower_mixing_time(n: int, k: int, eps: float) -> float:
    """(1 - eps)(n/k) log n, before which the walk is not yet mixed."""
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), received {eps}.")
    return (1 - eps) * cutoff_time(n, k)


##############
# dispatcher #
##############


def estimate_ratio(lam: Partition, k: int, cfg=None, use_exact: bool = None, caps=None) -> RatioEstimate:
    """Estimate the character ratio of `lam` at k-cycles by the regime that applies.

    Without loss of generality a_1 >= b_1: otherwise the conjugate partition is estimated and the sign flipped by
    (-1)^{k-1}. For k >= k_switch_factor log n (ties included) the short first row case r > large_r_fraction n uses the
    large-k bound and the remaining partitions the long first row main term; for smaller k the long first row main
    term is used up to r <= n^{r_switch_exponent} and the power sum approximation beyond. Estimates whose hypotheses
    fail carry an infinite error bound.

    Parameters
    ----------
    lam
        Partition of n.
    k
        Cycle length.
    cfg
        `AsymptoticConfig` or path to one.
    use_exact
        Use the exact residue evaluation. Defaults to true if n lies within `caps.exact_n_max`.
    caps
        `CapsConfig` or path to one.

    Returns
    -------
    RatioEstimate
    """
    cfg = config.asymptotics(cfg)
    n = lam.n
    if not 2 <= k <= n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n] for n = {n}.")
    if use_exact is None:
        use_exact = config.caps(caps).allows("exact_n_max", n)
    if use_exact:
        value = char_ratio_kcycle(lam, k)
        return RatioEstimate.from_value(value, -inf, "exact", exact=value)

    a, b = _frobenius_halves(lam)
    flip = 1
    if b[0] > a[0]:
        lam = lam.conjugate()
        flip = 1 if k % 2 else -1
    r = n - lam.parts[0]

    if k >= cfg.k_switch_factor * log(n):
        if r > cfg.large_r_fraction * n:
            bound = bound_part_b(lam, k, cfg)
            return RatioEstimate(-inf, 0, inf if bound is None else bound, "part_b")
        regime = "part_a"
    elif r <= n ** cfg.r_switch_exponent:
        regime = "part_a"
    else:
        regime = "part_c"

    if regime == "part_c":
        est = main_term_part_c(lam, k, cfg)
        est.sign *= flip
        return est

    try:
        main = main_term_part_a(lam, k, cfg)
    except RegimeViolation:
        return RatioEstimate(-inf, 0, inf, "part_a")
    if r + k + 1 < (0.5 - cfg.epsilon) * n:
        err = error_bound_part_a(n, k, r, cfg=cfg)
    else:
        err = inf
    return RatioEstimate.from_value(flip * main, err, "part_a")


def regime_table(n: int, k: int, partitions: Iterable[Partition] = None, cfg=None, caps=None) -> pd.DataFrame:
    """Asymptotic estimate of every partition in `partitions` (all partitions of n by default), one row each, next to
    the exact log ratio where n lies within `caps.exact_n_max`. The last column is the diagnostic log f / log D(lambda)
    against the Larsen-Shalev proxy, empty for the trivial partition."""
    caps = config.caps(caps)
    with_exact = caps.allows("exact_n_max", n)
    rows = []
    for lam in (enumerate_partitions(n) if partitions is None else partitions):
        est = estimate_ratio(lam, k, cfg, use_exact=False)
        rows.append({"partition": str(lam),
                     "frobenius": str(lam.to_frobenius()),
                     "regime": est.regime,
                     "sign": est.sign,
                     "log_main_term": est.log_main_term,
                     "log_error_bound": est.log_error_bound,
                     "exact_log_ratio": log_abs(char_ratio_kcycle(lam, k)) if with_exact else None,
                     "log_dimension_ratio": larsen_shalev_ratio(lam)})
    return pd.DataFrame(rows, columns=["partition", "frobenius", "regime", "sign", "log_main_term", "log_error_bound",
                                       "exact_log_ratio", "log_dimension_ratio"])
