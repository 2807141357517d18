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
"""Exact law of the random walk on S_n generated by a conjugacy class, its total variation distance to the uniform
measure on the coset it lives on, and the upper and lower bounds on that distance.

The walk after t steps is a class function, so every distribution is stored as the probability mass of each
conjugacy class.
"""

# external _imports
import time
from fractions import Fraction
from math import exp, factorial, inf, log, nan, sqrt
from multiprocessing import Pool
from typing import Dict, Iterable, List, Union

import numpy as np
import pandas as pd
from scipy.special import logsumexp

# pycutoff internal _imports
from pycutoff import config
from pycutoff.asymptotics import estimate_ratio, log_abs
from pycutoff.characters import character_table, char_ratio_kcycle, dimension, log_dimension, small_char, \
    small_dimension
from pycutoff.exceptions import CapExceeded
from pycutoff.partitions import CycleType, Partition, class_size, enumerate_partitions

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


#########
# types #
#########


class ClassDistribution:
    """Probability mass of each conjugacy class of S_n. Exact distributions hold fractions that sum to one exactly;
    empirical distributions hold floats."""

    __slots__ = ["n", "probs", "kind"]

    def __init__(self, n: int, probs: Dict[CycleType, Union[Fraction, float]], kind: str = "exact"):

        if kind not in ("exact", "empirical"):
            raise ValueError(f"Unknown distribution kind '{kind}'. Allowed values: exact, empirical.")
        for rho, p in probs.items():
            if rho.n != n:
                raise ValueError(f"Class {rho} does not belong to S_{n}.")
            if p < 0:
                raise ValueError(f"Negative probability {p} for class {rho}.")
        if kind == "exact" and sum(probs.values()) != 1:
            raise ValueError(f"Exact class distribution sums to {sum(probs.values())} instead of 1.")

        self.n = n
        self.probs = {rho: p for rho, p in probs.items() if p != 0}
        self.kind = kind

    def __getitem__(self, rho: CycleType):
        return self.probs.get(rho, 0)

    @property
    def support(self):
        return list(self.probs)

    def density(self, rho: CycleType):
        """Probability of a single permutation of class `rho`."""
        p = self[rho]
        return p / class_size(rho) if self.kind == "exact" else float(p) / class_size(rho)

    def to_frame(self) -> pd.DataFrame:
        rows = [{"cycle_type": str(rho), "class_size": class_size(rho), "probability": float(p),
                 "probability_exact": str(p) if self.kind == "exact" else None}
                for rho, p in self.probs.items()]
        return pd.DataFrame(rows, columns=["cycle_type", "class_size", "probability", "probability_exact"])

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} ({self.kind})>"


class CosetUniform:
    """Uniform measure on the coset of the alternating group with sign `coset_sign`."""

    __slots__ = ["n", "coset_sign"]

    def __init__(self, n: int, coset_sign: int):
        if coset_sign not in (1, -1):
            raise ValueError(f"Coset sign must be +1 or -1, received {coset_sign}.")
        if n < 2:
            raise ValueError(f"Coset-uniform measures need n >= 2, received n = {n}.")
        self.n = n
        self.coset_sign = coset_sign

    @classmethod
    def after(cls, C: CycleType, t: int):
        """Coset carrying the walk generated by `C` after `t` steps."""
        return cls(C.n, C.sign ** t)

    def density(self, rho: CycleType) -> Fraction:
        return Fraction(1 + rho.sign * self.coset_sign, factorial(self.n))

    def to_distribution(self) -> ClassDistribution:
        probs = {rho: class_size(rho) * self.density(rho) for rho in map(CycleType, enumerate_partitions(self.n))}
        return ClassDistribution(self.n, probs)

    def fourier_coefficient(self, lam: Partition) -> int:
        """1 at the trivial representation, the coset sign at the sign representation and 0 elsewhere."""
        if len(lam) == 1:
            return 1
        if lam.parts[0] == 1:
            return self.coset_sign
        return 0

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} sign={self.coset_sign:+d}>"


class MomentReport:
    """First and second moment of chi^{n-1,1}, the number of fixed points minus one, under the walk."""

    __slots__ = ["mean", "second_moment"]

    def __init__(self, mean: Fraction, second_moment: Fraction):
        self.mean = mean
        self.second_moment = second_moment

    @property
    def variance(self) -> Fraction:
        return self.second_moment - self.mean ** 2

    def __eq__(self, other):
        return isinstance(other, MomentReport) and (self.mean, self.second_moment) == \
            (other.mean, other.second_moment)

    def __repr__(self):
        return f"<{self.__class__.__name__} mean={self.mean} second_moment={self.second_moment}>"


##############
# exact walk #
##############


def _check_steps(t: int):
    if t < 0:
        raise ValueError(f"Number of steps t must be nonnegative, received {t}.")


class ExactWalk:
    """Exact engine for the walk generated by the class `C`. Holds the character table and the ratios
    chi^lambda(C)/f^lambda so that the law at many t can be evaluated without recomputing them.

    Parameters
    ----------
    n
        Size of the symmetric group.
    C
        Generating conjugacy class (not the identity).
    caps
        `CapsConfig` or path to one; n may not exceed `caps.table_n_max`.
    """

    def __init__(self, n: int, C: CycleType, caps=None):

        if C.n != n:
            raise ValueError(f"Generating class {C} does not belong to S_{n}.")
        if C.is_identity():
            raise ValueError("The identity class does not generate a random walk.")

        self.n = n
        self.C = C
        self.table = character_table(n, caps=caps)
        self.sizes = self.table.class_sizes()
        self.ratios = [Fraction(self.table.value(lam, C), f) for lam, f in zip(self.table.partitions, self.table.dims)]
        self._n_fac = factorial(n)

    def coset(self, t: int) -> CosetUniform:
        return CosetUniform.after(self.C, t)

    def distribution(self, t: int) -> ClassDistribution:
        """mu^{*t}(class rho) = |rho| / n! sum_lambda f^lambda ratio_lambda^t chi^lambda(rho)"""
        _check_steps(t)
        weights = [f * r ** t for f, r in zip(self.table.dims, self.ratios)]
        probs = {}
        for j, rho in enumerate(self.table.classes):
            s = sum(w * row[j] for w, row in zip(weights, self.table.values))
            probs[rho] = Fraction(self.sizes[j]) * s / self._n_fac
        return ClassDistribution(self.n, probs)

    def tv(self, t: int) -> Fraction:
        return tv_distance(self.distribution(t), self.coset(t).to_distribution())

    def plancherel_mass(self, t: int) -> Fraction:
        _check_steps(t)
        return sum(f * f * r ** (2 * t) for f, r in zip(self.table.dims, self.ratios))

    def upper_bound(self, t: int) -> float:
        """1/2 (sum over lambda other than (n), (1^n) of f^2 ratio^{2t})^{1/2}"""
        _check_steps(t)
        s = sum(f * f * r ** (2 * t) for lam, f, r in zip(self.table.partitions, self.table.dims, self.ratios)
                if not lam.is_one_dimensional())
        return 0.5 * exp(0.5 * log_abs(s)) if s else 0.0

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n} C={self.C}>"


def exact_distribution(n: int, C: CycleType, t: int, caps=None) -> ClassDistribution:
    """Exact law of the walk generated by `C` after `t` steps, by Fourier inversion."""
    return ExactWalk(n, C, caps=caps).distribution(t)


def tv_distance(p: ClassDistribution, q: ClassDistribution) -> Union[Fraction, float]:
    """Total variation distance 1/2 sum_rho |p(rho) - q(rho)| between two class distributions. Both measures are
    class functions, so this equals the distance between the induced measures on S_n."""
    if p.n != q.n:
        raise ValueError(f"Distributions on S_{p.n} and S_{q.n} cannot be compared.")
    classes = set(p.probs) | set(q.probs)
    total = sum(abs(p[rho] - q[rho]) for rho in classes)
    if p.kind == "exact" and q.kind == "exact":
        return Fraction(total) / 2
    return float(total) / 2


def exact_tv(n: int, C: CycleType, t: int, caps=None) -> Fraction:
    """Exact total variation distance between the walk after t steps and the uniform measure on its coset."""
    return ExactWalk(n, C, caps=caps).tv(t)


def fourier_coefficient(dist: ClassDistribution, lam: Partition, caps=None) -> Fraction:
    """mu_hat(chi^lambda) = 1/f^lambda sum_sigma mu(sigma) chi^lambda(sigma), for exact distributions."""
    if dist.kind != "exact":
        raise ValueError("Fourier coefficients are only evaluated for exact distributions.")
    table = character_table(dist.n, caps=caps)
    row = table.row(lam)
    return sum(p * row[rho] for rho, p in dist.probs.items()) / table.dimension(lam)


def l2_mass(dist: ClassDistribution) -> Fraction:
    """n! sum_sigma mu(sigma)^2"""
    return factorial(dist.n) * sum(Fraction(p) ** 2 / class_size(rho) for rho, p in dist.probs.items())


def plancherel_mass(n: int, C: CycleType, t: int, caps=None) -> Fraction:
    """sum_lambda f^2 ratio^{2t}, which equals `l2_mass` of the walk after t steps."""
    return ExactWalk(n, C, caps=caps).plancherel_mass(t)


################
# upper bounds #
################


def tv_upper_bound(n: int, k: int, t: int, mode: str = "exact_ratios", cfg=None, caps=None) -> float:
    """L2 upper bound 1/2 (sum_{lambda != (n), (1^n)} f^2 ratio^{2t})^{1/2} on the distance of the k-cycle walk.

    Parameters
    ----------
    n
        Size of the symmetric group.
    k
        Cycle length.
    t
        Number of steps.
    mode
        `exact_ratios` evaluates exact character ratios (n within `caps.exact_n_max`). `bound_regimes` replaces each
        ratio by the bound |main term| + error of its asymptotic estimate (or 1 where no estimate applies) and
        accumulates in log space; n is capped by `caps.hook_n_max`.
    cfg
        `AsymptoticConfig` or path to one.
    caps
        `CapsConfig` or path to one.

    Returns
    -------
    float
    """
    caps = config.caps(caps)
    if not 2 <= k <= n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n] for n = {n}.")
    _check_steps(t)

    if mode == "exact_ratios":
        if not caps.allows("exact_n_max", n):
            raise CapExceeded(f"Exact ratios for n = {n} requested, but the configured cap is n <= "
                              f"{caps.exact_n_max}.")
        s = Fraction(0)
        for lam in enumerate_partitions(n):
            if lam.is_one_dimensional():
                continue
            r = char_ratio_kcycle(lam, k)
            s += dimension(lam) ** 2 * r ** (2 * t)
        return 0.5 * exp(0.5 * log_abs(s)) if s else 0.0

    if mode == "bound_regimes":
        if not caps.allows("hook_n_max", n):
            raise CapExceeded(f"Bound regime sum over partitions of n = {n} requested, but the configured cap is "
                              f"n <= {caps.hook_n_max}.")
        cfg = config.asymptotics(cfg)
        log_terms = []
        for lam in enumerate_partitions(n):
            if lam.is_one_dimensional():
                continue
            est = estimate_ratio(lam, k, cfg, use_exact=False)
            log_ratio = float(np.logaddexp(est.log_main_term, est.log_error_bound)) if est.valid else 0.0
            log_terms.append(2 * log_dimension(lam) + (2 * t * min(log_ratio, 0.0) if t else 0.0))
        if not log_terms:
            return 0.0
        return 0.5 * exp(0.5 * float(logsumexp(log_terms)))

    raise ValueError(f"Unknown mode '{mode}'. Allowed values: exact_ratios, bound_regimes.")


################
# lower bounds #
################


def _moment_class(n: int, k: int, j: int) -> CycleType:
    """j 2-cycles and one (k - 2j)-cycle."""
    return CycleType([2] * j + [1] * (n - k) + ([k - 2 * j] if k > 2 * j else []))


def moments_fixed_points(n: int, k: int, j: int, t: int) -> MomentReport:
    """Mean and second moment of chi^{n-1,1} under the walk generated by a class with k non-fixed points and j
    2-cycles. With (chi^{n-1,1})^2 = chi^n + chi^{n-1,1} + chi^{n-2,2} + chi^{n-2,1,1} and E[chi^lambda] =
    f^lambda ratio_lambda^t,

    E  = (n-1) (1 - k/(n-1))^t,
    E2 = 1 + E + f^{n-2,2} ratio_{n-2,2}^t + f^{n-2,1,1} ratio_{n-2,1,1}^t.
    """
    if n < 5:
        raise ValueError(f"Fixed point moments need n >= 5, received n = {n}.")
    if not 2 <= k <= n or not 0 <= 2 * j <= k or k - 2 * j in (1, 2):
        raise ValueError(f"No class of S_{n} has k = {k} non-fixed points and j = {j} 2-cycles.")
    _check_steps(t)

    C = _moment_class(n, k, j)
    mean = (n - 1) * Fraction(n - 1 - k, n - 1) ** t
    second = 1 + mean
    for which in ("n-2_2", "n-2_1_1"):
        f = small_dimension(which, n)
        second += f * Fraction(small_char(which, C), f) ** t
    return MomentReport(mean, second)


def tv_lower_bound(n: int, k: int, j: int, t: int) -> float:
    """Chebyshev lower bound on the distance of the walk to its coset-uniform measure. With E and Var the mean and
    variance of chi^{n-1,1} under the walk, and A the event chi^{n-1,1} > sqrt(E),

    mu(A) >= 1 - Var / (E - sqrt(E))^2   and   U(A) <= 1/E,

    since chi^{n-1,1} has mean 0 and variance 1 under the coset-uniform measure. Returns 0 if E <= 1.
    """
    report = moments_fixed_points(n, k, j, t)
    mean = float(report.mean)
    if mean <= 1:
        return 0.0
    var = float(report.variance)
    return max(0.0, 1 - var / (mean - sqrt(mean)) ** 2 - 1 / mean)


###############
# cutoff scan #
###############


def _scan_rows(args) -> List[dict]:
    n, cycles, steps, caps = args
    C = CycleType(cycles)
    walk = ExactWalk(n, C, caps=caps)
    k, j = C.nontrivial_total, C.two_cycles
    with_lower = n >= 5 and C == _moment_class(n, k, j)
    rows = []
    for t in steps:
        tv = walk.tv(t)
        rows.append({"t": t, "coset_sign": C.sign ** t, "tv_exact": str(tv), "tv_exact_float": float(tv),
                     "tv_upper": walk.upper_bound(t), "tv_lower": tv_lower_bound(n, k, j, t) if with_lower else nan})
    return rows


def cutoff_scan(n: int, C: CycleType, t_range: Iterable[int], caps=None, workers: int = 1,
                verbose: bool = False) -> pd.DataFrame:
    """Exact distance, L2 upper bound and Chebyshev lower bound of the walk generated by `C` for every t in
    `t_range`. The lower bound is only available for classes made of 2-cycles and at most one longer cycle, and is
    NaN otherwise.

    Parameters
    ----------
    n
        Size of the symmetric group.
    C
        Generating conjugacy class.
    t_range
        Numbers of steps to evaluate.
    caps
        `CapsConfig` or path to one.
    workers
        Number of worker processes the steps are distributed over, in contiguous chunks.
    verbose
        If true, progress is printed.

    Returns
    -------
    pd.DataFrame
        One row per t with columns t, coset_sign, tv_exact, tv_exact_float, tv_upper and tv_lower.
    """
    columns = ["t", "coset_sign", "tv_exact", "tv_exact_float", "tv_upper", "tv_lower"]
    caps = config.caps(caps)
    steps = [int(t) for t in t_range]
    if not steps:
        return pd.DataFrame(columns=columns)

    t0 = time.perf_counter()
    if verbose:
        print("Cutoff Scan Progress")
        print("--------------------")
        print(f"\t (1) Evaluating {len(steps)} steps of the walk on S_{n} generated by {C}...")

    chunks = [chunk.tolist() for chunk in np.array_split(steps, max(1, min(workers, len(steps))))]
    tasks = [(n, C.cycles.parts, chunk, caps) for chunk in chunks]
    if len(tasks) > 1:
        with Pool(len(tasks)) as pool:
            results = pool.map(_scan_rows, tasks)
    else:
        results = [_scan_rows(task) for task in tasks]
    rows = [row for chunk in results for row in chunk]

    if verbose:
        print(f"\t\t...finished after {time.perf_counter() - t0}s.")

    return pd.DataFrame(rows, columns=columns)


def cutoff_window(scan: pd.DataFrame, level: float = 0.5) -> Union[int, float]:
    """First t at which the exact distance drops below `level`, inf if it never does."""
    below = scan.loc[scan["tv_exact_float"] < level, "t"]
    return int(below.iloc[0]) if len(below) else inf
