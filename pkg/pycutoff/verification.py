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
"""Named invariant suites. Each suite sweeps one family of exact identities or bounds and reports how many checks
passed, together with a description of every failure.
"""

# external _imports
import inspect
import time
from fractions import Fraction
from math import comb, exp, factorial, log
from typing import Callable, Dict, List

# pycutoff internal _imports
from pycutoff import config
from pycutoff.asymptotics import main_term_part_a, main_term_part_c, mt_upper_bound, power_sum, power_sum_bound, \
    mixing_criterion_check
from pycutoff.characters import char_general, char_mn_oracle, char_ratio_kcycle, character_table, dimension, \
    dimension_first_row, dimension_hook_oracle, small_char, small_partition, table_dimensions_agree, \
    SMALL_REPRESENTATIONS
from pycutoff.mixing import ExactWalk, moments_fixed_points, tv_lower_bound
from pycutoff.partitions import CycleType, Partition, enumerate_classes, enumerate_partitions

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


class SuiteReport:
    """Outcome of an invariant suite."""

    __slots__ = ["name", "passed", "failed", "failures"]

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.failures: List[str] = []

    def check(self, condition: bool, description: str):
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(description)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failed": self.failed, "failures": list(self.failures)}

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self.name}' passed={self.passed} failed={self.failed}>"


suites: Dict[str, Callable[..., SuiteReport]] = dict()


def register_suite(name: str):
    """Decorator registering an invariant suite under `name`."""
    def _register(func):
        if name in suites:
            raise UserWarning(f"Overwriting existing invariant suite `{name}`.")
        suites[name] = func
        return func
    return _register


def get_suite(name: str) -> Callable[..., SuiteReport]:
    try:
        return suites[name]
    except KeyError:
        raise ValueError(f"Unknown invariant suite '{name}'. Available suites: {', '.join(sorted(suites))}.")


def suite_parameters(name: str) -> List[str]:
    """Named parameters of the suite registered under `name`."""
    params = inspect.signature(get_suite(name)).parameters.values()
    return [p.name for p in params if p.kind is not inspect.Parameter.VAR_KEYWORD]


def run_suite(name: str, verbose: bool = False, **kwargs) -> SuiteReport:
    """Run the invariant suite registered under `name`; keyword arguments are passed to the suite."""
    suite = get_suite(name)

    t0 = time.perf_counter()
    if verbose:
        print("Verification Progress")
        print("---------------------")
        print(f"\t (1) Running suite '{name}'...")
    report = suite(**kwargs)
    if verbose:
        print(f"\t\t...{report.passed} passed, {report.failed} failed after {time.perf_counter() - t0}s.")
    return report


##############
# characters #
##############


@register_suite("oracle-equivalence")
def oracle_equivalence(n_max: int = 10, n_min: int = 2, caps=None, **kwargs) -> SuiteReport:
    """Tuple-sum characters against the Murnaghan-Nakayama oracle on every class, residue ratios times dimensions on
    k-cycle classes, and the duality chi^{lambda'} = sign * chi^lambda."""
    report = SuiteReport("oracle-equivalence")
    for n in range(n_min, n_max + 1):
        for lam in enumerate_partitions(n):
            f = dimension(lam)
            lam_t = lam.conjugate()
            for rho in enumerate_classes(n):
                mn = char_mn_oracle(lam, rho)
                report.check(char_general(lam, rho, caps=caps) == mn, f"tuple sum != MN at {lam}, {rho}")
                report.check(char_mn_oracle(lam_t, rho) == rho.sign * mn, f"duality fails at {lam}, {rho}")
                nontrivial = rho.nontrivial_cycles
                if len(nontrivial) == 1:
                    ratio = char_ratio_kcycle(lam, nontrivial[0])
                    report.check(ratio * f == mn, f"residue ratio != MN at {lam}, {rho}")
    return report


@register_suite("dimensions")
def dimensions(n_max: int = 14, table_n_max: int = 10, caps=None, **kwargs) -> SuiteReport:
    """Three dimension formulas agree, the squares of the dimensions sum to n!, f^lambda <= C(n, lambda_1)
    sqrt((n - lambda_1)!) and the first columns of the character tables up to `table_n_max` are the dimensions."""
    report = SuiteReport("dimensions")
    caps = config.caps(caps)
    for n in range(1, n_max + 1):
        total = 0
        for lam in enumerate_partitions(n):
            f = dimension(lam)
            report.check(f == dimension_hook_oracle(lam) == dimension_first_row(lam), f"dimension formulas at {lam}")
            first = lam.parts[0]
            report.check(f * f <= comb(n, first) ** 2 * factorial(n - first), f"dimension bound at {lam}")
            total += f * f
        report.check(total == factorial(n), f"sum of squared dimensions at n = {n}")
        if 2 <= n <= table_n_max and caps.allows("table_n_max", n):
            report.check(table_dimensions_agree(character_table(n, caps=caps)), f"character table dimensions at n = {n}")
    return report


@register_suite("small-characters")
def small_characters(n_min: int = 5, n_max: int = 10, **kwargs) -> SuiteReport:
    """Closed-form small characters against the oracle, and the decomposition of the square of chi^{n-1,1}."""
    report = SuiteReport("small-characters")
    for n in range(n_min, n_max + 1):
        trivial = Partition([n])
        for rho in enumerate_classes(n):
            values = {}
            for which in SMALL_REPRESENTATIONS:
                values[which] = small_char(which, rho)
                report.check(values[which] == char_mn_oracle(small_partition(which, n), rho),
                             f"closed form {which} at {rho}")
            square = values["n-1_1"] ** 2
            decomposition = char_mn_oracle(trivial, rho) + sum(values.values())
            report.check(square == decomposition, f"tensor identity at {rho}")
    return report


###############
# asymptotics #
###############


@register_suite("part-a-exactness")
def part_a_exactness(n_max: int = 12, cfg=None, **kwargs) -> SuiteReport:
    """The long first row main term is the exact ratio whenever r < k and r + k + 1 < n/2."""
    report = SuiteReport("part-a-exactness")
    for n in range(4, n_max + 1):
        for lam in enumerate_partitions(n):
            r = n - lam.parts[0]
            for k in range(max(2, r + 1), n + 1):
                if r + k + 1 >= n / 2:
                    break
                report.check(main_term_part_a(lam, k, cfg) == char_ratio_kcycle(lam, k),
                             f"main term != exact ratio at {lam}, k = {k}")
    return report


@register_suite("mt-bound")
def mt_bound(n_max: int = 14, cfg=None, **kwargs) -> SuiteReport:
    """MT <= exp(-kr/n) whenever k + r + 1 < n/2."""
    report = SuiteReport("mt-bound")
    for n in range(4, n_max + 1):
        for lam in enumerate_partitions(n):
            r = n - lam.parts[0]
            for k in range(2, n + 1):
                if k + r + 1 >= n / 2:
                    break
                mt = main_term_part_a(lam, k, cfg)
                report.check(float(mt) <= exp(mt_upper_bound(n, k, r)) * (1 + 1e-12), f"MT bound at {lam}, k = {k}")
    return report


@register_suite("power-sum")
def power_sum_dominance(n_max: int = 14, cfg=None, **kwargs) -> SuiteReport:
    """Power sums of the Frobenius coordinates are dominated by the sharp envelope with delta = r/n, for a_1 >= b_1,
    and by the small r envelope whenever r <= c0 n."""
    report = SuiteReport("power-sum")
    c0 = config.asymptotics(cfg).c0
    for n in range(2, n_max + 1):
        for lam in enumerate_partitions(n):
            fc = lam.to_frobenius()
            if fc.a2[0] < fc.b2[0]:
                continue
            r = n - lam.parts[0]
            for k in range(2, n + 1):
                value = log(power_sum(lam, k))
                report.check(value <= power_sum_bound(n, k, r, "sharp") + 1e-12,
                             f"power sum dominance at {lam}, k = {k}")
                if r <= c0 * n:
                    report.check(value <= power_sum_bound(n, k, r, "small_r", cfg=cfg) + 1e-12,
                                 f"small r envelope at {lam}, k = {k}")
    return report


@register_suite("mixing-criterion")
def mixing_criterion(ns=(8, 10, 12), c: float = None, cfg=None, **kwargs) -> SuiteReport:
    """|ratio|^{(n/k)(log n + c)} <= 1/f for every partition other than (n) and every 2 <= k <= n - 1."""
    report = SuiteReport("mixing-criterion")
    c = config.asymptotics(cfg).c1 if c is None else c
    for n in ns:
        for lam in enumerate_partitions(n):
            if len(lam) == 1:
                continue
            for k in range(2, n):
                report.check(mixing_criterion_check(lam, k, c), f"inequality fails at {lam}, k = {k}, c = {c}")
    return report


@register_suite("part-c-convergence")
def part_c_convergence(ns=(100, 200, 400), r: int = 10, k: int = 2, cfg=None, **kwargs) -> SuiteReport:
    """Relative gap between the power sum main term and the exact ratio along (n - r, r) strictly decreases."""
    report = SuiteReport("part-c-convergence")
    gaps = []
    for n in ns:
        lam = Partition([n - r, r])
        exact = char_ratio_kcycle(lam, k)
        est = main_term_part_c(lam, k, cfg)
        gap = abs(est.main_term - float(exact)) / abs(float(exact))
        report.check(gap < float("inf"), f"relative gap is not finite at n = {n}")
        gaps.append(gap)
    for n, g0, g1 in zip(ns[1:], gaps[:-1], gaps[1:]):
        report.check(g1 < g0, f"relative gap does not decrease at n = {n}")
    return report


##########
# mixing #
##########


def _fixed_point_moments(dist) -> tuple:
    mean = sum(p * (rho.fixed_points - 1) for rho, p in dist.probs.items())
    second = sum(p * (rho.fixed_points - 1) ** 2 for rho, p in dist.probs.items())
    return Fraction(mean), Fraction(second)


@register_suite("moments")
def moments(ns=(6, 8), ks=(2, 3, 4), t_max: int = 6, caps=None, **kwargs) -> SuiteReport:
    """Closed-form fixed point moments against moments of the exact law, for every class with k moved points."""
    report = SuiteReport("moments")
    for n in ns:
        for C in enumerate_classes(n):
            if C.nontrivial_total not in ks:
                continue
            walk = ExactWalk(n, C, caps=caps)
            for t in range(t_max + 1):
                expected = moments_fixed_points(n, C.nontrivial_total, C.two_cycles, t)
                mean, second = _fixed_point_moments(walk.distribution(t))
                report.check(expected.mean == mean and expected.second_moment == second,
                             f"moments at n = {n}, C = {C}, t = {t}")
    return report


@register_suite("tv-sandwich")
def tv_sandwich(n_max: int = 10, n_min: int = 3, t_max: int = 20, caps=None, **kwargs) -> SuiteReport:
    """lower bound <= exact distance <= L2 upper bound and the exact distance never increases, for k-cycle walks."""
    report = SuiteReport("tv-sandwich")
    for n in range(n_min, n_max + 1):
        for k in range(2, n + 1):
            C = CycleType.k_cycle(n, k)
            walk = ExactWalk(n, C, caps=caps)
            previous = None
            for t in range(t_max + 1):
                tv = walk.tv(t)
                report.check(float(tv) <= walk.upper_bound(t) + 1e-12, f"upper bound at n = {n}, k = {k}, t = {t}")
                if n >= 5:
                    lower = tv_lower_bound(n, k, C.two_cycles, t)
                    report.check(lower <= float(tv) + 1e-12, f"lower bound at n = {n}, k = {k}, t = {t}")
                if previous is not None:
                    report.check(tv <= previous, f"distance increases at n = {n}, k = {k}, t = {t}")
                previous = tv
    return report


@register_suite("cutoff")
def cutoff(n: int = 10, caps=None, **kwargs) -> SuiteReport:
    """The exact distance is above 1/2 well before (n/k) log n and below 1/2 well after it, for k = 2 and k = 3."""
    report = SuiteReport("cutoff")
    for k, t_before, t_after in ((2, 5, 20), (3, 2, 16)):
        walk = ExactWalk(n, CycleType.k_cycle(n, k), caps=caps)
        report.check(walk.tv(t_before) > Fraction(1, 2), f"not yet mixed at t = {t_before} for k = {k}")
        report.check(walk.tv(t_after) < Fraction(1, 2), f"mixed at t = {t_after} for k = {k}")
    return report


@register_suite("monte-carlo")
def monte_carlo(walk=config.ACCEPTANCE_WALK, samples: int = None, seed: int = None, workers: int = 1,
                tolerance: float = 0.01, caps=None, **kwargs) -> SuiteReport:
    """The empirical class distribution of the simulated walk is within `tolerance` of the exact law; the parity of
    every sample is checked while sampling. By default a million samples of the 3-cycle walk on S_8 after 8 steps."""
    from pycutoff.walk import empirical_tv, run_walk
    report = SuiteReport("monte-carlo")
    updates = {key: val for key, val in (("samples", samples), ("seed", seed)) if val is not None}
    cfg = config.walk(walk).update_template(workers=workers, check_parity=True, **updates)
    hist = run_walk(cfg)
    exact = ExactWalk(cfg.n, CycleType.k_cycle(cfg.n, cfg.k), caps=caps).distribution(cfg.t)
    report.check(hist.total == cfg.samples, "sample count")
    report.check(empirical_tv(hist, exact) <= tolerance, f"empirical distance exceeds {tolerance}")
    return report
