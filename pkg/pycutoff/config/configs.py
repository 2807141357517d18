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
"""Configuration classes for size caps, asymptotic constants and Monte Carlo walks.
"""
import os

from pycutoff.config.abc import AbstractConfig

__author__ = "pycutoff contributors"
__status__ = "Development"


class CapsConfig(AbstractConfig):
    """Size caps and budgets of the exact engines. `unsafe` lifts all caps."""

    _defaults = {"table_n_max": 14,
                 "exact_n_max": 14,
                 "hook_n_max": 40,
                 "general_budget": 10**8,
                 "unsafe": False}

    def _validate(self):
        for key in ("table_n_max", "exact_n_max", "hook_n_max", "general_budget"):
            if int(self._values[key]) < 1:
                raise ValueError(f"Cap `{key}` must be a positive integer, received {self._values[key]}.")
            self._values[key] = int(self._values[key])
        self._values["unsafe"] = bool(self._values["unsafe"])

    def allows(self, key: str, value) -> bool:
        return self.unsafe or value <= self._values[key]


class AsymptoticConfig(AbstractConfig):
    """Constants of the asymptotic character ratio estimates. The `o_*` fields are the otherwise implicit constants of
    the big-O error envelopes."""

    _defaults = {"epsilon": 0.01,
                 "theta": 0.67,
                 "delta": 0.1,
                 "c0": 0.25,
                 "c1": 2.0,
                 "c2": 8.0,
                 "o_part_a": 1.0,
                 "o_part_c_relative": 1.0,
                 "o_part_c_additive": 1.0,
                 "o_small_k_relative": 1.0,
                 "o_small_k_additive": 1.0,
                 "part_c_log_power": 2,
                 "r_switch_exponent": 5 / 6,
                 "k_switch_factor": 6.0,
                 "large_r_fraction": 0.49}

    def _validate(self):
        for key, val in self._values.items():
            self._values[key] = float(val) if key != "part_c_log_power" else int(val)
            if self._values[key] <= 0 and key not in ("c1",):
                raise ValueError(f"Asymptotic constant `{key}` must be positive, received {val}.")
        if self.epsilon >= 0.5:
            raise ValueError(f"epsilon must lie in (0, 1/2), received {self.epsilon}.")
        if self.theta <= 2 / 3:
            raise ValueError(f"theta must exceed 2/3, received {self.theta}.")


class WalkConfig(AbstractConfig):
    """Parameters of a Monte Carlo run of the random k-cycle walk."""

    _defaults = {"n": 8,
                 "k": 3,
                 "t": 8,
                 "samples": 100000,
                 "seed": 0,
                 "workers": 1,
                 "batch_size": 20000,
                 "check_parity": True}

    def _validate(self):
        for key in ("n", "k", "t", "samples", "seed", "workers", "batch_size"):
            self._values[key] = int(self._values[key])
        self._values["check_parity"] = bool(self._values["check_parity"])
        if not 2 <= self.k <= self.n:
            raise ValueError(f"Cycle length k = {self.k} must lie in [2, n] for n = {self.n}.")
        if self.t < 0:
            raise ValueError(f"Number of steps t must be nonnegative, received {self.t}.")
        if self.samples < 1 or self.workers < 1 or self.batch_size < 1:
            raise ValueError("samples, workers and batch_size must all be positive.")


def default_workers() -> int:
    """Worker count from the environment variable PYCUTOFF_WORKERS, 1 if unset."""
    value = os.environ.get("PYCUTOFF_WORKERS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        raise ValueError(f"PYCUTOFF_WORKERS must be an integer, received '{value}'.")
