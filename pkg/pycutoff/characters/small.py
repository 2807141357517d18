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
"""Closed forms of the characters of the three smallest nontrivial representations, which only depend on the number
of fixed points i_1 and 2-cycles i_2 of a permutation.
"""

from pycutoff.partitions import CycleType, Partition

__author__ = "pycutoff contributors"
__status__ = "Development"

SMALL_REPRESENTATIONS = ("n-1_1", "n-2_1_1", "n-2_2")


def small_partition(which: str, n: int) -> Partition:
    """Partition (n-1,1), (n-2,1,1) or (n-2,2) of n."""
    if which == "n-1_1":
        return Partition([n - 1, 1])
    if which == "n-2_1_1":
        return Partition([n - 2, 1, 1])
    if which == "n-2_2":
        return Partition([n - 2, 2])
    raise ValueError(f"Unknown small representation '{which}'. Allowed values: {', '.join(SMALL_REPRESENTATIONS)}.")


def small_char(which: str, rho: CycleType) -> int:
    """Character value of (n-1,1), (n-2,1,1) or (n-2,2) at the class `rho`:

    chi^{n-1,1}   = i_1 - 1
    chi^{n-2,2}   = (i_1 - 1)(i_1 - 2)/2 + i_2 - 1
    chi^{n-2,1,1} = (i_1 - 1)(i_1 - 2)/2 - i_2
    """
    if rho.n < 4:
        raise ValueError(f"Closed-form small characters need n >= 4, received n = {rho.n}.")
    i1, i2 = rho.fixed_points, rho.two_cycles
    if which == "n-1_1":
        return i1 - 1
    quad = (i1 - 1) * (i1 - 2) // 2
    if which == "n-2_2":
        return quad + i2 - 1
    if which == "n-2_1_1":
        return quad - i2
    raise ValueError(f"Unknown small representation '{which}'. Allowed values: {', '.join(SMALL_REPRESENTATIONS)}.")
