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
"""Exact characters and dimensions of the symmetric group.

- dimensions
    dimension formulas and the Larsen-Shalev dimension proxy
- frobenius
    Frobenius residue and tuple-sum formulas for character ratios, and their contour form
- murnaghan_nakayama
    border-strip recursion and full character tables
- small
    closed-form characters of (n-1,1), (n-2,1,1) and (n-2,2)
"""

from .dimensions import dimension, dimension_hook_oracle, dimension_first_row, small_dimension, log_dimension, \
    larsen_shalev_D, larsen_shalev_ratio, DimensionProxy
from .frobenius import ExactRatio, char_ratio_kcycle, char_general, char_ratio_general, char_ratio_contour, \
    frobenius_poles, falling_factorial
from .murnaghan_nakayama import char_mn_oracle, character_table, CharacterTable, clear_character_caches, \
    table_dimensions_agree
from .small import small_char, small_partition, SMALL_REPRESENTATIONS

__author__ = "pycutoff contributors"
__status__ = "Development"
