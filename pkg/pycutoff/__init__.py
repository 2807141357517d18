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
"""Python package for exact and asymptotic character ratios of the symmetric group and the total variation mixing of
the random walk on S_n generated by a conjugacy class, in particular the random k-cycle walk.
"""

__author__ = "pycutoff contributors"
__status__ = "Development"
__version__ = "0.1.0"


from pycutoff.exceptions import PyCutoffException, PyCutoffWarning, RegimeViolation, CapExceeded
from pycutoff.partitions import Partition, FrobeniusCoords, CycleType, enumerate_partitions, enumerate_classes
from pycutoff.characters import character_table, char_ratio_kcycle, char_general, char_mn_oracle, dimension, \
    clear_character_caches
from pycutoff.asymptotics import estimate_ratio, regime_table
from pycutoff.mixing import ExactWalk, exact_distribution, exact_tv, tv_upper_bound, tv_lower_bound, cutoff_scan
from pycutoff.walk import run_walk


def clear_caches():
    """Clears the loaded configurations and the memo tables of the character engines."""
    from pycutoff import config
    config.clear_cache()
    clear_character_caches()
