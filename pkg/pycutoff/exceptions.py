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
"""Exception and warning classes used throughout pycutoff.
"""

__author__ = "pycutoff contributors"
__status__ = "Development"


class PyCutoffException(Exception):
    pass


class RegimeViolation(PyCutoffException):
    """Raised if an asymptotic formula is requested outside of the parameter regime it was stated for."""
    pass


class CapExceeded(PyCutoffException):
    """Raised if an exact computation would exceed a configured size cap or computational budget."""
    pass


class PyCutoffWarning(Warning):
    pass
