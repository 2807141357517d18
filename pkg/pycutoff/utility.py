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
"""Output helpers shared by the command line interface and the YAML writer.
"""

# external _imports
import errno
import os
from fractions import Fraction
from typing import Union

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


def create_directory(path):
    """check if the directory of `path` exists and create it otherwise"""

    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        try:
            os.makedirs(directory)
        except OSError as exc:  # race with another process creating it
            if exc.errno != errno.EEXIST:
                raise


def format_float(x: float) -> str:
    """Float with 6 significant digits."""
    return f"{x:.6g}"


def format_rational(x: Union[Fraction, int]) -> str:
    """Exact rational as `p/q`, integers without denominator."""
    return str(Fraction(x))


def write_output(text: str, path: str = None) -> None:
    """Print `text` to stdout or write it to `path`."""
    if path is None:
        print(text)
        return
    create_directory(path)
    with open(path, "w") as f:
        f.write(text if text.endswith("\n") else text + "\n")
