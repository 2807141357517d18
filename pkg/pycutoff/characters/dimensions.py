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
"""Dimensions f^lambda of the irreducible representations of S_n, computed along independent code paths, and the
dimension proxy D(lambda) of Larsen and Shalev.
"""

# external _imports
from fractions import Fraction
from math import comb, factorial, log
from typing import Union

import numpy as np
from scipy.special import gammaln

# pycutoff internal _imports
from pycutoff.partitions import Partition, conjugate, hook_lengths

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


#########
# types #
#########


class DimensionProxy:
    """Exact value of D(lambda) = (n-1)! / prod_i a_i'! b_i'! together with its logarithm."""

    __slots__ = ["_d", "_log_d"]

    def __init__(self, d_exact: Fraction):
        if d_exact <= 0:
            raise ValueError(f"Dimension proxy must be positive, received {d_exact}.")
        self._d = Fraction(d_exact)
        self._log_d = log(self._d.numerator) - log(self._d.denominator)

    @property
    def D_exact(self) -> Fraction:
        return self._d

    @property
    def log_D(self) -> float:
        return self._log_d

    def __repr__(self):
        return f"<{self.__class__.__name__} D={self._d}>"


##############
# dimensions #
##############


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation indexed by `lam`,

    f = n! / (mu_1! ... mu_l!) prod_{i<j} (mu_i - mu_j),

    with mu_i = lambda_i + l - i over the l nonzero rows (the value does not depend on the number of zero rows the
    partition is padded with).
    """
    ell = len(lam)
    mu = [p + ell - i for i, p in enumerate(lam.parts, start=1)]
    num = factorial(lam.n)
    for i in range(ell):
        for j in range(i + 1, ell):
            num *= mu[i] - mu[j]
    den = 1
    for m in mu:
        den *= factorial(m)
    f, rest = divmod(num, den)
    assert rest == 0
    return f


def dimension_hook_oracle(lam: Partition) -> int:
    """Hook length formula f = n! / prod of hook lengths."""
    den = 1
    for h in hook_lengths(lam):
        den *= h
    return factorial(lam.n) // den


def dimension_first_row(lam: Partition) -> int:
    """Dimension by repeatedly removing the first row:

    f^lambda = C(n, lambda_1) prod_{j>=2} (lambda_1 - lambda_j + j - 1) / (lambda_1 + j - 1) f^{lambda minus row 1}
    """
    value = Fraction(1)
    parts = list(lam.parts)
    while parts:
        n, first, rest = sum(parts), parts[0], parts[1:]
        value *= comb(n, first)
        for j, p in enumerate(rest, start=2):
            value *= Fraction(first - p + j - 1, first + j - 1)
        parts = rest
    assert value.denominator == 1
    return value.numerator


def small_dimension(which: str, n: int) -> int:
    """Closed forms of the dimensions of (n-1,1), (n-2,1,1) and (n-2,2).

    Parameters
    ----------
    which
        One of `n-1_1`, `n-2_1_1` or `n-2_2`.
    n
        Size of the symmetric group.
    """
    if which == "n-1_1":
        return n - 1
    if which == "n-2_1_1":
        return comb(n - 1, 2)
    if which == "n-2_2":
        return comb(n - 1, 2) - 1
    raise ValueError(f"Unknown small representation '{which}'. Allowed values: n-1_1, n-2_1_1, n-2_2.")


def log_dimension(lam: Partition) -> float:
    """log f^lambda in floating point, from the hook lengths."""
    hooks = np.fromiter(hook_lengths(lam), dtype=np.float64)
    return float(gammaln(lam.n + 1) - np.log(hooks).sum())


def larsen_shalev_D(lam: Partition) -> DimensionProxy:
    """D(lambda) = (n-1)! / prod_i a_i'! b_i'! with a_i' = lambda_i - i and b_i' = lambda_i' - i over the diagonal."""
    m = lam.diagonal
    cols = conjugate(lam).parts
    den = 1
    for i in range(1, m + 1):
        den *= factorial(lam.row(i) - i) * factorial(cols[i-1] - i)
    return DimensionProxy(Fraction(factorial(lam.n - 1), den))


def larsen_shalev_ratio(lam: Partition) -> Union[float, None]:
    """Diagnostic log f / log D, None where log D vanishes."""
    proxy = larsen_shalev_D(lam)
    if proxy.log_D == 0.0:
        return None
    return log_dimension(lam) / proxy.log_D


