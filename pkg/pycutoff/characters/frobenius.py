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
"""Exact character ratios from the Frobenius formula.

Three evaluations are provided:

- `char_ratio_kcycle`: the residue sum over the shifted parts mu_i for the class of k-cycles,
- `char_general` / `char_ratio_general`: the tuple sum for an arbitrary class with r nontrivial cycles,
- `char_ratio_contour`: the contour integral in Frobenius coordinates, evaluated as minus the residue at infinity by
  exact polynomial division.

All arithmetic is exact (python integers and fractions, sympy rationals for the polynomial path).
"""

# external _imports
from collections import Counter
from fractions import Fraction
from itertools import groupby
from math import factorial, prod
from typing import List, Tuple

import sympy as sp

# pycutoff internal _imports
from pycutoff.exceptions import CapExceeded
from pycutoff.partitions import CycleType, Partition, mu_vector
from pycutoff.characters.dimensions import dimension
from pycutoff import config

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


#########
# types #
#########


class ExactRatio(Fraction):
    """Exact character ratio chi^lambda(C) / f^lambda. Character ratios never exceed 1 in absolute value."""

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if abs(self) > 1:
            raise ValueError(f"Character ratio {Fraction(self)} exceeds 1 in absolute value.")
        return self

    def __repr__(self):
        return f"{self.__class__.__name__}({self.numerator}, {self.denominator})"


####################
# helper functions #
####################


def falling_factorial(x: int, k: int) -> int:
    """x (x-1) ... (x-k+1)"""
    return prod(range(x - k + 1, x + 1)) if k > 0 else 1


def _check_k(k: int, n: int):
    if not 2 <= k <= n:
        raise ValueError(f"Cycle length k = {k} must lie in [2, n] for n = {n}.")


##########################
# k-cycle residue formula #
##########################


def char_ratio_kcycle(lam: Partition, k: int) -> ExactRatio:
    """Character ratio of `lam` at the class of k-cycles,

    chi / f = 1 / n^(k) sum_i mu_i^(k) prod_{j != i} (mu_i - mu_j - k) / (mu_i - mu_j),

    where x^(k) is the falling factorial and mu = lambda + (n-1, ..., 0). Each term is accumulated as one integer
    numerator and denominator; terms with mu_i < k or with mu_i - k equal to another mu_j vanish and are skipped.

    Parameters
    ----------
    lam
        Partition of n.
    k
        Cycle length, 2 <= k <= n.

    Returns
    -------
    ExactRatio
    """
    n = lam.n
    _check_k(k, n)
    mu = mu_vector(lam, n)
    mu_set = set(mu)

    total = Fraction(0)
    for mu_i in mu:
        if mu_i < k or (mu_i - k) in mu_set:
            continue
        num, den = falling_factorial(mu_i, k), 1
        for mu_j in mu:
            if mu_j != mu_i:
                num *= mu_i - mu_j - k
                den *= mu_i - mu_j
        total += Fraction(num, den)

    return ExactRatio(total / falling_factorial(n, k))


#########################
# general class formula #
#########################


def char_ratio_general(lam: Partition, rho: CycleType, caps=None) -> ExactRatio:
    """Character ratio of `lam` at an arbitrary class `rho` with nontrivial cycles k_1 >= ... >= k_r,

    chi / f = 1 / n^(k) sum_{i_1, ..., i_r} mu^(d) Delta(mu - d) / Delta(mu),   d = k_1 e_{i_1} + ... + k_r e_{i_r},

    with k = k_1 + ... + k_r and mu^(d) = prod_i mu_i^(d_i). Tuples producing a negative coordinate are omitted, tuples
    producing two equal coordinates vanish. Only pairs of coordinates touching the support of d enter the Vandermonde
    quotient. Index tuples within a run of equal cycle lengths are enumerated as multisets and weighted by their
    number of orderings.

    Parameters
    ----------
    lam
        Partition of n.
    rho
        Conjugacy class of S_n.
    caps
        `CapsConfig` or path to one. The sum has n^r terms, which may not exceed `caps.general_budget`.

    Returns
    -------
    ExactRatio
    """
    n = lam.n
    if rho.n != n:
        raise ValueError(f"Partition {lam} of {n} and class {rho} of {rho.n} do not belong to the same group.")
    cycles = rho.nontrivial_cycles
    r = len(cycles)
    if r == 0:
        return ExactRatio(1)

    caps = config.caps(caps)
    if not caps.allows("general_budget", n ** r):
        raise CapExceeded(f"The general character sum for class {rho} has n^r = {n}^{r} = {n ** r} terms, which "
                          f"exceeds the configured budget of {caps.general_budget}. Use unsafe caps to override.")

    mu = mu_vector(lam, n)
    k = sum(cycles)

    # cycle lengths grouped into runs of equal values, each run enumerated as an index multiset
    runs = [(length, len(list(group))) for length, group in groupby(cycles)]
    total = Fraction(0)
    for d, weight in _index_multisets(mu, runs):
        term = _vandermonde_term(mu, d)
        if term:
            total += weight * term

    return ExactRatio(total / falling_factorial(n, k))


def char_general(lam: Partition, rho: CycleType, caps=None) -> int:
    """Integer character value chi^lambda(rho), obtained as f^lambda times `char_ratio_general`."""
    value = dimension(lam) * char_ratio_general(lam, rho, caps=caps)
    if value.denominator != 1:
        raise ArithmeticError(f"Character value of {lam} at {rho} evaluated to the non-integer {value}.")
    return value.numerator


def _index_multisets(mu: Tuple[int, ...], runs: List[Tuple[int, int]]):
    """Yield (d, weight), with d a dict index -> shift, over all multisets of indices per run of equal cycle lengths.
    Branches in which a coordinate would turn negative are pruned."""

    n = len(mu)

    def _recurse(run_idx: int, d: dict, weight: int):
        if run_idx == len(runs):
            yield d, weight
            return
        length, count = runs[run_idx]
        yield from _fill_run(run_idx, length, count, 0, d, weight, Counter())

    def _fill_run(run_idx, length, remaining, start, d, weight, chosen):
        if remaining == 0:
            orderings = factorial(sum(chosen.values()))
            for c in chosen.values():
                orderings //= factorial(c)
            yield from _recurse(run_idx + 1, d, weight * orderings)
            return
        for i in range(start, n):
            shift = d.get(i, 0) + length
            if mu[i] - shift < 0:
                continue
            d_new = dict(d)
            d_new[i] = shift
            chosen[i] += 1
            yield from _fill_run(run_idx, length, remaining - 1, i, d_new, weight, chosen)
            chosen[i] -= 1
            if not chosen[i]:
                del chosen[i]

    yield from _recurse(0, {}, 1)


def _vandermonde_term(mu: Tuple[int, ...], d: dict) -> Fraction:
    """mu^(d) Delta(mu - d) / Delta(mu) for a shift vector d given by its support."""

    support = sorted(d)
    shifted = {i: mu[i] - d[i] for i in support}

    # vanishing Vandermonde
    untouched = set(mu) - {mu[i] for i in support}
    values = list(shifted.values())
    if len(set(values)) < len(values) or any(v in untouched for v in values):
        return Fraction(0)

    num, den = 1, 1
    for i in support:
        num *= falling_factorial(mu[i], d[i])
    for a, i in enumerate(support):
        nu_i, mu_i = shifted[i], mu[i]
        for j in range(len(mu)):
            if j in shifted:
                if support.index(j) <= a:
                    continue
                num *= nu_i - shifted[j]
            else:
                num *= nu_i - mu[j]
            den *= mu_i - mu[j]
    return Fraction(num, den)


##################
# contour formula #
##################


def _frobenius_polynomials(lam: Partition, k: int):
    """Numerator and denominator of the integrand

    F(z) = (z + (k-1)/2)^(k) prod_j (z - a_j - k/2) / (z - a_j + k/2) prod_j (z + b_j + k/2) / (z + b_j - k/2)

    as sympy polynomials with rational coefficients."""

    z = sp.Symbol("z")
    fc = lam.to_frobenius()
    half_k = sp.Rational(k, 2)
    a = [sp.Rational(x, 2) for x in fc.a2]
    b = [sp.Rational(x, 2) for x in fc.b2]

    num = sp.Integer(1)
    for i in range(k):
        num *= z + sp.Rational(k - 1, 2) - i
    den = sp.Integer(1)
    for a_j, b_j in zip(a, b):
        num *= (z - a_j - half_k) * (z + b_j + half_k)
        den *= (z - a_j + half_k) * (z + b_j - half_k)
    return sp.Poly(num, z, domain="QQ"), sp.Poly(den, z, domain="QQ")


def char_ratio_contour(lam: Partition, k: int) -> ExactRatio:
    """Character ratio at the k-cycle class from the contour formula in Frobenius coordinates,

    chi / f = -1 / (k n^(k)) * (sum of the finite residues of F),

    where the sum of finite residues equals minus the residue at infinity. Dividing P = S Q + R, the residue at infinity
    of F = P / Q is -lc(R) / lc(Q) if deg R = deg Q - 1, and zero otherwise.
    """
    n = lam.n
    _check_k(k, n)
    p, q = _frobenius_polynomials(lam, k)
    _, rem = sp.div(p, q)

    if not rem.is_zero and rem.degree() == q.degree() - 1:
        finite_residues = rem.LC() / q.LC()
    else:
        finite_residues = sp.Integer(0)

    value = -sp.Rational(1, k * falling_factorial(n, k)) * finite_residues
    value = sp.Rational(value)
    return ExactRatio(int(value.p), int(value.q))


def frobenius_poles(lam: Partition, k: int) -> List[Fraction]:
    """Finite poles of the contour integrand F after cancelling common factors, in increasing order."""
    _check_k(k, lam.n)
    p, q = _frobenius_polynomials(lam, k)
    _, q_reduced = p.cancel(q, include=True)
    poles = []
    for root in sp.roots(q_reduced).keys():
        root = sp.Rational(root)
        poles.append(Fraction(int(root.p), int(root.q)))
    return sorted(poles)
