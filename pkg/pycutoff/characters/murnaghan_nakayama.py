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
"""Murnaghan-Nakayama rule and full character tables of S_n.
"""

# external _imports
import json
import time
from math import factorial
from multiprocessing import Pool
from typing import Dict, List, Tuple, Union

import pandas as pd

# pycutoff internal _imports
from pycutoff import config
from pycutoff.exceptions import CapExceeded
from pycutoff.partitions import CycleType, Partition, class_size, enumerate_partitions
from pycutoff.characters.dimensions import dimension

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"

# memo tables of the Murnaghan-Nakayama recursion and of assembled character tables
_mn_cache: Dict[Tuple[tuple, tuple], int] = dict()
_table_cache: Dict[int, "CharacterTable"] = dict()


def clear_character_caches():
    """Empties the memo tables of the Murnaghan-Nakayama recursion and the cache of assembled character tables."""
    _mn_cache.clear()
    _table_cache.clear()


############################
# Murnaghan-Nakayama oracle #
############################


def char_mn_oracle(lam: Partition, rho: CycleType) -> int:
    """Character value chi^lambda(rho) by recursive removal of border strips.

    Border strips of length k correspond to moving one bead of the beta-set of lambda down by k onto a free position;
    the sign is (-1)^(number of beads jumped). Cycles are removed in decreasing order of length and intermediate values
    are memoized on (remaining shape, remaining cycles).
    """
    if lam.n != rho.n:
        raise ValueError(f"Partition {lam} of {lam.n} and class {rho} of {rho.n} do not belong to the same group.")
    return _mn(lam.parts, rho.cycles.parts)


def _mn(parts: tuple, cycles: tuple) -> int:

    if not cycles:
        return 1

    key = (parts, cycles)
    if key in _mn_cache:
        return _mn_cache[key]

    k, rest = cycles[0], cycles[1:]
    ell = len(parts)
    beta = [p + ell - 1 - i for i, p in enumerate(parts)]
    beta_set = set(beta)

    total = 0
    for idx, b in enumerate(beta):
        c = b - k
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted(beta[:idx] + [c] + beta[idx+1:], reverse=True)
        new_parts = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_parts = tuple(p for p in new_parts if p > 0)
        value = _mn(new_parts, rest)
        total += -value if height % 2 else value

    _mn_cache[key] = total
    return total


###################
# character table #
###################


class CharacterTable:
    """Full integer character table of S_n. Rows are indexed by partitions (irreducible representations), columns by
    conjugacy classes, both in reverse-lexicographic order.
    """

    __slots__ = ["n", "partitions", "classes", "values", "dims", "_row_idx", "_col_idx"]

    def __init__(self, n: int, partitions: List[Partition], classes: List[CycleType], values: List[List[int]]):

        self.n = n
        self.partitions = list(partitions)
        self.classes = list(classes)
        self.values = [list(row) for row in values]
        self._row_idx = {lam: i for i, lam in enumerate(self.partitions)}
        self._col_idx = {rho: j for j, rho in enumerate(self.classes)}
        identity = self._col_idx[CycleType.identity(n)]
        self.dims = [row[identity] for row in self.values]

    def value(self, lam: Partition, rho: CycleType) -> int:
        return self.values[self._row_idx[lam]][self._col_idx[rho]]

    def row(self, lam: Partition) -> Dict[CycleType, int]:
        return dict(zip(self.classes, self.values[self._row_idx[lam]]))

    def column(self, rho: CycleType) -> Dict[Partition, int]:
        j = self._col_idx[rho]
        return {lam: row[j] for lam, row in zip(self.partitions, self.values)}

    def dimension(self, lam: Partition) -> int:
        return self.dims[self._row_idx[lam]]

    def class_sizes(self) -> List[int]:
        return [class_size(rho) for rho in self.classes]

    def check_orthogonality(self) -> bool:
        """Column orthogonality: sum_lambda chi(rho) chi(rho') = delta_{rho, rho'} n! / |class(rho)|."""
        n_fac = factorial(self.n)
        sizes = self.class_sizes()
        for j, rho in enumerate(self.classes):
            for j2 in range(j, len(self.classes)):
                s = sum(row[j] * row[j2] for row in self.values)
                expected = n_fac // sizes[j] if j == j2 else 0
                if s != expected:
                    return False
        return True

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.values, index=[str(lam) for lam in self.partitions],
                             columns=[str(rho) for rho in self.classes], dtype=object)
        frame.index.name = "lambda"
        return frame

    def to_csv(self, path: str = None) -> Union[str, None]:
        return self.to_frame().to_csv(path)

    def to_dict(self) -> dict:
        return {"n": self.n,
                "partitions": [str(lam) for lam in self.partitions],
                "classes": [str(rho) for rho in self.classes],
                "dimensions": [str(f) for f in self.dims],
                "values": [[str(v) for v in row] for row in self.values]}

    def to_json(self, path: str = None) -> Union[str, None]:
        s = json.dumps(self.to_dict())
        if path is None:
            return s
        with open(path, "w") as f:
            f.write(s)

    def __repr__(self):
        return f"<{self.__class__.__name__} n={self.n}>"


def _table_row(args) -> List[int]:
    parts, class_parts = args
    return [_mn(parts, cycles) for cycles in class_parts]


def character_table(n: int, caps=None, workers: int = 1, verbose: bool = False) -> CharacterTable:
    """Assemble the character table of S_n from the Murnaghan-Nakayama oracle.

    Parameters
    ----------
    n
        Size of the symmetric group.
    caps
        `CapsConfig` or path to one; `n` may not exceed `caps.table_n_max`.
    workers
        Number of worker processes the rows are distributed over.
    verbose
        If true, progress is printed.

    Returns
    -------
    CharacterTable
    """
    caps = config.caps(caps)
    if not caps.allows("table_n_max", n):
        raise CapExceeded(f"Character table of S_{n} requested, but the configured cap is n <= {caps.table_n_max}. "
                          f"Use unsafe caps to override.")
    if n in _table_cache:
        return _table_cache[n]

    t0 = time.perf_counter()
    if verbose:
        print("Character Table Progress")
        print("------------------------")
        print(f"\t (1) Enumerating partitions of n = {n}...")

    partitions = list(enumerate_partitions(n))
    classes = [CycleType(lam) for lam in partitions]
    tasks = [(lam.parts, tuple(rho.cycles.parts for rho in classes)) for lam in partitions]

    if verbose:
        print(f"\t\t...{len(partitions)} partitions.")
        print(f"\t (2) Evaluating {len(partitions)**2} characters...")

    if workers > 1:
        with Pool(workers) as pool:
            values = pool.map(_table_row, tasks)
    else:
        values = [_table_row(task) for task in tasks]

    table = CharacterTable(n, partitions, classes, values)
    _table_cache[n] = table

    if verbose:
        print(f"\t\t...finished after {time.perf_counter() - t0}s.")

    return table


def table_dimensions_agree(table: CharacterTable) -> bool:
    return all(f == dimension(lam) for lam, f in zip(table.partitions, table.dims))
