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
"""Partitions of n in row notation, Frobenius coordinates and conjugacy classes (cycle types) of S_n.

All classes in this module are immutable value types: they are hashable, compare by content and may be shared freely
between worker processes.
"""

# external _imports
from collections import Counter
from fractions import Fraction
from math import factorial, isqrt
from typing import Iterable, Iterator, Tuple, Union

# meta infos
__author__ = "pycutoff contributors"
__status__ = "Development"


###########
# classes #
###########


class Partition:
    """A partition of n in row notation, i.e. a weakly decreasing tuple of positive parts. Trailing zeros that are
    passed to the constructor are stripped, since rows beyond the last part are implicitly zero.
    """

    __slots__ = ["_parts", "_n", "_h"]

    def __init__(self, parts: Iterable[int]):

        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if not parts:
            raise ValueError("Partitions of n = 0 are not supported. Please provide at least one positive part.")
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"Invalid part {p} at position {i} of partition {parts}: parts must be positive.")
            if i > 0 and parts[i-1] < p:
                raise ValueError(f"Partition {parts} is not in weakly decreasing order.")

        self._parts = tuple(parts)
        self._n = sum(parts)
        self._h = hash(("Partition", self._parts))

    @classmethod
    def parse(cls, s: str):
        """Create a partition from its comma-joined representation, e.g. `"3,2"`. Exponent notation `"2,1^3"` is
        accepted as well."""
        parts = []
        for token in s.replace(" ", "").split(","):
            if not token:
                continue
            if "^" in token:
                part, mult = token.split("^")
                parts.extend([int(part)] * int(mult))
            else:
                parts.append(int(token))
        return cls(parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return self._n

    def row(self, i: int) -> int:
        """Returns the length of row `i` (1-indexed), zero beyond the last part."""
        return self._parts[i-1] if i <= len(self._parts) else 0

    def conjugate(self):
        return conjugate(self)

    def to_frobenius(self):
        return to_frobenius(self)

    @property
    def diagonal(self) -> int:
        """Length m of the main diagonal (Durfee square side)."""
        m = 0
        for i, p in enumerate(self._parts, start=1):
            if p >= i:
                m = i
            else:
                break
        return m

    def is_one_dimensional(self) -> bool:
        """True for the trivial partition (n) and the sign partition (1^n)."""
        return len(self._parts) == 1 or self._parts[0] == 1

    def __len__(self):
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self):
        return self._h

    def __str__(self):
        return ",".join(str(p) for p in self._parts)

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self}'>"

    def __reduce__(self):
        return self.__class__, (self._parts,)


class FrobeniusCoords:
    """Frobenius coordinates (a_1, ..., a_m | b_1, ..., b_m) of a partition, with a_i = lambda_i - i + 1/2 and
    b_i = lambda_i' - i + 1/2. The half-integers are stored as doubled (odd) integers so that all arithmetic on them
    stays exact; `a` and `b` return them as fractions.
    """

    __slots__ = ["_a2", "_b2", "_h"]

    def __init__(self, a2: Iterable[int], b2: Iterable[int]):

        a2, b2 = tuple(int(x) for x in a2), tuple(int(x) for x in b2)
        if len(a2) != len(b2) or not a2:
            raise ValueError(f"Frobenius coordinates need arm and leg lists of equal, positive length. Received "
                             f"{len(a2)} arms and {len(b2)} legs.")
        for name, coords in (("a", a2), ("b", b2)):
            for i, x in enumerate(coords):
                if x < 1 or x % 2 != 1:
                    raise ValueError(f"Coordinate {name}_{i+1} = {Fraction(x, 2)} is not a positive half-integer.")
                if i > 0 and coords[i-1] <= x:
                    raise ValueError(f"Coordinates {name} = {[str(Fraction(c, 2)) for c in coords]} are not strictly "
                                     f"decreasing.")

        self._a2 = a2
        self._b2 = b2
        self._h = hash(("FrobeniusCoords", a2, b2))

    @classmethod
    def from_halves(cls, a: Iterable, b: Iterable):
        """Create coordinates from half-integers given as fractions, floats or strings like `"5/2"`."""
        return cls([_double(x) for x in a], [_double(x) for x in b])

    @classmethod
    def parse(cls, s: str):
        """Parse the CLI representation `"a:5/2,1/2;b:3/2,1/2"`."""
        fields = {}
        for chunk in s.replace(" ", "").split(";"):
            key, _, values = chunk.partition(":")
            fields[key] = [v for v in values.split(",") if v]
        try:
            return cls.from_halves(fields["a"], fields["b"])
        except KeyError as e:
            raise ValueError(f"Missing field {e.args[0]} in Frobenius coordinate string '{s}'.")

    @property
    def a2(self) -> Tuple[int, ...]:
        return self._a2

    @property
    def b2(self) -> Tuple[int, ...]:
        return self._b2

    @property
    def a(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self._a2)

    @property
    def b(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self._b2)

    @property
    def m(self) -> int:
        return len(self._a2)

    @property
    def n(self) -> int:
        return (sum(self._a2) + sum(self._b2)) // 2

    def to_partition(self) -> Partition:
        return from_frobenius(self)

    def __eq__(self, other):
        if not isinstance(other, FrobeniusCoords):
            return NotImplemented
        return self._a2 == other._a2 and self._b2 == other._b2

    def __hash__(self):
        return self._h

    def __str__(self):
        a = ",".join(str(Fraction(x, 2)) for x in self._a2)
        b = ",".join(str(Fraction(x, 2)) for x in self._b2)
        return f"a:{a};b:{b}"

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self}'>"

    def __reduce__(self):
        return self.__class__, (self._a2, self._b2)


class CycleType:
    """Conjugacy class of S_n, given by its cycle structure rho (a partition of n). Fixed points, 2-cycles, sign and
    class size are derived from the cycle structure.
    """

    __slots__ = ["_cycles", "_mult", "_h"]

    def __init__(self, cycles: Union[Partition, Iterable[int]]):

        if not isinstance(cycles, Partition):
            cycles = Partition(sorted(cycles, reverse=True))
        self._cycles = cycles
        self._mult = Counter(cycles.parts)
        self._h = hash(("CycleType", cycles.parts))

    @classmethod
    def k_cycle(cls, n: int, k: int):
        """The class (k, 1^{n-k}) of k-cycles in S_n."""
        if not 1 <= k <= n:
            raise ValueError(f"Cycle length k = {k} must lie in [1, n] for n = {n}.")
        return cls([k] + [1] * (n - k))

    @classmethod
    def identity(cls, n: int):
        return cls([1] * n)

    @classmethod
    def parse(cls, s: str):
        return cls(Partition.parse(s))

    @property
    def cycles(self) -> Partition:
        return self._cycles

    @property
    def n(self) -> int:
        return self._cycles.n

    @property
    def multiplicities(self) -> dict:
        return dict(self._mult)

    @property
    def fixed_points(self) -> int:
        return self._mult.get(1, 0)

    @property
    def two_cycles(self) -> int:
        return self._mult.get(2, 0)

    @property
    def nontrivial_cycles(self) -> Tuple[int, ...]:
        return tuple(p for p in self._cycles.parts if p > 1)

    @property
    def nontrivial_total(self) -> int:
        return self.n - self.fixed_points

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self._cycles)) % 2 else 1

    @property
    def size(self) -> int:
        return class_size(self)

    def is_identity(self) -> bool:
        return self.fixed_points == self.n

    def __eq__(self, other):
        if not isinstance(other, CycleType):
            return NotImplemented
        return self._cycles == other._cycles

    def __hash__(self):
        return self._h

    def __str__(self):
        return str(self._cycles)

    def __repr__(self):
        return f"<{self.__class__.__name__} '{self}'>"

    def __reduce__(self):
        return self.__class__, (self._cycles,)


##############################
# partition helper functions #
##############################


def _double(x) -> int:
    x2 = Fraction(x) * 2
    if x2.denominator != 1:
        raise ValueError(f"{x} is not a half-integer.")
    return int(x2)


def conjugate(lam: Partition) -> Partition:
    """Reflect the Young diagram of `lam` along its diagonal, i.e. return the column lengths."""
    parts = lam.parts
    cols = []
    j = len(parts)
    for c in range(1, parts[0] + 1):
        while parts[j-1] < c:
            j -= 1
        cols.append(j)
    return Partition(cols)


def to_frobenius(lam: Partition) -> FrobeniusCoords:
    """Frobenius coordinates of `lam`: a_i = lambda_i - i + 1/2, b_i = lambda_i' - i + 1/2 for i up to the diagonal
    length m. Only the first m column lengths are computed, so partitions with very long rows stay cheap.
    """
    m = lam.diagonal
    parts = lam.parts

    # column lengths lambda_i' for i = m, ..., 1
    col_lengths = [0] * m
    j = 0
    for c in range(m, 0, -1):
        while j < len(parts) and parts[j] >= c:
            j += 1
        col_lengths[c-1] = j

    a2 = [2 * (parts[i-1] - i) + 1 for i in range(1, m + 1)]
    b2 = [2 * (col_lengths[i-1] - i) + 1 for i in range(1, m + 1)]
    return FrobeniusCoords(a2, b2)


def from_frobenius(fc: FrobeniusCoords) -> Partition:
    """Inverse of `to_frobenius`. Rows up to the diagonal follow from the arms, rows below the diagonal are counted
    from the legs."""
    m = fc.m
    rows = [(a2 - 1) // 2 + i for i, a2 in enumerate(fc.a2, start=1)]
    cols = [(b2 - 1) // 2 + i for i, b2 in enumerate(fc.b2, start=1)]
    depth = cols[0]
    for j in range(m + 1, depth + 1):
        rows.append(sum(1 for c in cols if c >= j))
    return Partition(rows)


def enumerate_partitions(n: int, max_part: int = None) -> Iterator[Partition]:
    """Yield every partition of `n` exactly once, in reverse-lexicographic order starting from (n).

    Parameters
    ----------
    n
        Integer to partition (n >= 1).
    max_part
        Optional upper bound on the largest part.
    """
    if n < 1:
        raise ValueError(f"Partitions are only enumerated for n >= 1, received n = {n}.")
    for parts in _partition_tuples(n, n if max_part is None else min(n, max_part)):
        yield Partition(parts)


def _partition_tuples(n: int, max_part: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def enumerate_classes(n: int) -> Iterator[CycleType]:
    """Yield every conjugacy class of S_n, in the same order as `enumerate_partitions`."""
    for lam in enumerate_partitions(n):
        yield CycleType(lam)


def partition_count(n: int) -> int:
    """Number of partitions p(n), computed with Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            g2 = k * (3 * k + 1) // 2
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def mu_vector(lam: Partition, n: int) -> Tuple[int, ...]:
    """Shifted vector mu = lambda + (n-1, n-2, ..., 0), with lambda padded by zeros to length n."""
    if lam.n != n:
        raise ValueError(f"Partition {lam} is a partition of {lam.n}, not of n = {n}.")
    return tuple(lam.row(i) + n - i for i in range(1, n + 1))


def class_size(rho: Union[CycleType, Partition]) -> int:
    """Size n! / prod_j (j^{m_j} m_j!) of the conjugacy class with cycle structure `rho`."""
    if isinstance(rho, Partition):
        rho = CycleType(rho)
    centralizer = 1
    for j, m_j in rho.multiplicities.items():
        centralizer *= j ** m_j * factorial(m_j)
    return factorial(rho.n) // centralizer


def delta_statistic(lam: Partition) -> int:
    """Number of boxes of `lam` lying neither in the first row nor in the square spanned by the diagonal."""
    m = lam.diagonal
    return lam.n - m * m - (lam.parts[0] - m)


def contents(lam: Partition) -> Iterator[int]:
    """Contents j - i of all cells (i, j) of the Young diagram."""
    for i, row in enumerate(lam.parts):
        for j in range(row):
            yield j - i


def hook_lengths(lam: Partition) -> Iterator[int]:
    """Hook lengths of all cells of the Young diagram."""
    cols = conjugate(lam).parts
    for i, row in enumerate(lam.parts):
        for j in range(row):
            yield (row - j - 1) + (cols[j] - i - 1) + 1


def diagonal_bound_holds(lam: Partition) -> bool:
    return lam.diagonal <= isqrt(lam.n)
