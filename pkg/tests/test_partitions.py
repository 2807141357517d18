"""Test suite for partitions, Frobenius coordinates and conjugacy classes."""

__author__ = "pycutoff contributors"
__status__ = "Development"

from fractions import Fraction
from math import factorial, isqrt

import pytest

from pycutoff.partitions import Partition, FrobeniusCoords, CycleType, conjugate, to_frobenius, from_frobenius, \
    enumerate_partitions, enumerate_classes, partition_count, mu_vector, class_size, delta_statistic, contents, \
    hook_lengths, diagonal_bound_holds


def setup_module():
    print("\n")
    print("=========================")
    print("| Test Suite Partitions |")
    print("=========================")


def test_partition_validation():
    """Partitions must be weakly decreasing with positive parts; trailing zeros are dropped."""

    assert Partition([3, 2, 0, 0]).parts == (3, 2)
    assert Partition([3, 2]).n == 5
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([3, -1])
    with pytest.raises(ValueError):
        Partition([])
    with pytest.raises(ValueError):
        Partition([0])


def test_partition_string_format():
    lam = Partition.parse("3,2")
    assert lam == Partition([3, 2])
    assert str(lam) == "3,2"
    assert Partition.parse("2,1^3") == Partition([2, 1, 1, 1])
    assert repr(lam) == "<Partition '3,2'>"


@pytest.mark.parametrize("parts,expected", [((3, 2), (2, 2, 1)),
                                            ((6,), (1, 1, 1, 1, 1, 1)),
                                            ((4, 1), (2, 1, 1, 1))])
def test_conjugate(parts, expected):
    assert conjugate(Partition(parts)).parts == expected


def test_frobenius_coordinates():
    """a_i = lambda_i - i + 1/2 and b_i = lambda_i' - i + 1/2 over the diagonal."""

    fc = to_frobenius(Partition([3, 2]))
    assert fc.a == (Fraction(5, 2), Fraction(1, 2))
    assert fc.b == (Fraction(3, 2), Fraction(1, 2))
    assert fc.a2 == (5, 1)
    assert str(fc) == "a:5/2,1/2;b:3/2,1/2"

    n = 9
    fc = to_frobenius(Partition([n]))
    assert fc.a == (Fraction(2 * n - 1, 2),) and fc.b == (Fraction(1, 2),)

    fc = to_frobenius(Partition([5, 1]))
    assert fc.a == (Fraction(9, 2),) and fc.b == (Fraction(3, 2),)

    # inverses
    assert from_frobenius(FrobeniusCoords([5, 1], [3, 1])) == Partition([3, 2])
    assert from_frobenius(FrobeniusCoords.from_halves(["17/2"], ["1/2"])) == Partition([9])
    assert FrobeniusCoords.parse("a:9/2;b:3/2").to_partition() == Partition([5, 1])


def test_frobenius_validation():
    with pytest.raises(ValueError):
        FrobeniusCoords([5, 5], [3, 1])
    with pytest.raises(ValueError):
        FrobeniusCoords([4], [1])
    with pytest.raises(ValueError):
        FrobeniusCoords([5, 1], [3])
    with pytest.raises(ValueError):
        FrobeniusCoords.from_halves([Fraction(1, 3)], [Fraction(1, 2)])


def test_frobenius_of_long_rows():
    """Only the first m column lengths are needed, so partitions with a million boxes convert instantly."""

    lam = Partition([400001, 400000, 199999])
    fc = lam.to_frobenius()
    assert fc.m == 3
    assert fc.n == lam.n
    assert fc.to_partition() == lam


def test_partition_invariants():
    """Round trips, Frobenius mass and the diagonal bound for all partitions of n <= 20."""

    for n in range(1, 21):
        for lam in enumerate_partitions(n):
            fc = to_frobenius(lam)
            assert from_frobenius(fc) == lam
            assert sum(fc.a) + sum(fc.b) == n
            assert conjugate(conjugate(lam)) == lam
            assert fc.m <= isqrt(n)
            assert diagonal_bound_holds(lam)


def test_enumeration():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]
    assert len(list(enumerate_partitions(10))) == 42
    for n in range(1, 31):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)
    assert partition_count(40) == 37338
    with pytest.raises(ValueError):
        list(enumerate_partitions(0))


@pytest.mark.parametrize("parts,n,expected", [((2, 1), 3, (4, 2, 0)),
                                              ((5,), 5, (9, 3, 2, 1, 0)),
                                              ((1, 1, 1), 3, (3, 2, 1))])
def test_mu_vector(parts, n, expected):
    assert mu_vector(Partition(parts), n) == expected


def test_mu_vector_mismatch():
    with pytest.raises(ValueError):
        mu_vector(Partition([2, 1]), 4)


def test_cycle_types():
    """Fixed points, 2-cycles, sign and class sizes."""

    rho = CycleType([2, 1, 1])
    assert rho.fixed_points == 2 and rho.two_cycles == 1
    assert rho.sign == -1
    assert rho.nontrivial_total == 2
    assert class_size(rho) == 6
    assert class_size(CycleType([3])) == 2
    assert class_size(CycleType.identity(7)) == 1
    assert CycleType.k_cycle(5, 3) == CycleType([3, 1, 1])
    assert CycleType([1, 3, 1]).cycles.parts == (3, 1, 1)
    assert CycleType([2, 2, 2]).sign == -1
    with pytest.raises(ValueError):
        CycleType.k_cycle(4, 5)

    for n in range(1, 13):
        assert sum(class_size(rho) for rho in enumerate_classes(n)) == factorial(n)


@pytest.mark.parametrize("parts,expected", [((7,), 0), ((3, 2), 0), ((4, 1, 1), 2)])
def test_delta_statistic(parts, expected):
    assert delta_statistic(Partition(parts)) == expected


def test_contents_and_hooks():
    lam = Partition([3, 2])
    assert sorted(contents(lam)) == [-1, 0, 0, 1, 2]
    assert sorted(hook_lengths(lam)) == [1, 1, 2, 3, 4]
