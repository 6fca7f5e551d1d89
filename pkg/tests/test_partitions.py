import math

import pytest

from chsnorms.partitions import (
    Partition,
    partition_count,
    partitions_of,
    partitions_without_ones,
    z_of,
)

from oracles import cycle_type_counts, partitions_brute


def parts(ps):
    return [p.parts for p in ps]


def test_partitions_of_4():
    assert parts(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_6():
    ps = partitions_of(6)
    assert len(ps) == 11
    assert parts(partitions_without_ones(6)) == [(6,), (4, 2), (3, 3), (2, 2, 2)]


def test_small_cases():
    assert parts(partitions_of(1)) == [(1,)]
    assert parts(partitions_of(0)) == [()]
    assert parts(partitions_without_ones(2)) == [(2,)]
    assert parts(partitions_without_ones(4)) == [(4,), (2, 2)]


@pytest.mark.parametrize("d", range(1, 13))
def test_partitions_match_brute_force(d):
    ps = parts(partitions_of(d))
    assert set(ps) == partitions_brute(d)
    assert ps == sorted(ps, reverse=True)


@pytest.mark.parametrize("pi, z", [
    ((1, 1), 2), ((2,), 2),
    ((4,), 4), ((3, 1), 3), ((2, 2), 8), ((2, 1, 1), 4), ((1, 1, 1, 1), 24),
    ((6,), 6), ((4, 2), 8), ((3, 3), 18), ((2, 2, 2), 48),
])
def test_z_table(pi, z):
    assert z_of(Partition(pi)) == z


@pytest.mark.parametrize("d", range(1, 8))
def test_z_is_centralizer_size(d):
    # d!/z_pi must equal the number of permutations with cycle type pi
    counts = cycle_type_counts(d)
    f = math.factorial(d)
    for p in partitions_of(d):
        assert f % z_of(p) == 0
        assert f // z_of(p) == counts[p.parts]
    assert sum(f // z_of(p) for p in partitions_of(d)) == f


def test_partition_count_terms():
    assert [partition_count(d) for d in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_count(0) == 1
    assert partition_count(-3) == 0


def test_partition_count_50():
    assert partition_count(50) == len(partitions_of(50)) == 204226


@pytest.mark.parametrize("d", range(0, 41))
def test_count_matches_enumeration(d):
    assert len(partitions_of(d)) == partition_count(d)


def test_z_divides_factorial_large():
    for d in (20, 25):
        f = math.factorial(d)
        assert all(f % z_of(p) == 0 for p in partitions_of(d))


def test_partition_type():
    p = Partition((3, 1, 1))
    assert p.weight == 5 and p.multiplicities == {3: 1, 1: 2} and p.z == 6
    with pytest.raises(ValueError):
        Partition((1, 2))
