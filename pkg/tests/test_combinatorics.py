from fractions import Fraction

import pytest

from lmov.combinatorics import (SPartition, color_norm, colors_up_to, compositions, conjugate,
                                cut_joins, divisors, enumerate_spartitions, kappa, mobius,
                                partition, partitions_of, z_of)


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_normalises_and_rejects():
    assert partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        partition([2, -1])


def test_conjugate_involution():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
    assert conjugate((3, 1)) == (2, 1, 1)


def test_z_and_kappa():
    assert z_of((2, 1, 1)) == 4
    assert z_of((3, 3)) == 18
    assert kappa((2,)) == 2
    assert kappa((1, 1)) == -2
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kappa(conjugate(lam)) == -kappa(lam)
        assert sum(Fraction(1, z_of(m)) for m in partitions_of(n)) == 1


def test_cut_joins_small():
    cuts, joins = cut_joins((2, 1))
    assert cuts == {(1, 1, 1)}
    assert joins == {(3,)}


def test_mobius_and_divisors():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_compositions():
    assert len(list(compositions(4))) == 8


def test_colors_up_to_hopf_degree_two():
    # nonzero pairs (A1, A2) with |A1| + |A2| <= 2
    assert len(colors_up_to(2, 2)) == 7
    assert all(0 < color_norm(c) <= 2 for c in colors_up_to(2, 2))


def test_spartitions_of_11():
    sps = {sp.parts: sp.theta for sp in enumerate_spartitions(((1, 1),))}
    assert sps == {(((1, 1),),): 1, (((1,),), ((1,),)): Fraction(-1, 2)}


def test_spartition_canonical():
    a = SPartition([((1,),), ((2,),)])
    b = SPartition([((2,),), ((1,),)])
    assert a == b and hash(a) == hash(b)
    with pytest.raises(ValueError):
        SPartition([((),)])
