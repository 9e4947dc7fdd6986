from fractions import Fraction

from lmov.braid_link import catalog
from lmov.cutjoin import (FormalSeries, check_cut_join_support, check_log_exp, check_schur_eigen,
                          exp_cutjoin, schur_series, series_exp, series_log,
                          verify_framed_cutjoin)


def test_schur_eigenvalues():
    for n in range(1, 7):
        assert check_schur_eigen(n) == []


def test_support_is_cuts_and_joins():
    for n in range(1, 7):
        assert check_cut_join_support(n) == []


def test_p2_maps_to_cuts():
    f = FormalSeries(1, 2, 0, {(((2,),), 0, 0): Fraction(1)})
    # E p_2 = 2 p_1 p_1
    assert exp_cutjoin(f).terms == {(((1, 1),), 0, 0): 2}


def test_log_exp_inverse():
    F = FormalSeries(1, 4, 0, {(((1,),), 0, 0): Fraction(1, 2), (((2, 1),), 0, 0): Fraction(3)})
    assert series_log(series_exp(F)) == F


def test_log_cutjoin_identity():
    F = FormalSeries(1, 4, 0, {(((1,),), 0, 0): Fraction(2), (((2,),), 0, 0): Fraction(-1, 3),
                                (((1, 1, 1),), 0, 0): Fraction(1)})
    assert check_log_exp(F)


def test_schur_series_degree():
    s = schur_series((2, 1))
    assert s.terms[(((1, 1, 1),), 0, 0)] == Fraction(1, 3)


def test_framed_equations():
    for name in ("unknot", "trefoil"):
        r = verify_framed_cutjoin(catalog(name), cap=2, K=2)
        assert r["exponential"] and r["log"]
    r = verify_framed_cutjoin(catalog("hopf"), cap=2, K=2, alpha=1)
    assert r["ok"]
