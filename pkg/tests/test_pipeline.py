from fractions import Fraction

import pytest

from lmov.braid_link import catalog
from lmov.lmov_pipeline import (LMOVCheckError, build_Z, check_degree_bound,
                                check_lickorish_millett, check_pole_structure,
                                check_quotient_lemma, check_symmetry_lemma, check_T,
                                disjoint_union, extract_N, free_energy, lmov_table,
                                multicover_defect, P_table, run_pipeline)
from lmov.qt_ring import ONE, RationalQT, bracket, t_pow
from lmov.skein import homfly


@pytest.fixture(scope="module")
def trefoil_F():
    return free_energy(build_Z(catalog("trefoil"), 3))


@pytest.fixture(scope="module")
def hopf_F():
    return free_energy(build_Z(catalog("hopf"), 2))


def test_extract_N_examples():
    # [1]^2 P = t^{1/2}  ->  N_{g=0, 2Q=1} = 1 ... with P = t^{1/2} / [1]^2
    P = RationalQT(t_pow(1)).div_bracket(1, 2)
    assert extract_N(P) == {(0, 1): 1}
    # t^{1/2} itself is v * t^{1/2} after multiplying by [1]^2
    assert extract_N(RationalQT(t_pow(1))) == {(1, 1): 1}
    assert extract_N(RationalQT()) == {}


def test_extract_N_failures():
    with pytest.raises(LMOVCheckError) as exc:
        extract_N(RationalQT(ONE).div_bracket(2, 2))
    assert exc.value.kind == "existence"
    with pytest.raises(LMOVCheckError) as exc:
        extract_N(RationalQT(bracket(1) * bracket(1) * Fraction(1, 2)))
    assert exc.value.kind == "integrality"
    with pytest.raises(LMOVCheckError) as exc:
        extract_N(RationalQT(bracket(1)))
    assert exc.value.kind == "symmetry"


def test_unknot_table():
    tabs, report = run_pipeline(catalog("unknot"), 3)
    N = tabs["table"].N
    assert N[((1,),)] == {(0, -1): 1, (0, 1): -1}
    assert all(not N[B] for B in N if B != ((1,),))
    assert all(v for k, v in report.items())


def test_trefoil_fundamental_table(trefoil_F):
    table = lmov_table(trefoil_F)
    assert table.ok
    assert table.N[((1,),)] == {(0, -5): -1, (0, -3): 3, (0, -1): -2, (1, -3): 1, (1, -1): -1}


def test_round_trip(trefoil_F, hopf_F):
    assert trefoil_F.round_trip_defect() == []
    assert hopf_F.round_trip_defect() == []


def test_T_closed_form(trefoil_F, hopf_F):
    for F, degs in ((trefoil_F, (1,)), (trefoil_F, (2,)), (trefoil_F, (3,)),
                    (hopf_F, (1, 1)), (hopf_F, (1, 0))):
        check_T(F.Z, P_table(F, degs), degs)


def test_multicover_content(trefoil_F):
    for p in (2, 3):
        v = multicover_defect(trefoil_F.Z, (1,), p)
        assert v is None or v >= 0


def test_lemmas(trefoil_F, hopf_F):
    for F in (trefoil_F, hopf_F):
        assert check_symmetry_lemma(F.Z)["ok"]
        assert check_quotient_lemma(F.Z)["ok"]
        assert check_degree_bound(F)["ok"]


def test_pole_structure_refined(trefoil_F):
    for d in ((1,), (2,), (3,)):
        assert check_pole_structure(trefoil_F, d)["refined"]


def test_pole_structure_literal_trefoil(trefoil_F):
    # the plain H(t^D)/[D]^2 + polynomial form keeps a 1/[1]^2 pole at d = (2)
    assert check_pole_structure(trefoil_F, (1,))["literal"]
    assert not check_pole_structure(trefoil_F, (2,))["literal"]


def test_disjoint_union_free_energy_vanishes():
    L = disjoint_union(catalog("trefoil"), catalog("unknot"))
    F = free_energy(build_Z(L, 3))
    mixed = [mu for mu in F.cycle_types() if mu[0] and mu[1]]
    assert mixed
    assert all(F.F(mu).is_zero() for mu in mixed)


def test_lickorish_millett():
    assert check_lickorish_millett(catalog("hopf"))["ok"]
    assert check_lickorish_millett(catalog("hopf"), homfly=homfly)["ok"]
    assert check_lickorish_millett(catalog("torus(3,3)"))["ok"]


def test_workers_match_serial():
    a = build_Z(catalog("hopf"), 2)
    b = build_Z(catalog("hopf"), 2, workers=2)
    assert all(a[A] == b[A] for A in a.colors())
