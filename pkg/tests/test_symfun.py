from fractions import Fraction

from lmov.combinatorics import partitions_of
from lmov.qt_ring import RationalQT, bracket, bracket_t
from lmov.symfun import (CharacterTable, SymFun, character, plethystic_power,
                         power_to_schur, principal_specialization, quantum_dimension,
                         quantum_dimension_at, quantum_dimension_hook, schur_to_power)


def test_character_values():
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (3,)) == -1
    assert character((1, 1, 1), (2, 1)) == -1
    assert character((3,), (2, 1)) == 1


def test_orthogonality():
    for n in range(1, 7):
        assert CharacterTable(n).orthogonality_defect() == 0


def test_schur_times_schur():
    prod = (SymFun.s((2,)) * SymFun.s((1,))).to_schur()
    assert prod.terms == {((3,),): 1, ((2, 1),): 1}


def test_basis_round_trip():
    for n in range(1, 6):
        for lam in partitions_of(n):
            assert schur_to_power(lam).to_schur().terms == {(lam,): 1}
            assert power_to_schur(lam).to_power().terms == {(lam,): 1}


def test_quantum_dimension_fundamental():
    expected = RationalQT(bracket_t(1) * bracket(1)).div_bracket(1, 2)
    assert quantum_dimension((1,)) == expected


def test_quantum_dimension_formulas_agree():
    for n in range(1, 5):
        for A in partitions_of(n):
            assert quantum_dimension(A) == quantum_dimension_hook(A)
            for N in (2, 3):
                assert quantum_dimension_at(A, N) == principal_specialization(A, N)


def test_plethystic_power_on_p():
    f = SymFun.p((2, 1), coeff=Fraction(1, 3))
    assert plethystic_power(f, 2).terms == {((4, 2),): Fraction(1, 3)}
