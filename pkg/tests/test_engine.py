import pytest

from lmov.braid_link import catalog
from lmov.combinatorics import color_conjugate, color_norm, partitions_of
from lmov.quantum_engine import (CONVENTION_VERSION, ResourceError, colored_invariant,
                                 full_twist_eigen_check, interpolate_t, invariant,
                                 invariant_at_N, zhat_character_sum, zhat_powersum)
from lmov.qt_ring import RationalQT
from lmov.skein import fundamental_invariant
from lmov.symfun import quantum_dimension


def test_unknot_is_quantum_dimension():
    for n in range(1, 4):
        for A in partitions_of(n):
            assert colored_invariant(catalog("unknot"), (A,)) == quantum_dimension(A)


def test_empty_colour_removes_component():
    hopf = catalog("hopf")
    assert colored_invariant(hopf, ((), ())) == RationalQT(1)
    assert colored_invariant(hopf, ((2,), ())) == quantum_dimension((2,))


@pytest.mark.parametrize("name", ["trefoil", "hopf", "figure8", "torus(2,5)", "torus(3,3)"])
def test_fundamental_matches_skein(name):
    L = catalog(name)
    A = tuple((1,) for _ in range(L.num_components))
    assert colored_invariant(L, A) == fundamental_invariant(L)


def test_explicit_N_agrees_with_generic():
    L = catalog("trefoil")
    for A in ((2,), (1, 1)):
        W = colored_invariant(L, (A,))
        for N in (2, 3):
            assert invariant_at_N(L, (A,), N) == W.specialize_t(N)


def test_interpolation_cross_check():
    L = catalog("trefoil")
    assert interpolate_t(L, ((2,),)).value == colored_invariant(L, ((2,),))


def test_full_twist():
    for A in ((1,), (2,), (1, 1), (2, 1)):
        assert full_twist_eigen_check(A, 3)


def test_symmetry_under_conjugation():
    L = catalog("hopf")
    for A in (((2,), (1,)), ((2, 1), (1,)), ((1, 1), (2,))):
        lhs = colored_invariant(L, color_conjugate(A))
        rhs = colored_invariant(L, A).invert_q() * (-1) ** color_norm(A)
        assert lhs == rhs


def test_strand_cap():
    with pytest.raises(ResourceError):
        colored_invariant(catalog("torus(2,5)"), ((3,),), max_strands=4)


def test_provenance():
    v = invariant(catalog("trefoil"), ((1,),))
    assert v.provenance == "hecke-generic-N"
    assert CONVENTION_VERSION == "mirror-R-1"


def test_powersum_cabling_oracle():
    L = catalog("hopf")
    mu = ((2,), (1,))
    assert zhat_powersum(L, mu).value == zhat_character_sum(L, mu)


def test_markov_stabilisation():
    from lmov.braid_link import BraidWord, LinkPresentation
    base = catalog("trefoil")
    pos = LinkPresentation(BraidWord(3, (1, 1, 1, 2)))
    neg = LinkPresentation(BraidWord(3, (1, 1, 1, -2)))
    for A in (((2,),), ((1, 1),), ((2, 1),)):
        assert colored_invariant(base, A) == colored_invariant(pos, A) == colored_invariant(neg, A)
