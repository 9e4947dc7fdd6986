from lmov.braid_link import catalog
from lmov.combinatorics import partitions_of
from lmov.hecke import HeckeElement, contains, minimal_projection, standard_tableaux
from lmov.qt_ring import RationalQT, q_pow, t_pow
from lmov.skein import fundamental_invariant, homfly


def test_standard_tableaux_count():
    assert len(standard_tableaux((3, 2))) == 5
    assert len(standard_tableaux((2, 2, 1))) == 5


def test_contains():
    assert contains((3, 1), (2,))
    assert not contains((1, 1, 1), (2,))


def test_minimal_projections_idempotent():
    for n in range(1, 4):
        for A in partitions_of(n):
            P = minimal_projection(A)
            assert P * P == P


def test_projections_orthogonal():
    P = minimal_projection((2,))
    Q = minimal_projection((1, 1))
    assert (P * Q) == P.scale(0)
    assert P + Q == HeckeElement.identity(2)


def test_skein_unknot_and_trefoil():
    assert homfly(catalog("unknot")) == RationalQT(1)
    expected = q_pow(-2) * t_pow(-2) - t_pow(-4) + q_pow(2) * t_pow(-2)
    assert homfly(catalog("trefoil")) == RationalQT(expected)


def test_skein_invariant_under_conjugation():
    from lmov.braid_link import BraidWord, LinkPresentation
    a = LinkPresentation(BraidWord(3, (1, -2, 1, -2)))
    b = LinkPresentation(BraidWord(3, (-2, 1, -2, 1)))
    assert fundamental_invariant(a) == fundamental_invariant(b)
