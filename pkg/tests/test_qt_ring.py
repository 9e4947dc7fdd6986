from fractions import Fraction

import pytest

from lmov.qt_ring import (ONE, LaurentQT, RationalQT, bracket, bracket_t, leading_q1, ord_p,
                          pole_order_q1, q_pow, t_pow, to_v)


def test_bracket_and_symmetry():
    b = bracket(1)
    assert b == q_pow(-1) - q_pow(1)
    assert b.invert_q() == -b
    assert (b * b).is_symmetric_q()


def test_laurent_arithmetic():
    x = q_pow(1) + t_pow(-1)
    assert (x * x - q_pow(2) - t_pow(-2)) == q_pow(1) * t_pow(-1) * 2
    assert (x - x).is_zero()


def test_rational_reduction():
    f = RationalQT(bracket(2) * bracket(1)).div_bracket(1, 1)
    assert f.reduced().is_polynomial()
    assert f.reduced().to_laurent() == bracket(2)


def test_pole_order():
    assert pole_order_q1(RationalQT(ONE).div_bracket(1, 2)) == -2
    assert pole_order_q1(RationalQT(bracket(3))) == 1


def test_to_v_on_brackets():
    # [1]^2 = v
    assert to_v(bracket(1) * bracket(1)).coeffs == {(1, 0): 1}
    # [2]^2 = v (4 + v) ... expanded: 4v + v^2
    assert to_v(bracket(2) * bracket(2)).coeffs == {(1, 0): 4, (2, 0): 1}


def test_json_round_trip():
    f = RationalQT(bracket_t(1) * Fraction(3, 7) + q_pow(3)).div_bracket(2, 1)
    g = RationalQT.from_json(f.to_json())
    assert g == f
    import json
    json.dumps(f.to_json())


def test_subs_power_and_specialize():
    f = q_pow(1) * t_pow(1)
    assert f.subs_power(3) == q_pow(3) * t_pow(3)
    # t = q^N
    assert t_pow(2).specialize_t(3) == q_pow(6)


def test_ord_p_and_leading():
    assert ord_p(Fraction(12), 2) == 2
    assert ord_p(LaurentQT.const(9) * q_pow(1) + LaurentQT.const(3), 3) == 1
    order, c = leading_q1(RationalQT(ONE).div_bracket(1, 2))
    assert order == -2


def test_division_only_by_scalars():
    assert RationalQT(q_pow(2)) / 2 == RationalQT(q_pow(2) * Fraction(1, 2))
    with pytest.raises(TypeError):
        RationalQT(ONE) / RationalQT(q_pow(1))
