import random

import pytest

from lmov.numtheory import (check_binomial_congruence, check_fermat_valuation,
                            check_gcd_divisibility, check_multinomial_congruence,
                            check_power_congruence, fermat_valuation, multinomial,
                            random_laurent, run_all)
from lmov.qt_ring import LaurentQT, q_pow


def test_multinomial():
    assert multinomial((2, 1, 1)) == 12


def test_single_cases():
    assert check_binomial_congruence(3, 2, 4, 2)
    assert check_multinomial_congruence(2, 1, (1, 2, 3))
    assert check_gcd_divisibility(6, (2, 4))
    assert check_power_congruence(7, 5, 2)


def test_argument_validation():
    with pytest.raises(ValueError):
        check_binomial_congruence(2, 1, 2, 3)
    with pytest.raises(ValueError):
        check_gcd_divisibility(5, (2, 2))


def test_fermat_on_monomial_vanishes():
    # q^{1/2} to the p-th power equals its Frobenius image
    assert fermat_valuation(q_pow(1), 3, 1) is None


def test_fermat_random():
    rng = random.Random(11)
    for _ in range(5):
        f = random_laurent(rng)
        assert check_fermat_valuation(f, 2, 1)


def test_full_sweep():
    assert all(not bad for bad in run_all().values())
