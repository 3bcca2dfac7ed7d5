import math
from fractions import Fraction

import pytest

from evenzeta.zeta import (
    PiMultiple,
    bernoulli_classical,
    bernoulli_even,
    elementary_zeta,
    newton_partial_closed,
    newton_partial_sum,
    zeta_even_rational,
)


def zeta_from_classical(k):
    # independent route: invert the Bernoulli relation using only the oracle
    sign = 1 if k % 2 else -1
    coeff = sign * Fraction(2 ** (2 * k)) * bernoulli_classical(2 * k) / (
        2 * math.factorial(2 * k)
    )
    return PiMultiple(coeff, 2 * k)


# -- the classical oracle stands on its own ---------------------------------


def test_classical_oracle_seed_and_landmark():
    assert bernoulli_classical(0) == 1
    assert bernoulli_classical(3) == 0
    assert bernoulli_classical(12) == Fraction(-691, 2730)


def test_classical_oracle_odd_vanishing():
    for n in range(3, 31, 2):
        assert bernoulli_classical(n) == 0


def test_classical_oracle_recursion_identity():
    for n in range(1, 20):
        total = sum(
            math.comb(n + 1, j) * bernoulli_classical(j) for j in range(n + 1)
        )
        assert total == 0


# -- pi multiples ------------------------------------------------------------


def test_pi_multiple_arithmetic():
    a = PiMultiple(Fraction(1, 6), 2)
    b = PiMultiple(Fraction(1, 3), 2)
    assert a + b == PiMultiple(Fraction(1, 2), 2)
    assert a * b == PiMultiple(Fraction(1, 18), 4)
    assert 3 * a == PiMultiple(Fraction(1, 2), 2)
    assert a - a == PiMultiple(0, 0)


def test_pi_multiple_power_mismatch():
    with pytest.raises(ValueError):
        PiMultiple(1, 2) + PiMultiple(1, 4)
    with pytest.raises(ValueError):
        PiMultiple(1, 3)
    with pytest.raises(ValueError):
        PiMultiple(1, -2)


def test_pi_multiple_zero_is_neutral():
    zero = PiMultiple(0, 6)
    assert zero.power == 0
    assert zero + PiMultiple(1, 4) == PiMultiple(1, 4)
    assert PiMultiple(1, 4) - PiMultiple(1, 4) + PiMultiple(2, 8) == PiMultiple(2, 8)


def test_pi_multiple_text():
    assert str(PiMultiple(Fraction(1, 945), 6)) == "1/945 * pi^6"
    assert str(PiMultiple(Fraction(7, 2), 0)) == "7/2"
    assert abs(PiMultiple(Fraction(1, 6), 2).approx() - 1.6449340668) < 1e-9


# -- zeta values -------------------------------------------------------------


def test_elementary_zeta_values():
    assert elementary_zeta(0) == PiMultiple(1, 0)
    assert elementary_zeta(1) == PiMultiple(Fraction(1, 6), 2)
    assert elementary_zeta(3) == PiMultiple(Fraction(1, 5040), 6)


@pytest.mark.parametrize(
    "k,coeff",
    [(1, Fraction(1, 6)), (2, Fraction(1, 90)), (3, Fraction(1, 945)), (4, Fraction(1, 9450))],
)
def test_zeta_even_rational_small_values(k, coeff):
    value = zeta_even_rational(k)
    assert value == PiMultiple(coeff, 2 * k)
    assert value == zeta_from_classical(k)


def test_zeta_even_rational_sign_pattern():
    for k in range(1, 31):
        assert zeta_even_rational(k).coeff > 0


# -- bernoulli numbers -------------------------------------------------------


@pytest.mark.parametrize(
    "k,expected", [(1, Fraction(1, 6)), (2, Fraction(-1, 30)), (5, Fraction(5, 66))]
)
def test_bernoulli_even_small_values(k, expected):
    assert bernoulli_even(k) == expected


def test_bernoulli_even_matches_oracle():
    for k in range(1, 31):
        b = bernoulli_even(k)
        assert b == bernoulli_classical(2 * k)
        assert (b > 0) == (k % 2 == 1)


# -- partial sums ------------------------------------------------------------


def test_partial_sum_vanishes_at_k1():
    assert newton_partial_sum(2, 1) == PiMultiple(0, 0)
    assert newton_partial_closed(2, 1) == PiMultiple(0, 0)


def test_partial_sum_n2_closed_formula():
    for k in range(1, 11):
        expected = PiMultiple(
            -Fraction(2 * k * (2 * k - 2), 6 * math.factorial(2 * k + 1)), 2 * k
        )
        assert newton_partial_sum(2, k) == expected
        assert newton_partial_closed(2, k) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_partial_sum_routes_agree(n):
    for k in range(max(1, n - 1), 11):
        assert newton_partial_sum(n, k) == newton_partial_closed(n, k)


@pytest.mark.parametrize("n", range(2, 9))
def test_partial_sum_closes_to_zeta(n):
    sign = 1 if n % 2 else -1
    assert sign * newton_partial_sum(n, n) == zeta_even_rational(n)


def test_partial_sum_domain_errors():
    with pytest.raises(ValueError):
        newton_partial_sum(5, 2)  # k < n-1 underflows the indices
    with pytest.raises(ValueError):
        newton_partial_sum(1, 5)
    with pytest.raises(ValueError):
        newton_partial_closed(2, 0)
