import itertools
from fractions import Fraction

import pytest

from evenzeta.polynomials import ONE, Polynomial
from evenzeta.recursion import (
    IndexSet,
    apply_step,
    basis_coefficients,
    expand_basis,
    expand_step,
    factor_product,
    first_indices,
    numerator_polynomial,
    shifted_product_identity,
    translated_polynomial,
    zeta_numerator,
)

# the published opening of the integer sequence
SEQUENCE = [
    1,
    1,
    10,
    945,
    992250,
    13575766050,
    2787683360962500,
    9732664704199465153125,
]


def test_index_set_basics():
    s = IndexSet([3, 1])
    assert s.indices == (1, 3)
    assert s.shifted().indices == (2, 4)
    assert s.values() == (3, 7)
    assert s.product() == 21
    assert IndexSet().product() == 1
    assert IndexSet.from_mask(s.mask) == s
    with pytest.raises(ValueError):
        IndexSet([0, 1])
    with pytest.raises(ValueError):
        IndexSet([2, 2])


def test_first_indices():
    assert first_indices(0) == IndexSet()
    assert first_indices(1).values() == (3,)
    assert first_indices(4).values() == (3, 5, 7, 9)


def test_factor_product_examples():
    assert factor_product(IndexSet(), 5) == ONE
    assert factor_product(IndexSet([1]), 2) == Polynomial((-1, 2))
    assert factor_product(IndexSet([1, 2]), 3) == Polynomial((3, -8, 4))


def test_apply_step_base_case():
    assert apply_step(ONE, 1) == ONE


def test_apply_step_reproduces_published_translations():
    p3 = apply_step(ONE, 2)
    assert p3.compose_affine(Fraction(1, 2), Fraction(3, 2)) == Polynomial((7, 1))
    p4 = apply_step(p3, 3)
    assert p4.compose_affine(Fraction(1, 2), Fraction(5, 2)) == Polynomial((465, 130, 10))


def test_numerator_polynomial_values():
    assert numerator_polynomial(1) == ONE
    assert numerator_polynomial(2) == ONE
    assert translated_polynomial(5, half_scale=True) == Polynomial(
        (360045, 142695, 19845, 945)
    )
    # leading coefficient relation at k = 6
    assert numerator_polynomial(6).coeffs[-1] == 992250 * 2**4


def test_published_sequence():
    for k, expected in enumerate(SEQUENCE, start=1):
        assert zeta_numerator(k) == expected


def test_degree_and_leading_coefficient():
    for k in range(2, 13):
        poly = numerator_polynomial(k)
        assert poly.degree == k - 2
        assert poly.coeffs[-1] == zeta_numerator(k - 1) * 2 ** (k - 2)


def test_translated_positivity():
    assert translated_polynomial(2) == ONE
    assert translated_polynomial(3) == Polynomial((7, 2))
    assert translated_polynomial(3, half_scale=True) == Polynomial((7, 1))
    for k in range(1, 16):
        assert all(c > 0 for c in translated_polynomial(k).coeffs)


def test_expand_step_first_term_is_shift():
    for k in range(2, 7):
        for s in _subsets(k):
            terms = expand_step(s, k)
            assert len(terms) == k - len(s)
            _, low0 = terms[0]
            assert low0 == s.shifted()


def _subsets(k):
    base = range(1, k - 1)
    for r in range(len(base) + 1):
        for combo in itertools.combinations(base, r):
            yield IndexSet(combo)


@pytest.mark.parametrize("k", range(2, 11))
def test_expand_step_matches_operator(k):
    # polynomial-identity oracle: assembled expansion == direct operator action
    for s in _subsets(k):
        assembled = Polynomial()
        for weight, low in expand_step(s, k):
            assembled = assembled + weight * factor_product(low, k)
        assert assembled == apply_step(factor_product(s, k - 1), k)


def test_expand_step_domain_error():
    with pytest.raises(ValueError):
        expand_step(IndexSet([3]), 4)  # positions must lie in 1..2


def test_basis_coefficients_seed():
    assert basis_coefficients(2) == (Fraction(1),)


@pytest.mark.parametrize("k", [3, 4, 7, 10])
def test_basis_expansion_matches_recursion(k):
    coeffs = basis_coefficients(k)
    assert len(coeffs) == k - 1
    assert expand_basis(coeffs, k) == numerator_polynomial(k)


def test_basis_coefficients_observed_integrality():
    # observation, not a library guarantee: the coefficients come out as
    # positive integers throughout the tested range
    for k in range(2, 13):
        for c in basis_coefficients(k):
            assert c.denominator == 1 and c > 0


@pytest.mark.parametrize("n", range(0, 9))
def test_shifted_product_identity(n):
    assert shifted_product_identity(n)


def test_bounds():
    with pytest.raises(ValueError):
        numerator_polynomial(0)
    with pytest.raises(ValueError):
        basis_coefficients(1)
    with pytest.raises(ValueError):
        first_indices(-1)
