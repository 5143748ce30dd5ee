import math
from fractions import Fraction as F

import pytest

from airyherm.exactnum import RationalPolynomial
from airyherm.hermite import (
    HermiteConvention,
    derived_heat_poly,
    derived_heat_poly_printed,
    gh_initial_condition,
    gh_pde_residual_exact,
    gould_hopper,
    gould_hopper_value,
    hermite_poly,
    hermite_value,
)

C, P, H = HermiteConvention.COMBINATORIAL, HermiteConvention.PROBABILISTS, HermiteConvention.PHYSICISTS


@pytest.mark.parametrize("conv,n,coeffs", [
    (P, 4, [3, 0, -6, 0, 1]),
    (H, 3, [0, -12, 0, 8]),
    (C, 4, [3, 0, 6, 0, 1]),
    (P, 0, [1]),
])
def test_hermite_tables(conv, n, coeffs):
    assert hermite_poly(conv, n) == RationalPolynomial(coeffs)


def test_hermite_value_matches_exact():
    assert hermite_value(H, 5, 0.3) == pytest.approx(float(hermite_poly(H, 5)(F(3, 10))), rel=1e-14)


@pytest.mark.parametrize("n,j,expected", [
    (3, 3, {(3, 0): 1, (0, 1): 6}),
    (2, 4, {(4, 0): 1, (2, 1): 12, (0, 2): 12}),
    (4, 4, {(4, 0): 1, (0, 1): 24}),
])
def test_gould_hopper_coefficients(n, j, expected):
    g = gould_hopper(n, j)
    for (i, k), c in expected.items():
        assert g.poly_in_x_t.coefficient(i, k) == c


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("j", [0, 1, 5, 13, 24])
def test_gould_hopper_solves_pde(n, j):
    assert gh_pde_residual_exact(n, j).is_zero
    assert gh_initial_condition(n, j) == RationalPolynomial.monomial(j)


def test_gould_hopper_value_spot():
    # H^(4)_4(-0.5, 0) = 4! * (-0.5)
    assert gould_hopper_value(4, 4, -0.5, 0.0) == -12.0


def test_gould_hopper_rejects_small_order():
    with pytest.raises(ValueError):
        gould_hopper(1, 3)


def test_derived_heat_poly_base_case():
    t, x = 0.5, 0.4
    assert derived_heat_poly(0, t, x) == pytest.approx(
        math.exp(-x * x / (2 * t)) / math.sqrt(2 * math.pi * t), rel=1e-15)


@pytest.mark.parametrize("n", range(6))
def test_printed_normalization_is_off_by_power_of_two(n):
    ratio = derived_heat_poly_printed(n, 1.3, 0.7) / derived_heat_poly(n, 1.3, 0.7)
    assert ratio == pytest.approx(2 ** (n / 2), rel=1e-12)


def test_derived_heat_poly_needs_positive_time():
    with pytest.raises(ValueError):
        derived_heat_poly(2, 0.0, 1.0)
