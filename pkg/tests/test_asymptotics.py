"""
Tests for characteristic polynomials and growth constants of transfer matrices.
"""

import math

import pytest
import sympy

from cubic_hc.exceptions import NoRealDominantRootError
from cubic_hc.transfer import (
    build_transfer_system,
    characteristic_polynomial,
    growth_constants,
    per_vertex_growth,
    real_roots,
    typed_count,
)

B6 = 4.493959207
A6 = 2.756982978


def test_characteristic_polynomial_width_5():
    assert characteristic_polynomial(build_transfer_system(5, 2).matrix) == (1, 0, -12)


def test_real_roots():
    roots = real_roots((1, 0, -12))
    assert len(roots) == 2
    assert roots[0] == pytest.approx(-math.sqrt(12), abs=1e-10)
    assert roots[1] == pytest.approx(math.sqrt(12), abs=1e-10)


def test_width_5_type_4_has_period_two():
    constants = growth_constants(5, 2)
    assert constants.char_poly == (1, 0, -12)
    assert constants.period == 2
    assert constants.dominant_root == pytest.approx(12, rel=1e-9)
    assert constants.prefactor_estimate == pytest.approx(20, rel=1e-6)
    assert constants.sample_k == 119


def test_width_5_type_2():
    constants = growth_constants(5, 1)
    assert constants.period == 1
    assert constants.dominant_root == pytest.approx(2, rel=1e-9)
    assert constants.prefactor_estimate == pytest.approx(5, rel=1e-6)


class TestWidth6:
    def test_cubic_factor(self):
        x = sympy.Symbol("x")
        coefficients = characteristic_polynomial(build_transfer_system(6, 2).matrix)
        char_poly = sympy.Poly(list(coefficients), x)
        _, remainder = sympy.div(char_poly, sympy.Poly(x**3 - 4 * x**2 - 4 * x + 8, x))
        assert remainder.is_zero

    def test_growth_constants(self):
        constants = growth_constants(6, 2)
        assert constants.period == 1
        assert constants.dominant_root == pytest.approx(B6, abs=1e-6)
        assert constants.prefactor_estimate == pytest.approx(A6, abs=1e-3)

    def test_estimate_tracks_exact_counts(self):
        constants = growth_constants(6, 2)
        for k, tolerance in [(5, 1e-2), (10, 1e-4)]:
            estimate = constants.prefactor_estimate * constants.dominant_root**k
            assert estimate == pytest.approx(typed_count(6, 2, k), rel=tolerance)


def test_per_vertex_growth():
    assert per_vertex_growth(5, 2) == pytest.approx(12 ** (1 / 20), rel=1e-9)
    assert per_vertex_growth(6, 2) == pytest.approx(B6 ** (1 / 12), rel=1e-6)
    assert per_vertex_growth(5, 2) < per_vertex_growth(6, 2)


def test_no_real_dominant_root_carries_modulus():
    error = NoRealDominantRootError(3.5)
    assert error.modulus == 3.5
    assert str(error).startswith("[NO_REAL_DOMINANT_ROOT]")
