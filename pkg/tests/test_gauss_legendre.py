import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramquad.gauss_legendre import gauss_legendre_rule, legendre_value_and_derivative


class TestLegendreValueAndDerivative:
    def test_degree_zero_is_constant(self):
        assert legendre_value_and_derivative(0, 0.3) == (1.0, 0.0)

    def test_degree_two_at_origin(self):
        value, deriv = legendre_value_and_derivative(2, 0.0)
        assert value == pytest.approx(-0.5, abs=1e-16)
        assert deriv == pytest.approx(0.0, abs=1e-16)

    def test_endpoint_derivative_limit(self):
        # P_n(1) = 1 and P_n'(1) = n (n + 1) / 2; alternating signs at -1.
        value, deriv = legendre_value_and_derivative(3, 1.0)
        assert value == pytest.approx(1.0, abs=1e-15)
        assert deriv == pytest.approx(6.0, abs=1e-13)
        value, deriv = legendre_value_and_derivative(3, -1.0)
        assert value == pytest.approx(-1.0, abs=1e-15)
        assert deriv == pytest.approx(6.0, abs=1e-13)
        value, deriv = legendre_value_and_derivative(4, -1.0)
        assert value == pytest.approx(1.0, abs=1e-15)
        assert deriv == pytest.approx(-10.0, abs=1e-13)

    def test_array_input(self):
        x = np.linspace(-1, 1, 7)
        value, deriv = legendre_value_and_derivative(2, x)
        np.testing.assert_allclose(value, 0.5 * (3 * x**2 - 1), atol=1e-15)
        np.testing.assert_allclose(deriv, 3 * x, atol=1e-13)

    def test_scalar_input_gives_floats(self):
        value, deriv = legendre_value_and_derivative(5, 0.2)
        assert isinstance(value, float)
        assert isinstance(deriv, float)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            legendre_value_and_derivative(-1, 0.0)


class TestGaussLegendreRule:
    def test_midpoint_rule(self):
        rule = gauss_legendre_rule(1)
        np.testing.assert_allclose(rule.nodes, [0.0], atol=1e-15)
        np.testing.assert_allclose(rule.weights, [2.0], atol=1e-15)

    def test_two_point_rule(self):
        rule = gauss_legendre_rule(2)
        np.testing.assert_allclose(
            rule.nodes, [-0.5773502691896257, 0.5773502691896257], atol=1e-15
        )
        np.testing.assert_allclose(rule.weights, [1.0, 1.0], atol=1e-14)

    def test_three_point_rule(self):
        rule = gauss_legendre_rule(3)
        np.testing.assert_allclose(
            rule.nodes, [-0.7745966692414834, 0.0, 0.7745966692414834], atol=1e-15
        )
        np.testing.assert_allclose(
            rule.weights,
            [0.5555555555555556, 0.8888888888888888, 0.5555555555555556],
            atol=1e-14,
        )

    def test_invalid_order_rejected(self):
        with pytest.raises(ValueError):
            gauss_legendre_rule(0)

    def test_rule_invariants_up_to_200(self):
        for n in range(1, 201):
            rule = gauss_legendre_rule(n)
            assert np.all(rule.weights > 0.0)
            assert abs(rule.weights.sum() - 2.0) < 1e-12
            assert np.all(np.diff(rule.nodes) > 0.0)
            assert np.max(np.abs(rule.nodes + rule.nodes[::-1])) < 1e-14

    def test_monomial_exactness_up_to_50(self):
        for n in range(1, 51):
            rule = gauss_legendre_rule(n)
            for d in range(2 * n):
                moment = float(np.dot(rule.weights, rule.nodes**d))
                if d % 2 == 0:
                    assert abs(moment - 2.0 / (d + 1)) < 1e-12
                else:
                    assert abs(moment) < 1e-13

    @pytest.mark.parametrize("n", [250, 500, 1000])
    def test_newton_converges_for_large_orders(self, n):
        rule = gauss_legendre_rule(n)
        assert abs(rule.weights.sum() - 2.0) < 1e-12
        assert np.all(rule.weights > 0.0)
        assert np.max(np.abs(rule.nodes + rule.nodes[::-1])) < 1e-14

    @pytest.mark.parametrize("n", [5, 20, 75])
    def test_matches_numpy_leggauss(self, n):
        rule = gauss_legendre_rule(n)
        x_ref, w_ref = np.polynomial.legendre.leggauss(n)
        np.testing.assert_allclose(rule.nodes, x_ref, atol=1e-13)
        np.testing.assert_allclose(rule.weights, w_ref, atol=1e-13)

    @settings(max_examples=80, deadline=None)
    @given(
        n=st.integers(min_value=1, max_value=40),
        coefficients=st.lists(
            st.floats(min_value=-1.0, max_value=1.0), min_size=1, max_size=25
        ),
    )
    def test_exact_on_random_polynomials(self, n, coefficients):
        # Truncate so the polynomial degree stays within the exactness range.
        coefficients = coefficients[: 2 * n]
        rule = gauss_legendre_rule(n)
        values = np.polynomial.polynomial.polyval(rule.nodes, coefficients)
        estimate = float(np.dot(rule.weights, values))
        exact = sum(
            2.0 * c / (d + 1) for d, c in enumerate(coefficients) if d % 2 == 0
        )
        assert estimate == pytest.approx(exact, abs=1e-11)
