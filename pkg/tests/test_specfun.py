import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from susyrad.errors import ConvergenceError, DomainError
from susyrad.specfun import (
    Quadrature,
    SonineLaguerre,
    eval_sonine_laguerre,
    eval_sonine_laguerre_derivative,
    gamma_ratio,
    inner_product,
    integrate_half_line,
    sonine_laguerre_direct_sum,
)

ORDER_GRID = (-0.5, 0.0, 0.5, 1.0, 2.7)
POINT_GRID = (0.01, 1.0, 10.0, 50.0)

# frozen from the exact rational evaluation of the defining sum
DIRECT_SUM_FROZEN = {
    (15, 2.7, 50.0): 1753139749.253287,
    (15, -0.5, 50.0): -10696862058.289246,
    (12, 1.0, 10.0): 19.425097536208646,
    (8, 0.5, 0.01): 3.1628972211501742,
    (15, 2.7, 10.0): 0.7598636925876021,
    (5, -0.5, 1.0): -0.06692708333333333,
}


class TestSonineLaguerre:
    def test_zero_degree_is_one(self):
        assert eval_sonine_laguerre(SonineLaguerre(0, 0.5), 3.7) == 1.0

    def test_degree_one_closed_form(self):
        assert eval_sonine_laguerre(SonineLaguerre(1, 2.0), 1.0) == pytest.approx(2.0, abs=1e-15)

    def test_degree_two_closed_form(self):
        # 1 - 2x + x^2/2 at x = 2
        assert eval_sonine_laguerre(SonineLaguerre(2, 0.0), 2.0) == pytest.approx(-1.0, abs=1e-14)

    @pytest.mark.parametrize("degree", [-1, -5])
    def test_negative_degree_rejected(self, degree):
        with pytest.raises(DomainError):
            SonineLaguerre(degree, 0.0)

    @pytest.mark.parametrize("order", [-1.0, -2.5])
    def test_order_at_most_minus_one_rejected(self, order):
        with pytest.raises(DomainError):
            SonineLaguerre(3, order)

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            eval_sonine_laguerre(SonineLaguerre(2, 0.0), -0.1)

    def test_non_finite_argument_rejected(self):
        with pytest.raises(DomainError):
            eval_sonine_laguerre(SonineLaguerre(2, 0.0), math.nan)

    @pytest.mark.parametrize("degree", range(16))
    @pytest.mark.parametrize("order", ORDER_GRID)
    @pytest.mark.parametrize("x", POINT_GRID)
    def test_recurrence_matches_direct_sum(self, degree, order, x):
        poly = SonineLaguerre(degree, order)
        reference = sonine_laguerre_direct_sum(poly, x)
        value = eval_sonine_laguerre(poly, x)
        assert value == pytest.approx(reference, rel=1e-10, abs=1e-10)

    @pytest.mark.parametrize(("key", "expected"), sorted(DIRECT_SUM_FROZEN.items()))
    def test_direct_sum_frozen_values(self, key, expected):
        degree, order, x = key
        value = sonine_laguerre_direct_sum(SonineLaguerre(degree, order), x)
        assert value == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("degree", [0, 1, 4, 9, 15])
    @pytest.mark.parametrize("order", ORDER_GRID)
    @pytest.mark.parametrize("x", POINT_GRID)
    def test_against_scipy(self, degree, order, x):
        value = eval_sonine_laguerre(SonineLaguerre(degree, order), x)
        assert value == pytest.approx(float(eval_genlaguerre(degree, order, x)), rel=1e-12, abs=1e-12)

    def test_value_at_zero_is_binomial(self):
        # L_n(0) = Gamma(n+a+1) / (Gamma(a+1) n!)
        poly = SonineLaguerre(6, 1.3)
        expected = math.gamma(8.3) / (math.gamma(2.3) * math.factorial(6))
        assert eval_sonine_laguerre(poly, 0.0) == pytest.approx(expected, rel=1e-14)
        assert sonine_laguerre_direct_sum(poly, 0.0) == pytest.approx(expected, rel=1e-14)

    def test_array_evaluation_matches_scalar(self):
        poly = SonineLaguerre(7, -0.5)
        xs = np.linspace(0.0, 30.0, 11)
        vector = eval_sonine_laguerre(poly, xs)
        assert vector.shape == xs.shape
        for x, v in zip(xs, vector):
            assert v == eval_sonine_laguerre(poly, float(x))

    def test_scalar_in_scalar_out(self):
        value = eval_sonine_laguerre(SonineLaguerre(3, 0.5), 2.0)
        assert isinstance(value, float)


class TestDerivative:
    def test_constant_polynomial(self):
        assert eval_sonine_laguerre_derivative(SonineLaguerre(0, 1.2), 5.0) == 0.0

    def test_degree_one(self):
        assert eval_sonine_laguerre_derivative(SonineLaguerre(1, 0.0), 3.0) == pytest.approx(-1.0)

    def test_degree_two_at_root_of_shifted(self):
        # d/dx L_2 = -L_1^{(1)}; L_1^{(1)}(2) = 2 - 2 = 0
        assert eval_sonine_laguerre_derivative(SonineLaguerre(2, 0.0), 2.0) == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("degree", [1, 2, 5, 9, 15])
    @pytest.mark.parametrize("order", ORDER_GRID)
    @pytest.mark.parametrize("x", [0.1, 0.9, 7.3, 50.0])
    def test_against_finite_differences(self, degree, order, x):
        poly = SonineLaguerre(degree, order)
        step = 1e-6 * max(1.0, x)
        coarse = (
            eval_sonine_laguerre(poly, x + step) - eval_sonine_laguerre(poly, x - step)
        ) / (2.0 * step)
        fine = (
            eval_sonine_laguerre(poly, x + step / 2.0)
            - eval_sonine_laguerre(poly, x - step / 2.0)
        ) / step
        richardson = (4.0 * fine - coarse) / 3.0
        exact = eval_sonine_laguerre_derivative(poly, x)
        assert exact == pytest.approx(richardson, abs=1e-7 * max(1.0, abs(exact)))

    def test_identity_against_shifted_polynomial(self):
        poly = SonineLaguerre(6, 0.5)
        shifted = SonineLaguerre(5, 1.5)
        for x in POINT_GRID:
            assert eval_sonine_laguerre_derivative(poly, x) == pytest.approx(
                -eval_sonine_laguerre(shifted, x), rel=1e-13, abs=1e-13
            )


class TestGammaRatio:
    def test_integer_ratio(self):
        assert gamma_ratio(5.0, 3.0) == pytest.approx(12.0, rel=1e-14)

    def test_half_integer_ratio(self):
        # Gamma(5/2)/Gamma(1/2) = 3/4
        assert gamma_ratio(2.5, 0.5) == pytest.approx(0.75, rel=1e-14)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            gamma_ratio(-1.0, 2.0)
        with pytest.raises(DomainError):
            gamma_ratio(2.0, 0.0)


class TestQuadrature:
    def test_validation(self):
        with pytest.raises(DomainError):
            Quadrature(scheme="simpson")
        with pytest.raises(DomainError):
            Quadrature(node_count=1)
        with pytest.raises(DomainError):
            Quadrature(target_rel_tol=0.0)

    def test_gamma_integral(self):
        # int t^2 e^{-2t} dt = 1/4
        f = lambda t: t * np.exp(-t)
        result = integrate_half_line(lambda t: f(t) * f(t), Quadrature())
        assert result.converged
        assert result.value == pytest.approx(0.25, rel=1e-12)

    def test_zero_integrand(self):
        value = inner_product(lambda t: np.exp(-t), lambda t: 0.0 * t, Quadrature())
        assert value == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("power", [-0.3, 0.2, 2.3])
    def test_singular_endpoint_gamma(self, power):
        # int t^a e^{-t} dt = Gamma(a+1), integrable endpoint singularity at 0;
        # state inner products only ever see powers > 0
        result = integrate_half_line(lambda t: t**power * np.exp(-t), Quadrature())
        assert result.converged
        assert result.value == pytest.approx(math.gamma(power + 1.0), rel=1e-9)

    def test_hard_endpoint_singularity_raises_rather_than_lies(self):
        with pytest.raises(ConvergenceError):
            integrate_half_line(lambda t: t**-0.5 * np.exp(-t), Quadrature())

    def test_slow_decay_scale(self):
        # decay scale 8: int e^{-t/8} dt = 8
        result = integrate_half_line(lambda t: np.exp(-t / 8.0), Quadrature())
        assert result.value == pytest.approx(8.0, rel=1e-10)

    def test_gaussian_weight(self):
        result = integrate_half_line(lambda t: t * t * np.exp(-t * t), Quadrature())
        assert result.value == pytest.approx(math.sqrt(math.pi) / 4.0, rel=1e-10)

    def test_fast_path_scheme(self):
        quad = Quadrature(scheme="generalized-half-line", node_count=48)
        result = integrate_half_line(lambda t: t * t * np.exp(-2.0 * t), Quadrature())
        fast = integrate_half_line(lambda t: t * t * np.exp(-2.0 * t), quad)
        assert fast.value == pytest.approx(result.value, rel=1e-8)

    def test_non_convergence_raises_with_estimates(self):
        quad = Quadrature(target_rel_tol=1e-13)
        with pytest.raises(ConvergenceError) as info:
            integrate_half_line(lambda t: np.cos(3000.0 * t) * np.exp(-t / 30.0), quad)
        assert len(info.value.estimates) == 2

    def test_inner_product_symmetry(self):
        f = lambda t: t * np.exp(-t / 2.0)
        g = lambda t: (1.0 - t) * np.exp(-t / 2.0)
        quad = Quadrature()
        assert inner_product(f, g, quad) == pytest.approx(inner_product(g, f, quad), rel=1e-12)
