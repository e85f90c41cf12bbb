"""
Tests for ln_gamma, the incomplete gamma functions, Ei and the G-C rule.
"""

import math

import pytest
from scipy import special

from analysis.specfun import (
    exp_ei_product,
    exp_integral_ei,
    gc_integrate_halfline,
    gc_rule,
    ln_gamma,
    reg_lower_gamma,
    reg_upper_gamma,
)
from analysis.specfun.quadrature import QuadratureRule
from simulator.errors import DomainError, QuadratureEvaluationError


@pytest.mark.parametrize("a", [1e-3, 0.5, 1.0, 7.5, 51.5, 1e4])
def test_ln_gamma_matches_scipy(a):
    assert ln_gamma(a) == pytest.approx(special.gammaln(a), rel=1e-12)


def test_ln_gamma_known_values():
    assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-12)


@pytest.mark.parametrize("a", [0.0, -1.0, math.inf, math.nan])
def test_ln_gamma_domain(a):
    with pytest.raises(DomainError):
        ln_gamma(a)


@pytest.mark.parametrize("a", [0.5, 1.0, 5.0, 51.6, 400.0])
@pytest.mark.parametrize("ratio", [0.01, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0])
def test_incomplete_gamma_matches_scipy(a, ratio):
    x = a * ratio
    assert reg_lower_gamma(a, x) == pytest.approx(special.gammainc(a, x), rel=1e-9, abs=1e-300)
    assert reg_upper_gamma(a, x) == pytest.approx(special.gammaincc(a, x), rel=1e-9, abs=1e-300)


def test_incomplete_gamma_complementary():
    for a, x in [(2.0, 0.3), (30.0, 28.0), (30.0, 45.0)]:
        assert reg_lower_gamma(a, x) + reg_upper_gamma(a, x) == pytest.approx(1.0, abs=1e-13)


def test_incomplete_gamma_edges():
    assert reg_lower_gamma(3.0, 0.0) == 0.0
    assert reg_upper_gamma(3.0, 0.0) == 1.0
    assert reg_lower_gamma(3.0, math.inf) == 1.0
    assert reg_lower_gamma(1.0, 1.0) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-13)


def test_upper_gamma_far_tail_has_no_cancellation():
    # Q(1, 50) = e^-50, far below double-precision resolution of 1 - P
    assert reg_upper_gamma(1.0, 50.0) == pytest.approx(math.exp(-50.0), rel=1e-10)


@pytest.mark.parametrize("a, x", [(0.0, 1.0), (-2.0, 1.0), (1.0, -0.5), (1.0, math.nan)])
def test_incomplete_gamma_domain(a, x):
    with pytest.raises(DomainError):
        reg_lower_gamma(a, x)
    with pytest.raises(DomainError):
        reg_upper_gamma(a, x)


@pytest.mark.parametrize("x", [-700.0, -50.0, -2.5, -1.0, -1e-6, 1e-6, 0.5, 1.0, 10.0, 39.0, 41.0, 200.0])
def test_ei_matches_scipy(x):
    assert exp_integral_ei(x) == pytest.approx(special.expi(x), rel=1e-10)


def test_ei_edges():
    assert exp_integral_ei(-math.inf) == 0.0
    assert exp_integral_ei(800.0) == math.inf
    with pytest.raises(DomainError):
        exp_integral_ei(0.0)


@pytest.mark.parametrize("t", [1e-8, 1e-3, 0.5, 1.0, 1.5, 20.0, 600.0])
def test_exp_ei_product_matches_scipy(t):
    expected = -math.exp(t) * special.exp1(t)
    assert exp_ei_product(t) == pytest.approx(expected, rel=1e-10)


def test_exp_ei_product_extreme_arguments():
    # -1/t asymptote, where e^t alone would overflow
    assert exp_ei_product(1e300) == pytest.approx(-1e-300, rel=1e-12)
    assert exp_ei_product(1e-12) == pytest.approx(math.log(1e-12) + 0.5772156649015329, rel=1e-9)


@pytest.mark.parametrize("t", [0.0, -1.0, math.inf])
def test_exp_ei_product_domain(t):
    with pytest.raises(DomainError):
        exp_ei_product(t)


def test_gc_rule_structure():
    rule = gc_rule(20)
    assert isinstance(rule, QuadratureRule)
    assert rule.order == 20
    assert len(rule.nodes) == len(rule.mapped_nodes) == len(rule.weights) == 20
    assert all(0.0 < x < math.pi / 2 for x in rule.mapped_nodes)
    assert gc_rule(20) is rule


@pytest.mark.parametrize("order", [0, -3, 2.5, True])
def test_gc_rule_rejects_bad_order(order):
    with pytest.raises(DomainError):
        gc_rule(order)


def test_gc_integrates_cauchy_density():
    # f(tan y) sec^2 y is constant, so only the Chebyshev weights contribute
    value = gc_integrate_halfline(lambda x: 1.0 / (1.0 + x * x), gc_rule(20))
    assert value == pytest.approx(math.pi / 2.0, rel=2.5e-3)


def test_gc_integrates_exponential():
    assert gc_integrate_halfline(lambda x: math.exp(-x), gc_rule(20)) == pytest.approx(1.0, abs=1e-3)


def test_gc_integrates_inverse_square():
    # Slow algebraic decay: about 1.6e-3 error at M=20
    value = gc_integrate_halfline(lambda x: 1.0 / (1.0 + x) ** 2, gc_rule(20))
    assert value == pytest.approx(1.0, abs=2e-3)
    assert gc_integrate_halfline(lambda x: 1.0 / (1.0 + x) ** 2, gc_rule(40)) == pytest.approx(1.0, abs=5e-4)


@pytest.mark.parametrize("integrand", [lambda x: math.exp(-x), lambda x: 1.0 / (1.0 + x) ** 2])
def test_gc_error_shrinks_with_order(integrand):
    coarse = abs(gc_integrate_halfline(integrand, gc_rule(10)) - 1.0)
    fine = abs(gc_integrate_halfline(integrand, gc_rule(40)) - 1.0)
    assert fine < coarse


def test_gc_zero_integrand():
    assert gc_integrate_halfline(lambda x: 0.0, gc_rule(20)) == 0.0


def test_gc_rule_checks_order_on_cache_hits():
    gc_rule(1)
    with pytest.raises(DomainError):
        gc_rule(True)
    assert gc_rule(1.0) is gc_rule(1)


def test_gc_reports_bad_node():
    def integrand(x):
        return math.nan if x > 1.0 else 1.0

    with pytest.raises(QuadratureEvaluationError) as info:
        gc_integrate_halfline(integrand, gc_rule(8))
    assert info.value.node_index >= 0
    assert isinstance(info.value, ArithmeticError)
