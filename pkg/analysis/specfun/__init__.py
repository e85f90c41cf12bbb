"""
Special functions and half-line Gauss-Chebyshev quadrature.
"""

from analysis.specfun.gamma import ln_gamma, reg_lower_gamma, reg_upper_gamma
from analysis.specfun.expint import exp_integral_ei, exp_ei_product
from analysis.specfun.quadrature import QuadratureRule, gc_rule, gc_integrate_halfline

__all__ = [
    "ln_gamma",
    "reg_lower_gamma",
    "reg_upper_gamma",
    "exp_integral_ei",
    "exp_ei_product",
    "QuadratureRule",
    "gc_rule",
    "gc_integrate_halfline",
]
