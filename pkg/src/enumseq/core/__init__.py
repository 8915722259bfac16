"""Exact and high-precision arithmetic kernels."""
from .bernoulli import bernoulli, faulhaber, faulhaber_odd_sum
from .bignum import (BigDecimal, SymbolicConstant, decimal_exp, decimal_log, decimal_pi,
                     decimal_sqrt, log_constant)
from .combinat import catalan, elementary_symmetric, stirling_first_row
from .poly import DensePoly, poly_coeff, poly_mul, product_of_linears
from .recognize import recognize_rational, recognize_symbolic
from .series import TruncatedSeries, series_exp, series_log, series_reversion

__all__ = [
    "BigDecimal", "DensePoly", "SymbolicConstant", "TruncatedSeries",
    "bernoulli", "catalan", "decimal_exp", "decimal_log", "decimal_pi", "decimal_sqrt",
    "elementary_symmetric", "faulhaber", "faulhaber_odd_sum", "log_constant",
    "poly_coeff", "poly_mul", "product_of_linears", "recognize_rational",
    "recognize_symbolic", "series_exp", "series_log", "series_reversion", "stirling_first_row",
]
