"""Recognising decimals as rationals or as rational combinations of logs."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

import mpmath

from .bignum import BigDecimal, SymbolicConstant, log_constant

MAX_NUMERATOR = 1024


def _convergents(x: Fraction):
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = x.numerator // x.denominator
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        yield Fraction(p1, q1)
        frac = x - a
        if frac == 0:
            return
        x = 1 / frac


def recognize_rational(x: BigDecimal, max_denominator: int) -> Optional[Fraction]:
    """Smallest-denominator continued-fraction convergent within 10^-(P-5) of x.

    A decimal that is itself a fraction with small enough denominator is
    returned as that fraction; the tolerance only matters for inexact input.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    exact = x.to_fraction()
    if exact.denominator <= max_denominator:
        return exact
    tol = Fraction(1, 10 ** max(x.prec - 5, 0))
    for c in _convergents(exact):
        if c.denominator > max_denominator:
            return None
        if abs(exact - c) < tol:
            return c
    return None


MIN_SYMBOLIC_DIGITS = 20


def recognize_symbolic(x: BigDecimal, max_coeff_denominator: int = 64) -> Optional[SymbolicConstant]:
    """Find x = u + a log2 + b log3 + c log(pi) with small rational u, a, b, c.

    Candidate relations come from PSLQ on [x, 1, log2, log3, log pi]; a
    candidate is accepted only if every coefficient has denominator at most
    ``max_coeff_denominator``, numerator at most 1024 in absolute value, and
    reproduces x to within 10^-(P-8).
    """
    P = x.prec
    if P < MIN_SYMBOLIC_DIGITS:
        raise ValueError(f"recognize_symbolic needs at least {MIN_SYMBOLIC_DIGITS} digits")
    with mpmath.workdps(P):
        basis = [mpmath.mpf(str(x.value)), mpmath.mpf(1)] + [
            mpmath.mpf(str(log_constant(name, P).value)) for name in ("log2", "log3", "logpi")
        ]
        rel = mpmath.pslq(basis, tol=mpmath.mpf(10) ** (8 - P),
                          maxcoeff=MAX_NUMERATOR * max_coeff_denominator, maxsteps=20000)
    if rel is None or rel[0] == 0:
        return None
    coeffs = [Fraction(-r, rel[0]) for r in rel[1:]]
    if any(c.denominator > max_coeff_denominator or abs(c.numerator) > MAX_NUMERATOR for c in coeffs):
        return None
    cand = SymbolicConstant(*coeffs)
    tol = Fraction(1, 10 ** (P - 8))
    if abs(cand.evaluate(P + 10).to_fraction() - x.to_fraction()) >= tol:
        return None
    return cand

