"""Bernoulli numbers and odd-power Faulhaber sums."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import DensePoly


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, which gives B_1 = -1/2
    B = [Fraction(1)]
    for k in range(1, m + 1):
        s = sum((comb(k + 1, j) * B[j] for j in range(k)), Fraction(0))
        B.append(-s / (k + 1))
    return tuple(B)


def bernoulli(m: int) -> Fraction:
    """B_m with the convention B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return _bernoulli_table(m)[m]


def bernoulli_poly(k: int) -> DensePoly:
    """B_k(x) = sum_j C(k, j) B_j x^{k-j}."""
    return DensePoly([comb(k, k - i) * bernoulli(k - i) for i in range(k + 1)], "QQ")


def faulhaber(m: int) -> DensePoly:
    """F with F(N) = 1^m + 2^m + ... + N^m for all N >= 0 (m >= 1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    Bk = bernoulli_poly(m + 1)
    shifted = Bk.compose(DensePoly([1, 1], "QQ"))  # B_{m+1}(N+1)
    return (shifted - DensePoly([bernoulli(m + 1)], "QQ")).scale(Fraction(1, m + 1))


@lru_cache(maxsize=None)
def faulhaber_odd_sum(m: int) -> DensePoly:
    """S with S(D) = sum of r^m over odd r in 1..D, valid for every odd D.

    Full sum to D minus 2^m times the full sum to (D-1)/2.
    """
    if m % 2 or m < 2:
        raise ValueError("faulhaber_odd_sum needs an even exponent m >= 2")
    F = faulhaber(m)
    half = F.compose(DensePoly([Fraction(-1, 2), Fraction(1, 2)], "QQ"))
    return F - half.scale(2 ** m)
