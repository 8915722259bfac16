"""Small combinatorial kernels: symmetric functions, Stirling rows, Catalan."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .poly import product_of_linears


def elementary_symmetric(values: Sequence, up_to: int) -> list:
    """[S_0, ..., S_k] of ``values`` via the one-pass product DP."""
    if up_to > len(values):
        raise ValueError("up_to exceeds the number of values")
    S = [Fraction(1)] + [Fraction(0)] * up_to
    for v in values:
        for k in range(up_to, 0, -1):
            S[k] += v * S[k - 1]
    return S


def stirling_first_row(D: int) -> list:
    """Unsigned Stirling numbers [D over m], m = 0..D: coefficients of z(z+1)...(z+D-1)."""
    if D == 0:
        return [1]
    return product_of_linears((j, 1) for j in range(D))


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)
