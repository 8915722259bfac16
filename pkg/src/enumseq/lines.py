"""The numbers v_n of lines on a generic hypersurface of degree 2n-3 in P^n.

Six independent exact routes are provided; they must all agree.  By
convention v_0 = -1 and v_1 = 1 for every method.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .core.combinat import elementary_symmetric, stirling_first_row
from .core.poly import product_of_linears

METHODS = ("defn", "equivariant", "residue", "stirling", "dominici", "alternate")
CONVENTIONS = {0: -1, 1: 1}


@dataclass(frozen=True)
class VnRecord:
    n: int
    value: int
    method: str

    def to_json(self) -> dict:
        return {"method": self.method, "n": self.n, "value": str(self.value)}


class WeightVector(tuple):
    """Pairwise distinct rational weights w_0..w_n."""

    def __new__(cls, weights: Sequence):
        ws = tuple(Fraction(w) for w in weights)
        if len(set(ws)) != len(ws):
            raise ValueError("weights must be pairwise distinct")
        return super().__new__(cls, ws)

    @classmethod
    def default(cls, n: int) -> "WeightVector":
        return cls(range(n + 1))

    @classmethod
    def random(cls, n: int, rng: random.Random, spread: int = 1000) -> "WeightVector":
        return cls(rng.sample(range(-spread, spread), n + 1))


def _line_factors(D: int):
    # the factors (D - j) + j x, j = 0..D
    return ((D - j, j) for j in range(D + 1))


@lru_cache(maxsize=None)
def v_defn(n: int) -> int:
    """[x^{n-1}] (1-x) prod_{j=0}^{2n-3} (2n-3-j+jx), with a product truncated at x^{n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    cs = product_of_linears(_line_factors(2 * n - 3), top=n - 1)
    return cs[n - 1] - cs[n - 2]


def v_defn_full(n: int) -> int:
    """Same as :func:`v_defn` but without truncating the product (reference path)."""
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    cs = product_of_linears(_line_factors(2 * n - 3))
    return cs[n - 1] - cs[n - 2]


def v_alternate(n: int) -> int:
    """[x^n] (x-1) prod_{j=0}^{2n-3} (2n-3-j+jx)."""
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    cs = product_of_linears(_line_factors(2 * n - 3), top=n)
    return cs[n - 1] - cs[n]


def v_equivariant(n: int, w: Sequence | None = None) -> Fraction:
    """Fixed-point (localization) double sum over pairs i < j of torus weights."""
    if n in CONVENTIONS:
        return Fraction(CONVENTIONS[n])
    if n < 2:
        raise ValueError("n must be >= 0")
    w = WeightVector.default(n) if w is None else WeightVector(w)
    if len(w) != n + 1:
        raise ValueError(f"need {n + 1} weights, got {len(w)}")
    D = 2 * n - 3
    total = Fraction(0)
    for i in range(n + 1):
        wi = w[i]
        for j in range(i + 1, n + 1):
            wj = w[j]
            num = 1
            for a in range(D + 1):
                num *= a * wi + (D - a) * wj
            den = 1
            for k in range(n + 1):
                if k != i and k != j:
                    den *= (wi - w[k]) * (wj - w[k])
            if den == 0:
                raise ZeroDivisionError("vanishing denominator in the localization sum")
            total += Fraction(num) / den
    return total


def v_residue(n: int) -> int:
    """(-1)^n D^2 [u^{n-1}] prod_{i=1}^{D-1}(i - D u) / (1-u)^{n-1}."""
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    D = 2 * n - 3
    top = n - 1
    num = product_of_linears(((i, -D) for i in range(1, D)), top=top)
    # [u^k] (1-u)^{-(n-1)} = C(k + n - 2, k)
    s = sum(num[m] * comb(top - m + n - 2, top - m) for m in range(min(len(num), top + 1)))
    return (-1) ** n * D * D * s


def v_stirling(n: int) -> int:
    """Closed form through unsigned Stirling numbers of the first kind."""
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    D = 2 * n - 3
    row = stirling_first_row(D)
    total = 0
    for m in range(n):
        st = row[m] if m < len(row) else 0
        if st:
            total += (-1) ** (n - 1 - m) * comb(2 * n - 2 - m, n - 1) * D ** (m + 1) * st
    return total


def dominici_y(n: int) -> list:
    D = 2 * n - 3
    return [Fraction(i, D - i) for i in range(1, 2 * n - 3)]


def v_dominici(n: int) -> int:
    """(2n-3)^2 (2n-4)! (S_{n-2}(y) - S_{n-1}(y)) with y_i = i/(2n-3-i)."""
    if n in CONVENTIONS:
        return CONVENTIONS[n]
    if n == 2:
        return v_defn(2)
    D = 2 * n - 3
    S = elementary_symmetric(dominici_y(n), n - 1)
    value = D * D * factorial(2 * n - 4) * (S[n - 2] - S[n - 1])
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral Dominici value at n={n}")
    return value.numerator


def compute(n: int, method: str = "defn", weights: Sequence | None = None) -> int:
    if method == "defn":
        return v_defn(n)
    if method == "equivariant":
        value = v_equivariant(n, weights)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral localization sum at n={n}")
        return value.numerator
    if method == "residue":
        return v_residue(n)
    if method == "stirling":
        return v_stirling(n)
    if method == "dominici":
        return v_dominici(n)
    if method == "alternate":
        return v_alternate(n)
    raise ValueError(f"unknown method {method!r}")


def _record(args) -> VnRecord:
    n, method = args
    return VnRecord(n, compute(n, method), method)


def v_range(start: int, stop: int, method: str = "defn", workers: int = 1) -> list[VnRecord]:
    """Records for start <= n <= stop (inclusive), in index order.

    ``method="all"`` yields one record per method per index.  ``workers > 1``
    fans indices out to processes; output order does not depend on it.
    """
    if not 0 <= start <= stop:
        raise ValueError("need 0 <= start <= stop")
    methods = METHODS if method == "all" else (method,)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    jobs = [(n, m) for n in range(start, stop + 1) for m in methods]
    if workers <= 1:
        return [_record(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_record, jobs, chunksize=4))


def localization_identity_check(G: Sequence[Sequence], roots: Sequence) -> dict:
    """Check sum_{a,b} G(a,b)/(P'(a)P'(b)) == [x^n y^n] G for P = prod(x - root).

    ``G[r][s]`` is the coefficient of x^r y^s; G must be homogeneous of
    degree 2n where n + 1 = len(roots).
    """
    rts = [Fraction(r) for r in roots]
    if len(set(rts)) != len(rts):
        raise ValueError("roots must be distinct")
    n = len(rts) - 1
    terms = [(r, s, Fraction(c)) for r, row in enumerate(G) for s, c in enumerate(row) if c]
    for r, s, _ in terms:
        if r + s != 2 * n:
            raise ValueError(f"G is not homogeneous of degree {2 * n}")
    dP = []
    for i, a in enumerate(rts):
        d = Fraction(1)
        for k, b in enumerate(rts):
            if k != i:
                d *= a - b
        dP.append(d)
    total = Fraction(0)
    for a, da in zip(rts, dP):
        for b, db in zip(rts, dP):
            g = sum((c * a ** r * b ** s for r, s, c in terms), Fraction(0))
            total += g / (da * db)
    expected = Fraction(G[n][n]) if n < len(G) and n < len(G[n]) else Fraction(0)
    return {"expected": expected, "pass": total == expected, "sum": total}
