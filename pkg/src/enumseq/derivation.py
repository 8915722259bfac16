"""Exact asymptotic expansion of v_n from the saddle-point integral.

Pipeline: log phi_D(t) as a Laurent table in D, the substitution t = x/sqrt(D),
exponentiation of everything beyond the Gaussian part e^{-x^2/3}, term-wise
Gaussian integration, and finally re-expansion in 1/n in three normalizations.
Everything stays in exact rationals; sqrt(3 pi) and pi are tracked by hand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core.bernoulli import bernoulli, faulhaber_odd_sum
from .core.bignum import BigDecimal, SymbolicConstant, _ctx
from .core.poly import DensePoly
from .core.series import TruncatedSeries, series_exp, series_log

FORMS = ("D", "n", "2n", "log")


# -- types ----------------------------------------------------------------------

@dataclass(frozen=True)
class GaussWeightedPoly:
    """poly(y) * e^{-x^2/3} with y = x^2."""

    poly: DensePoly

    def integrate(self) -> Fraction:
        """Integral over the real line, as a multiple of sqrt(3 pi)."""
        return sum((c * gaussian_moment(k) for k, c in enumerate(self.poly.coeffs)), Fraction(0))

    def in_x(self) -> dict:
        """{power of x: coefficient}."""
        return {2 * k: c for k, c in enumerate(self.poly.coeffs) if c}


@dataclass(frozen=True)
class InverseDSeries:
    coeffs: tuple  # a_0..a_M, meaning sum a_j D^{-j}

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass
class LogExpansion:
    """log(v_n/(2n)!) ~ slope*n + log_coeff*log n + constant + sum tail[i-1] n^{-i}."""

    slope: Fraction
    log_coeff: Fraction
    constant: SymbolicConstant
    tail: list = field(default_factory=list)

    def evaluate(self, n: int, prec: int) -> BigDecimal:
        ctx = _ctx(prec + 10)
        acc = self.constant.evaluate(prec + 10).value
        acc = ctx.add(acc, ctx.multiply(_dec(self.slope, ctx), Decimal(n)))
        acc = ctx.add(acc, ctx.multiply(_dec(self.log_coeff, ctx), ctx.ln(Decimal(n))))
        for i, c in enumerate(self.tail, start=1):
            acc = ctx.add(acc, ctx.divide(_dec(c, ctx), Decimal(n ** i)))
        return BigDecimal(_ctx(prec).plus(acc), prec)

    def to_json(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.tail],
            "constant": self.constant.to_json(),
            "form": "log",
            "log_coeff": str(self.log_coeff),
            "slope": str(self.slope),
        }


def _dec(c: Fraction, ctx) -> Decimal:
    return ctx.divide(Decimal(c.numerator), Decimal(c.denominator))


# -- stages -----------------------------------------------------------------------

def log_phi_expansion(J: int, M: int) -> dict:
    """{j: {e: coeff}} with log phi_D(t) = sum_j sum_e coeff D^e t^{2j}, e >= -M."""
    if J < 1 or M < 1:
        raise ValueError("J and M must be >= 1")
    table = {}
    for j in range(1, J + 1):
        S = faulhaber_odd_sum(2 * j)
        sign = Fraction((-1) ** (j - 1), j)
        row: dict = {}
        # S(D)/D^{2j}: degree i of S lands at D^{i-2j}
        for i, c in enumerate(S.coeffs):
            if c:
                row[i - 2 * j] = row.get(i - 2 * j, Fraction(0)) + c
        row[1] = row.get(1, Fraction(0)) - Fraction(1, 2)
        row[0] = row.get(0, Fraction(0)) - Fraction(1, 2)
        table[j] = {e: sign * c for e, c in sorted(row.items(), reverse=True) if c and e >= -M}
    return table


def _residual_log(M: int) -> list:
    """Q_1..Q_M as polynomials in y: log phi_D(x/sqrt D) + x^2/3 = sum_m Q_m D^{-m}."""
    table = log_phi_expansion(M + 1, M + 2)
    Q = [[Fraction(0)] * (M + 2) for _ in range(M + 1)]
    for j, row in table.items():
        for e, c in row.items():
            m = j - e  # D^e * t^{2j} = x^{2j} D^{e-j}
            if m == 0:
                if (j, e, c) != (1, 1, Fraction(-1, 3)):
                    raise ArithmeticError("unexpected order-0 term in log phi")
                continue
            if 1 <= m <= M:
                Q[m][j] += c
    return [DensePoly(q, "QQ") for q in Q]


def integrand_expansion(M: int) -> list:
    """Gauss-weighted polynomials g_0..g_M with the integrand ~ sum_m g_m D^{-m}."""
    if M < 0:
        raise ValueError("M must be >= 0")
    Q = _residual_log(M)
    zero = DensePoly([], "QQ")
    # exp(sum Q_m u^m) by E_m = (1/m) sum_k k Q_k E_{m-k}
    E = [DensePoly.one("QQ")]
    for m in range(1, M + 1):
        acc = zero
        for k in range(1, m + 1):
            acc = acc + (Q[k] * E[m - k]).scale(k)
        E.append(acc.scale(Fraction(1, m)))
    # x^2 (1 + x^2/D)^{-2} = y sum_b (b+1)(-1)^b y^b D^{-b}
    out = []
    for m in range(M + 1):
        acc = zero
        for b in range(m + 1):
            w = DensePoly([0] * (b + 1) + [(b + 1) * (-1) ** b], "QQ")
            acc = acc + E[m - b] * w
        out.append(GaussWeightedPoly(acc))
    return out


@lru_cache(maxsize=None)
def gaussian_moment(m: int) -> Fraction:
    """Integral of e^{-x^2/3} x^{2m} over the real line, divided by sqrt(3 pi)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return Fraction(factorial(2 * m), factorial(m)) * Fraction(3, 4) ** m


def vn_asymptotic_D(M: int) -> InverseDSeries:
    """a_0..a_M with v_n ~ sqrt(27/pi) D^{D-1/2} sum a_j D^{-j}, D = 2n-3."""
    parts = [g.integrate() for g in integrand_expansion(M)]
    # prefactor (2/pi) D^{D+1} D^{-3/2} sqrt(3 pi) I_0 with I_0 = 3/2 gives sqrt(27/pi) D^{D-1/2}
    if parts[0] != Fraction(3, 2):
        raise ArithmeticError("leading Gaussian integral should be 3/2")
    return InverseDSeries(tuple(p / parts[0] for p in parts))


def _inverse_D_in_u(M: int) -> TruncatedSeries:
    """1/(2n-3) as a series in u = 1/n."""
    return TruncatedSeries([0] + [Fraction(3 ** k, 2 ** (k + 1)) for k in range(M)], M)


def convert_D_to_n(series: InverseDSeries, M: int) -> list:
    """Coefficients b_1..b_M with v_n ~ sqrt(27/pi)(2n-3)^{2n-7/2}(1 + sum b_i n^{-i})."""
    outer = TruncatedSeries(list(series.coeffs[: M + 1]), M)
    full = outer.compose(_inverse_D_in_u(M))
    return list(full.coeffs[1: M + 1])


def _shift_factor(M: int) -> TruncatedSeries:
    """((2n-3)/(2n))^{2n-7/2} * e^3 as a series in u = 1/n."""
    expo = [Fraction(0)] + [
        -2 * Fraction(3, 2) ** (m + 1) / (m + 1) + Fraction(7, 2) * Fraction(3, 2) ** m / m
        for m in range(1, M + 1)
    ]
    return series_exp(TruncatedSeries(expo, M))


def convert_to_2n_form(series: InverseDSeries, M: int) -> list:
    """Coefficients with v_n ~ e^{-3} sqrt(27/pi)(2n)^{2n-7/2}(1 + sum c_i n^{-i})."""
    nform = TruncatedSeries([1] + convert_D_to_n(series, M), M)
    return list((nform * _shift_factor(M)).coeffs[1: M + 1])


def _stirling_tail(M: int) -> TruncatedSeries:
    """sum_k B_{2k} / (2k(2k-1)(2n)^{2k-1}) in u = 1/n."""
    coeffs = [Fraction(0)] * (M + 1)
    for k in range(1, M + 1):
        p = 2 * k - 1
        if p > M:
            break
        coeffs[p] = bernoulli(2 * k) / (2 * k * (2 * k - 1) * 2 ** p)
    return TruncatedSeries(coeffs, M)


LOG_CONSTANT = SymbolicConstant(-3, Fraction(-9, 2), Fraction(3, 2), -1)


def log_form(M: int) -> LogExpansion:
    series = vn_asymptotic_D(M)
    two_n = TruncatedSeries([1] + convert_to_2n_form(series, M), M)
    tail = series_log(two_n) - _stirling_tail(M)
    # e^{-3} sqrt(27/pi) (2n)^{-4} against (1/2) log(2 pi) from Stirling
    constant = (SymbolicConstant(-3, 0, Fraction(3, 2), Fraction(-1, 2))
                - SymbolicConstant(0, 4, 0, 0)
                - SymbolicConstant(0, Fraction(1, 2), 0, Fraction(1, 2)))
    return LogExpansion(Fraction(2), Fraction(-4), constant, list(tail.coeffs[1: M + 1]))


def derive(form: str, M: int):
    """Coefficient list (and constant for the log form) for one of FORMS."""
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    if M < 1:
        raise ValueError("M must be >= 1")
    if form == "log":
        return log_form(M)
    series = vn_asymptotic_D(M)
    if form == "D":
        return list(series.coeffs[1:])
    if form == "n":
        return convert_D_to_n(series, M)
    return convert_to_2n_form(series, M)
