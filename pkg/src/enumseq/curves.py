"""Plane rational curves n_d (Kontsevich) and quintic instanton numbers q_d (mirror map)."""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import comb, factorial

from .asympk import AsymptoticModel, DecimalSequence, variant_II
from .core.bignum import BigDecimal, _ctx, decimal_exp
from .core.series import TruncatedSeries, series_exp, series_reversion
from .reports import Counterexample, TheoremReport, first_failure


# -- plane curves -----------------------------------------------------------

@dataclass(frozen=True)
class CurveCounts:
    d_max: int
    values: tuple  # values[d-1] = n_d

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.d_max:
            raise IndexError(d)
        return self.values[d - 1]


def kontsevich_term(n: list, d: int, k: int) -> int:
    """Summand k of the recursion for n_d (n is 1-indexed through a leading pad)."""
    bracket = k * k * (d - k) ** 2 * comb(3 * d - 4, 3 * k - 2) - k ** 3 * (d - k) * comb(3 * d - 4, 3 * k - 1)
    return n[k] * n[d - k] * bracket


def kontsevich(d_max: int, reverse: bool = False) -> CurveCounts:
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    n = [0, 1]
    for d in range(2, d_max + 1):
        ks = range(d - 1, 0, -1) if reverse else range(1, d)
        n.append(sum(kontsevich_term(n, d, k) for k in ks))
    return CurveCounts(d_max, tuple(n[1:]))


def nd_congruence_report(d_max: int, strict: bool = False) -> list[TheoremReport]:
    """Observed patterns of n_d modulo small numbers.

    These are observations, so the reports carry ``asserted=strict``.
    """
    if d_max < 10:
        raise ValueError("d_max must be >= 10")
    n = kontsevich(d_max)
    ds = range(1, d_max + 1)
    params = {"d_max": d_max}
    out = []
    for l in range(1, 6):
        out.append(first_failure(((d, 0, n[d] % 2 ** l) for d in ds if d > l + 1),
                                 f"nd.pow2.l{l}", dict(params, modulus=2 ** l), strict))
    out.append(first_failure(((d, 0, n[d] % 3) for d in ds if d % 3 == 0),
                             "nd.mod3.zero", params, strict))
    out.append(first_failure(((d, 1, n[d] % 3) for d in ds if d % 3 == 2),
                             "nd.mod3.one", params, strict))
    out.append(first_failure(((d, 4, n[d] % 6) for d in ds if d % 6 == 2 and d > 2),
                             "nd.mod6.four", params, strict))
    seq31 = [n[d] % 3 for d in ds if d % 3 == 1 and d > 1]
    alt = all(x in (1, 2) for x in seq31) and all(a != b for a, b in zip(seq31, seq31[1:]))
    out.append(TheoremReport("nd.mod3.alternating", params, alt,
                             None if alt else Counterexample("3d+1 residues", "alternating 1,2", seq31),
                             strict))
    out.append(first_failure(((d, 0, n[d] % 5) for d in ds if d > 8), "nd.mod5", params, strict))
    out.append(first_failure(((d, 0, n[d] % 25) for d in ds if d > 23), "nd.mod25", params, strict))
    for p, shift, zero_rows in ((7, 4, (5, 7)), (13, 16, ()), (19, 12, ())):
        out.append(_row_regularity(n, p, shift, zero_rows, strict))
    return out


def _row_regularity(n: CurveCounts, p: int, shift: int, zero_rows, strict: bool) -> TheoremReport:
    """Rows of the n_d mod p table repeat after ``shift`` columns, i.e. n_{d + shift p} == n_d."""
    period = shift * p
    params = {"d_max": n.d_max, "p": p, "shift": shift}
    pairs = [(d, n[d] % p, n[d + period] % p) for d in range(1, n.d_max - period + 1)]
    # the start of periodicity is not pinned down; report the first index after which it holds
    start = None
    for i in range(len(pairs) - 1, -1, -1):
        if pairs[i][1] != pairs[i][2]:
            start = pairs[i][0] + 1
            break
    periodic_from = 1 if start is None else start
    # a few leading values may sit outside the pattern; allow that within the first column
    if periodic_from <= p:
        pairs = [t for t in pairs if t[0] >= periodic_from]
    details = {"checked_pairs": len(pairs), "periodic_from": periodic_from}
    zero_items = [(d, 0, n[d] % p) for d in range(1, n.d_max + 1) if d % p in {r % p for r in zero_rows} and d > p]
    rep = first_failure(pairs + zero_items, f"nd.regular.mod{p}", params, strict, details)
    if not pairs:
        rep.details["note"] = "d_max too small to test this period"
    return rep


# -- quintic instantons ---------------------------------------------------------

@dataclass(frozen=True)
class InstantonCounts:
    d_max: int
    values: tuple  # Fractions, values[d-1] = q_d
    integral: tuple

    def __getitem__(self, d: int) -> Fraction:
        return self.values[d - 1]


def _harmonic(a: int, b: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(a, b + 1)), Fraction(0))


def picard_fuchs_solutions(N: int) -> tuple:
    """(y_0, y~_1) to order N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    y0, y1 = [], []
    for n in range(N + 1):
        a = factorial(5 * n) // factorial(n) ** 5
        y0.append(a)
        y1.append(a * 5 * _harmonic(n + 1, 5 * n))
    return TruncatedSeries(y0, N), TruncatedSeries(y1, N)


def mirror_map(N: int) -> TruncatedSeries:
    """q(x) = x exp(y~_1 / y_0) to order N."""
    if N < 2:
        raise ValueError("N must be >= 2")
    y0, y1 = picard_fuchs_solutions(N)
    return series_exp(y1 / y0).shift(1)


def inverse_mirror_map(N: int) -> TruncatedSeries:
    return series_reversion(mirror_map(N))


def yukawa_series(N: int) -> TruncatedSeries:
    """(q/x dx/dq)^3 * 5 / ((1 - 5^5 x) y_0(x)^2), re-expanded in q."""
    if N < 2:
        raise ValueError("N must be >= 2")
    xq = inverse_mirror_map(N + 1)
    # q x'(q) / x(q) with x(q) = q u(q), u(0) = 1
    u = TruncatedSeries(xq.coeffs[1:], N)
    dx = xq.derivative().with_order(N)
    ratio = dx / u
    y0, _ = picard_fuchs_solutions(N)
    inner = 5 * ((1 - 3125 * TruncatedSeries.variable(N)) * y0 * y0).reciprocal()
    x_of_q = xq.with_order(N)
    return ratio ** 3 * inner.compose(x_of_q)


def lambert_rebuild(qs, N: int) -> TruncatedSeries:
    """5 + sum_d q_d d^3 q^d/(1-q^d) to order N."""
    coeffs = [Fraction(5)] + [Fraction(0)] * N
    for d, qd in enumerate(qs, start=1):
        if d > N:
            break
        for m in range(d, N + 1, d):
            coeffs[m] += qd * d ** 3
    return TruncatedSeries(coeffs, N)


def extract_instantons(N: int) -> InstantonCounts:
    """Solve [q^m](Yukawa) = sum_{d | m} q_d d^3 for q_1..q_N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    Y = yukawa_series(max(N, 2))
    qs: list = []
    for m in range(1, N + 1):
        rest = Y[m] - sum((qs[d - 1] * d ** 3 for d in range(1, m) if m % d == 0), Fraction(0))
        qs.append(rest / m ** 3)
    return InstantonCounts(N, tuple(qs), tuple(q.denominator == 1 for q in qs))


def qd_congruence_report(d_max: int, strict: bool = False) -> list[TheoremReport]:
    if d_max < 16:
        raise ValueError("d_max must be >= 16")
    counts = extract_instantons(d_max)
    if not all(counts.integral):
        bad = counts.integral.index(False) + 1
        raise ArithmeticError(f"q_{bad} is not an integer")
    q = [int(x) for x in counts.values]
    ds = range(1, d_max + 1)
    params = {"d_max": d_max}
    out = [first_failure(((d, 0, q[d - 1] % 2) for d in ds if d % 2 == 0), "qd.even", params, strict)]
    for l in range(1, 5):
        m = 2 ** l
        out.append(first_failure(((d, 0, q[d - 1] % m) for d in ds if d % m == 0),
                                 f"qd.pow2.l{l}", dict(params, modulus=m), strict))
    for l in (3, 4):
        m = 2 ** l
        out.append(first_failure(((d, 0, q[d - 1] % m) for d in ds if d % 4 == 0),
                                 f"qd.rows4.l{l}", dict(params, modulus=m), strict))
    rows = {}
    for d in ds:
        rows.setdefault((d - 1) % 32 + 1, []).append(q[d - 1] % 32)
    zero_rows = sorted(r for r, vals in rows.items() if all(v == 0 for v in vals))
    ok = not zero_rows
    out.append(TheoremReport("qd.no_zero_row32", params, ok,
                             None if ok else Counterexample("rows", [], zero_rows), strict,
                             {"populated_rows": len(rows)}))
    out.append(first_failure(((d, 0, q[d - 1] % 5) for d in ds), "qd.mod5", params, strict))
    out.append(first_failure(((d, 0, q[d - 1] % 25) for d in ds), "qd.mod25", params, strict))
    return out


# -- asymptotics of n_d -----------------------------------------------------------

def nd_log_sequence(d_max: int, prec: int) -> DecimalSequence:
    """log(n_d / (3d-1)!) for d = 1..d_max."""
    n = kontsevich(d_max)
    ctx = _ctx(prec + 20)
    vals = [ctx.ln(ctx.divide(Decimal(n[d]), Decimal(factorial(3 * d - 1)))) for d in range(1, d_max + 1)]
    return DecimalSequence(1, [_ctx(prec).plus(v) for v in vals], prec)


@dataclass
class CurveAsymptotics:
    model: AsymptoticModel
    A: BigDecimal
    B0: BigDecimal
    B1: BigDecimal
    B2: BigDecimal

    def to_json(self) -> dict:
        out = {name: str(getattr(self, name)) for name in ("A", "B0", "B1", "B2")}
        out["model"] = self.model.to_json()
        return out


def nd_asymptotics(d_max: int = 300, precision: int = 60, k: int = 8, depth: int = 3) -> CurveAsymptotics:
    """Variant II on log(n_d/(3d-1)!) ~ d log A - (7/2) log d + log B_0 + ..."""
    if d_max < 100:
        raise ValueError("d_max must be >= 100")
    model = variant_II(nd_log_sequence(d_max, precision), k, max(depth, 2))
    A = decimal_exp(model.leading["B"])
    B0 = decimal_exp(model.coefficients[0])
    c1, c2 = model.coefficients[1], model.coefficients[2]
    # log(B0 (1 + b1/d + b2/d^2)) = log B0 + b1/d + (b2 - b1^2/2)/d^2 + ...
    B1 = B0 * c1
    B2 = B0 * (c2 + c1 * c1 / 2)
    return CurveAsymptotics(model, A, B0, B1, B2)
