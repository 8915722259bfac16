"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class TruncatedSeries:
    """c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).

    Every operation truncates at ``order``; binary operations use the smaller
    order of the two operands.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def with_order(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._lift(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k (k >= 0)."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the top coefficient is lost, order drops by one."""
        if self.order == 0:
            return TruncatedSeries([], 0)
        return TruncatedSeries([i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term, same order."""
        return TruncatedSeries([0] + [self.coeffs[i] / (i + 1) for i in range(self.order)], self.order)

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for m in range(1, self.order + 1):
            s = sum((a[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.with_order(n)
        acc = TruncatedSeries.constant(self.coeffs[n], n)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) through the recurrence m e_m = sum_k k s_k e_{m-k}, from E' = S'E."""
    a = s.coeffs
    if a[0] != 0:
        raise ValueError("series_exp requires zero constant term")
    out = [Fraction(1)]
    for m in range(1, s.order + 1):
        acc = sum((k * a[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
        out.append(acc / m)
    return TruncatedSeries(out, s.order)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) for s with constant term 1."""
    if s.coeffs[0] != 1:
        raise ValueError("series_log requires constant term 1")
    if s.order == 0:
        return TruncatedSeries([], 0)
    q = s.derivative() * s.reciprocal().with_order(s.order - 1)
    return TruncatedSeries([0] + [q.coeffs[i] / (i + 1) for i in range(s.order)], s.order)


def series_reversion(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse t with s(t(q)) = q + O(q^{N+1}).

    Newton iteration t <- t - (s(t) - q) / s'(t), doubling the number of
    correct coefficients each pass.
    """
    a = s.coeffs
    if s.order < 1 or a[0] != 0:
        raise ValueError("reversion requires a series c1*x + O(x^2)")
    if a[1] == 0:
        raise ValueError("reversion requires a nonzero linear coefficient")
    N = s.order
    ds = s.derivative()
    t = TruncatedSeries([0, 1 / a[1]], min(N, 1))
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        t = t.with_order(prec)
        q = TruncatedSeries.variable(prec)
        residual = s.with_order(prec).compose(t) - q
        slope = ds.with_order(prec).compose(t) if prec > 0 else ds
        t = t - residual / slope
    return t.with_order(N)
