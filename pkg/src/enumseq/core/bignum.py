"""Arbitrary-precision decimals with explicit precision, and symbolic log constants.

``BigDecimal`` pairs a :class:`decimal.Decimal` (sign, digit string, base-10
exponent) with the number of significant decimal digits it is meant to
carry.  Every arithmetic result is rounded half-even to the smaller
precision of its operands, inside a private context, so the global decimal
context never matters.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction, "BigDecimal"]

GUARD_DIGITS = 10


def _ctx(prec: int) -> decimal.Context:
    return decimal.Context(prec=prec, rounding=decimal.ROUND_HALF_EVEN,
                           Emin=-999999999, Emax=999999999, traps=[decimal.DivisionByZero,
                                                                   decimal.InvalidOperation])


def _fraction_to_decimal(q: Fraction, prec: int) -> Decimal:
    ctx = _ctx(prec)
    return ctx.divide(Decimal(q.numerator), Decimal(q.denominator))


@dataclass(frozen=True)
class BigDecimal:
    value: Decimal
    prec: int

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError("precision must be >= 1")
        if not self.value.is_finite():
            raise ValueError("BigDecimal must be finite")

    # -- construction ---------------------------------------------------
    @classmethod
    def of(cls, x, prec: int) -> "BigDecimal":
        if isinstance(x, BigDecimal):
            return cls(_ctx(prec).plus(x.value), prec)
        if isinstance(x, Fraction):
            return cls(_fraction_to_decimal(x, prec), prec)
        if isinstance(x, int):
            return cls(_ctx(prec).plus(Decimal(x)), prec)
        if isinstance(x, (str, Decimal)):
            return cls(_ctx(prec).plus(Decimal(x)), prec)
        raise TypeError(f"cannot convert {type(x).__name__} to BigDecimal")

    @classmethod
    def parse(cls, text: str, prec: int | None = None) -> "BigDecimal":
        """Parse a decimal string; default precision is its significant-digit count."""
        d = Decimal(text.strip())
        if prec is None:
            prec = max(len(d.as_tuple().digits), 1)
        return cls.of(d, prec)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "BigDecimal":
        if isinstance(other, BigDecimal):
            return other
        return BigDecimal.of(other, self.prec)

    def _binop(self, other, op):
        other = self._coerce(other)
        p = min(self.prec, other.prec)
        return BigDecimal(getattr(_ctx(p), op)(self.value, other.value), p)

    def __add__(self, other):
        return self._binop(other, "add")

    def __radd__(self, other):
        return self._coerce(other) + self

    def __sub__(self, other):
        return self._binop(other, "subtract")

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return self._binop(other, "multiply")

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __truediv__(self, other):
        return self._binop(other, "divide")

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return BigDecimal(-self.value, self.prec)

    def __abs__(self):
        return BigDecimal(abs(self.value), self.prec)

    def __lt__(self, other):
        return self.value < self._coerce(other).value

    def __le__(self, other):
        return self.value <= self._coerce(other).value

    def __gt__(self, other):
        return self.value > self._coerce(other).value

    def __ge__(self, other):
        return self.value >= self._coerce(other).value

    def __float__(self):
        return float(self.value)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def with_prec(self, prec: int) -> "BigDecimal":
        return BigDecimal.of(self, prec)

    def to_fraction(self) -> Fraction:
        return Fraction(self.value)

    # -- rendering --------------------------------------------------------
    def __str__(self) -> str:
        return str(self.value)

    def to_json(self) -> dict:
        t = self.value.as_tuple()
        return {
            "digits": "".join(map(str, t.digits)),
            "exponent": t.exponent,
            "precision": self.prec,
            "sign": -1 if t.sign else 1,
        }

    def agreeing_digits(self, other: "BigDecimal") -> int:
        """Number of decimal places (after the point) on which the two agree."""
        diff = _ctx(max(self.prec, other.prec) + 2).abs(self.value - other.value)
        if diff == 0:
            return min(self.prec, other.prec)
        return max(-diff.adjusted() - 1, 0)


def decimal_log(x: BigDecimal, prec: int | None = None) -> BigDecimal:
    prec = x.prec if prec is None else prec
    if x.value <= 0:
        raise ValueError("logarithm of a nonpositive number")
    return BigDecimal(_ctx(prec).ln(x.value), prec)


def decimal_exp(x: BigDecimal, prec: int | None = None) -> BigDecimal:
    prec = x.prec if prec is None else prec
    return BigDecimal(_ctx(prec).exp(x.value), prec)


def decimal_sqrt(x: BigDecimal, prec: int | None = None) -> BigDecimal:
    prec = x.prec if prec is None else prec
    return BigDecimal(_ctx(prec).sqrt(x.value), prec)


def _arctan_inv(m: int, scale: int) -> int:
    """scale * arctan(1/m) by the alternating Taylor series in fixed point."""
    total = term = scale // m
    m2 = m * m
    k = 1
    sign = -1
    while term:
        term //= m2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


@lru_cache(maxsize=32)
def decimal_pi(prec: int) -> BigDecimal:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239), in fixed point with guard digits
    scale = 10 ** (prec + GUARD_DIGITS)
    pi_scaled = 16 * _arctan_inv(5, scale) - 4 * _arctan_inv(239, scale)
    return BigDecimal.of(Fraction(pi_scaled, scale), prec)


@lru_cache(maxsize=64)
def log_constant(name: str, prec: int) -> BigDecimal:
    wide = prec + GUARD_DIGITS
    if name == "log2":
        v = decimal_log(BigDecimal.of(2, wide))
    elif name == "log3":
        v = decimal_log(BigDecimal.of(3, wide))
    elif name == "logpi":
        v = decimal_log(decimal_pi(wide))
    else:
        raise KeyError(name)
    return v.with_prec(prec)


@dataclass(frozen=True)
class SymbolicConstant:
    """unit + log2*log(2) + log3*log(3) + logpi*log(pi), rational coefficients."""

    unit: Fraction = Fraction(0)
    log2: Fraction = Fraction(0)
    log3: Fraction = Fraction(0)
    logpi: Fraction = Fraction(0)

    def __post_init__(self):
        for f in ("unit", "log2", "log3", "logpi"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def __add__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        return SymbolicConstant(self.unit + other.unit, self.log2 + other.log2,
                                self.log3 + other.log3, self.logpi + other.logpi)

    def __neg__(self) -> "SymbolicConstant":
        return self.scale(-1)

    def __sub__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        return self + (-other)

    def scale(self, c) -> "SymbolicConstant":
        c = Fraction(c)
        return SymbolicConstant(c * self.unit, c * self.log2, c * self.log3, c * self.logpi)

    def coefficients(self) -> tuple:
        return (self.unit, self.log2, self.log3, self.logpi)

    def evaluate(self, prec: int) -> BigDecimal:
        wide = prec + GUARD_DIGITS
        total = BigDecimal.of(self.unit, wide)
        for name in ("log2", "log3", "logpi"):
            c = getattr(self, name)
            if c:
                total = total + BigDecimal.of(c, wide) * log_constant(name, wide)
        return total.with_prec(prec)

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("log2", "log3", "logpi", "unit")}

    def __str__(self) -> str:
        out = str(self.unit) if self.unit else ""
        for name, label in (("log2", "log(2)"), ("log3", "log(3)"), ("logpi", "log(pi)")):
            c = getattr(self, name)
            if not c:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if out:
                out += (" - " if c < 0 else " + ") + mag + label
            else:
                out = ("-" if c < 0 else "") + mag + label
        return out or "0"
