"""Dense univariate polynomials over ZZ, QQ or ZZ/mZZ.

Coefficients are stored low degree first.  The ring is part of the value:
``"ZZ"`` for Python ints, ``"QQ"`` for :class:`fractions.Fraction`, or a
positive int ``m`` for residues modulo ``m``.  Polynomials over different
rings never combine silently.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Ring = Union[str, int]

ZERO_DEGREE = -1  # degree of the zero polynomial


def _normalize_ring(ring: Ring) -> Ring:
    if ring in ("ZZ", "QQ"):
        return ring
    if isinstance(ring, int) and not isinstance(ring, bool) and ring >= 2:
        return ring
    raise ValueError(f"unsupported coefficient ring {ring!r}")


class DensePoly:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable = (), ring: Ring = "ZZ"):
        ring = _normalize_ring(ring)
        cs = list(coeffs)
        if ring == "ZZ":
            for c in cs:
                if isinstance(c, Fraction) and c.denominator != 1:
                    raise ValueError("non-integral coefficient for ZZ polynomial")
            cs = [int(c) for c in cs]
        elif ring == "QQ":
            cs = [Fraction(c) for c in cs]
        else:
            cs = [int(c) % ring for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring

    # -- constructors -------------------------------------------------
    @classmethod
    def one(cls, ring: Ring = "ZZ") -> "DensePoly":
        return cls([1], ring)

    @classmethod
    def x(cls, ring: Ring = "ZZ") -> "DensePoly":
        return cls([0, 1], ring)

    @classmethod
    def linear(cls, a, b, ring: Ring = "ZZ") -> "DensePoly":
        """The polynomial a + b*x."""
        return cls([a, b], ring)

    # -- inspection -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, m: int):
        if m < 0:
            raise ValueError("coefficient index must be nonnegative")
        if m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0) if self.ring == "QQ" else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(self.ring, int):
            acc %= self.ring
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"DensePoly({list(self.coeffs)!r}, ring={self.ring!r})"

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "DensePoly") -> None:
        if not isinstance(other, DensePoly):
            raise TypeError("expected DensePoly")
        if other.ring != self.ring:
            raise ValueError(f"mixed coefficient rings {self.ring!r} and {other.ring!r}")

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(out, self.ring)

    def __neg__(self) -> "DensePoly":
        return DensePoly([-c for c in self.coeffs], self.ring)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __mul__(self, other) -> "DensePoly":
        if not isinstance(other, DensePoly):
            return self.scale(other)
        return poly_mul(self, other)

    def scale(self, c) -> "DensePoly":
        return DensePoly([c * a for a in self.coeffs], self.ring)

    def __pow__(self, e: int) -> "DensePoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = DensePoly.one(self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def truncate(self, m: int) -> "DensePoly":
        """Drop every term of degree > m."""
        return DensePoly(self.coeffs[: m + 1], self.ring)

    def compose(self, inner: "DensePoly") -> "DensePoly":
        self._check(inner)
        acc = DensePoly([], self.ring)
        for c in reversed(self.coeffs):
            acc = acc * inner + DensePoly([c], self.ring)
        return acc

    def reduce(self, modulus: int) -> "DensePoly":
        if self.ring == "QQ":
            raise ValueError("reduce a ZZ polynomial, not a QQ one")
        return DensePoly(self.coeffs, modulus)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    """Schoolbook product of two polynomials over the same ring."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return DensePoly([], a.ring)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            out[i + j] += x * y
    return DensePoly(out, a.ring)


def poly_coeff(p: DensePoly, m: int):
    return p.coeff(m)


def mul_linear_truncated(coeffs: Sequence, a, b, top: int) -> list:
    """Multiply a raw coefficient list by (a + b*x), keeping degrees <= top.

    This is the inner loop of the v_n computation and deliberately works on
    plain lists.
    """
    n = len(coeffs)
    out = [a * coeffs[0]]
    out.extend(a * coeffs[i] + b * coeffs[i - 1] for i in range(1, min(n, top + 1)))
    if n <= top:
        out.append(b * coeffs[-1])
    return out


def product_of_linears(pairs: Iterable, top: int | None = None, modulus: int | None = None) -> list:
    """Coefficients of prod(a + b*x) over ``pairs``, optionally truncated/reduced."""
    cs = [1]
    limit = top if top is not None else 1 << 62
    for a, b in pairs:
        cs = mul_linear_truncated(cs, a, b, limit)
        if modulus is not None:
            cs = [c % modulus for c in cs]
    return cs
