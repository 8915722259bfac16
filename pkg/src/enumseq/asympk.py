"""Sequence acceleration with the asymp_k operator and its variants.

For s_n ~ c_0 + c_1/n + c_2/n^2 + ..., the operator

    s^{(k)}_n = (1/k!) sum_{j=0}^{k} (-1)^j C(k, j) (n-j)^k s_{n-j}

kills the terms c_1/n .. c_k/n^k, leaving c_0 + O(n^{-k-1}).  Variants I-III
handle a leading log term, a linear plus log term, and a power-law
prefactor n^lambda.
"""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional, Sequence

from .core.bignum import BigDecimal, _ctx
from .core.recognize import recognize_rational

DEFAULT_PRECISION = 60
MIN_CONFIDENT_DIGITS = 3
PROBE_FRACTIONS = (1.0, 0.8, 0.6)


@dataclass(frozen=True)
class DecimalSequence:
    start: int
    values: tuple
    prec: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        for v in self.values:
            if not isinstance(v, Decimal):
                raise TypeError("DecimalSequence stores decimal.Decimal values")

    @classmethod
    def from_function(cls, f: Callable[[int], object], start: int, stop: int, prec: int) -> "DecimalSequence":
        """Evaluate f on start..stop; f may return int, Fraction, str, Decimal or BigDecimal."""
        vals = [BigDecimal.of(f(n), prec).value for n in range(start, stop + 1)]
        return cls(start, vals, prec)

    @classmethod
    def from_bigdecimals(cls, start: int, values: Sequence[BigDecimal]) -> "DecimalSequence":
        prec = min(v.prec for v in values)
        return cls(start, [v.with_prec(prec).value for v in values], prec)

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> BigDecimal:
        """Value at sequence index n (not list position)."""
        if not self.start <= n <= self.stop:
            raise IndexError(n)
        return BigDecimal(self.values[n - self.start], self.prec)

    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    def truncate(self, stop: int) -> "DecimalSequence":
        """The terms with index <= stop."""
        if stop > self.stop:
            raise IndexError(stop)
        return DecimalSequence(self.start, self.values[: stop - self.start + 1], self.prec)

    def map(self, f: Callable[[int, Decimal, decimal.Context], Decimal], start: int | None = None,
            stop: int | None = None) -> "DecimalSequence":
        ctx = _ctx(self.prec)
        lo = self.start if start is None else start
        hi = self.stop if stop is None else stop
        return DecimalSequence(lo, [f(n, self.values[n - self.start], ctx) for n in range(lo, hi + 1)],
                               self.prec)


@dataclass
class AsymptoticModel:
    form: str
    leading: dict = field(default_factory=dict)
    leading_digits: dict = field(default_factory=dict)
    coefficients: list = field(default_factory=list)
    digits: list = field(default_factory=list)
    recognized: list = field(default_factory=list)
    k: int = 0

    @property
    def collapsed(self) -> list:
        return [d < MIN_CONFIDENT_DIGITS for d in self.digits]

    def to_json(self) -> dict:
        return {
            "coefficients": [
                {"collapsed": d < MIN_CONFIDENT_DIGITS, "digits": d,
                 "recognized": None if r is None else str(r),
                 "value": str(confident(c, d))}
                for c, d, r in zip(self.coefficients, self.digits, self.recognized)
            ],
            "form": self.form,
            "k": self.k,
            "leading": {name: {"digits": self.leading_digits.get(name),
                               "value": str(confident(v, self.leading_digits.get(name, v.prec)))}
                        for name, v in sorted(self.leading.items())},
        }


def default_k(num_terms: int) -> int:
    return max(5, round(math.log(num_terms)))


def confident(x: BigDecimal, places: int) -> BigDecimal:
    """Round x to ``places`` decimal places; precision becomes the significant-digit count."""
    places = max(places, 0)
    q = x.value.quantize(Decimal(1).scaleb(-places), rounding=decimal.ROUND_HALF_EVEN,
                         context=_ctx(x.prec + places + 10))
    sig = max(q.adjusted() + places + 1, 1)
    return BigDecimal(q, min(sig, x.prec))


def asympk_apply(s: DecimalSequence, k: int) -> DecimalSequence:
    """(1/k!) Delta^k N^k s, defined for n >= start + k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(s) < k + 1:
        raise ValueError(f"asymp_k with k={k} needs at least {k + 1} terms")
    ctx = _ctx(s.prec + 20)
    out_ctx = _ctx(s.prec)
    signs = [(-1) ** j * comb(k, j) for j in range(k + 1)]
    kfact = Decimal(factorial(k))
    vals = s.values
    out = []
    for n in range(s.start + k, s.stop + 1):
        acc = Decimal(0)
        for j in range(k + 1):
            w = signs[j] * (n - j) ** k
            acc = ctx.add(acc, ctx.multiply(Decimal(w), vals[n - j - s.start]))
        out.append(out_ctx.divide(acc, kfact))
    return DecimalSequence(s.start + k, out, s.prec)


def _probe_indices(seq: DecimalSequence) -> list:
    last = seq.stop
    idx = []
    for f in PROBE_FRACTIONS:
        n = max(seq.start, min(last, int(round(f * last))))
        idx.append(n)
    return idx


def _probe_stops(s: DecimalSequence, k: int, extra: int = 0) -> list:
    """Prefix lengths for the confidence check; each keeps enough terms for the operator."""
    lo = min(s.stop, s.start + k + extra)
    return [max(lo, min(s.stop, int(round(f * s.stop)))) for f in PROBE_FRACTIONS]


def _agreement(values: list) -> int:
    best = values[0]
    return min(best.agreeing_digits(v) for v in values[1:]) if len(values) > 1 else 0


def limit_estimate(s: DecimalSequence, k: int) -> tuple:
    """(value at the last index, agreeing decimal places across the probe indices)."""
    t = asympk_apply(s, k)
    probes = [t[n] for n in _probe_indices(t)]
    return probes[0], _agreement(probes)


def _try_recognize(x: BigDecimal, digits: int, max_denominator: int | None):
    if max_denominator is None or digits < MIN_CONFIDENT_DIGITS:
        return None
    rec = recognize_rational(confident(x, digits), max_denominator)
    if rec is None:
        return None
    # recognize_rational's own window is a few digits wider than what the
    # extrapolation vouches for; insist on agreement to the confident places
    # and on enough places to single out a fraction of this size.
    if abs(x.to_fraction() - rec) >= Fraction(1, 10 ** (digits - 1)):
        return None
    if rec.denominator ** 2 >= 10 ** digits:
        return None
    return rec


def _peel(rests: list, k: int, depth: int, max_denominator: int | None,
          snap: bool, known: Sequence | None) -> tuple:
    """Peel coefficients off each prefix in ``rests`` (full sequence first).

    Returns the model and, per prefix, the values that were subtracted.

    Every prefix is processed with its own earlier estimates, so the spread
    between prefixes also reflects errors carried down from c_0, c_1, ...
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    model = AsymptoticModel(form="plain", k=k)
    found = [[] for _ in rests]  # Decimal or Fraction values used for subtraction
    for i in range(depth + 1):
        def residual(n, v, ctx, used, i=i):
            acc = v
            inv = Decimal(1)
            for c in used:
                acc = ctx.subtract(acc, ctx.multiply(_as_decimal(c, ctx), inv))
                inv = ctx.divide(inv, Decimal(n))
            return ctx.multiply(acc, Decimal(n ** i)) if i else acc

        ests = []
        for r, used in zip(rests, found):
            t = asympk_apply(r.map(lambda n, v, ctx, used=used: residual(n, v, ctx, used)), k)
            ests.append(t[t.stop])
        value, digits = ests[0], _agreement(ests)
        rec = _try_recognize(value, digits, max_denominator)
        model.coefficients.append(value)
        model.digits.append(digits)
        model.recognized.append(rec)
        for used, est in zip(found, ests):
            if known is not None and i < len(known) and known[i] is not None:
                used.append(Fraction(known[i]) if not isinstance(known[i], BigDecimal) else known[i].value)
            elif snap and rec is not None:
                used.append(rec)
            else:
                used.append(est.value)
    return model, found


def extract_coefficients(s: DecimalSequence, k: int, depth: int,
                         max_denominator: int | None = None,
                         snap: bool = False, known: Sequence | None = None) -> AsymptoticModel:
    """Peel c_0, c_1, ..., c_depth off s_n ~ sum c_i n^{-i}.

    Digit confidence compares the whole computation on the full sequence with
    the same computation on its first 0.8N and 0.6N terms.  ``known`` supplies
    exact values for leading coefficients (used instead of the numeric
    estimate when subtracting).  With ``snap=True`` a coefficient recognized
    as a rational is subtracted exactly.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if len(s) < k + 1:
        raise ValueError(f"asymp_k with k={k} needs at least {k + 1} terms")
    rests = [s.truncate(stop) for stop in _probe_stops(s, k)]
    return _peel(rests, k, depth, max_denominator, snap, known)[0]


def _as_decimal(c, ctx) -> Decimal:
    if isinstance(c, Fraction):
        return ctx.divide(Decimal(c.numerator), Decimal(c.denominator))
    return c


def _ln_table(s: DecimalSequence) -> dict:
    ctx = _ctx(s.prec + 10)
    return {n: ctx.ln(Decimal(n)) for n in range(max(s.start, 1), s.stop + 2)}


def _leading(t: DecimalSequence, stops: list, offset: int, max_denominator: int | None,
             snap: bool) -> tuple:
    """Leading constant read off t at each prefix end, its digits, and the values to subtract."""
    ests = [t[stop - offset] for stop in stops]
    digits = _agreement(ests)
    used = [e.value for e in ests]
    if snap and max_denominator is not None:
        rec = _try_recognize(ests[0], digits, max_denominator)
        if rec is not None:
            exact = _ctx(t.prec).divide(Decimal(rec.numerator), Decimal(rec.denominator))
            used = [exact] * len(ests)
    return ests[0], digits, used


def variant_I(s: DecimalSequence, k: int, depth: int, max_denominator: int | None = None,
              snap_leading: bool = False) -> AsymptoticModel:
    """s_n ~ A log n + c_0 + c_1/n + ...; A from n (s_{n+1} - s_n)."""
    ctx0 = _ctx(s.prec)
    diff = DecimalSequence(s.start, [
        ctx0.multiply(Decimal(n), ctx0.subtract(s.values[n + 1 - s.start], s.values[n - s.start]))
        for n in range(s.start, s.stop)], s.prec)
    stops = _probe_stops(s, k, 1)
    A, A_digits, A_used = _leading(asympk_apply(diff, k), stops, 1, max_denominator, snap_leading)
    logs = _ln_table(s)
    rests = [s.truncate(stop).map(lambda n, v, ctx, a=a: ctx.subtract(v, ctx.multiply(a, logs[n])))
             for stop, a in zip(stops, A_used)]
    model = _peel(rests, k, depth, max_denominator, False, None)[0]
    model.form = "I"
    model.leading = {"A": A}
    model.leading_digits = {"A": A_digits}
    return model


def variant_II(s: DecimalSequence, k: int, depth: int, max_denominator: int | None = None,
               snap_leading: bool = False) -> AsymptoticModel:
    """s_n ~ B n + A log n + c_0 + ...; B and A from Delta s, then the plain method."""
    ctx0 = _ctx(s.prec)
    delta = DecimalSequence(s.start + 1, [
        ctx0.subtract(s.values[i], s.values[i - 1]) for i in range(1, len(s))], s.prec)
    stops = _probe_stops(s, k, 1)
    head, pairs = _peel([delta.truncate(stop) for stop in stops], k, 1, None, False, None)
    B, A = head.coefficients
    B_digits, A_digits = head.digits
    A_used = [a for _, a in pairs]
    if snap_leading and max_denominator is not None:
        rec = _try_recognize(A, A_digits, max_denominator)
        if rec is not None:
            A_used = [ctx0.divide(Decimal(rec.numerator), Decimal(rec.denominator))] * len(stops)
    logs = _ln_table(s)
    rests = [s.truncate(stop).map(
        lambda n, v, ctx, b=b, a=a: ctx.subtract(ctx.subtract(v, ctx.multiply(b, Decimal(n))),
                                                       ctx.multiply(a, logs[n])))
        for stop, (b, _), a in zip(stops, pairs, A_used)]
    model = _peel(rests, k, depth, max_denominator, False, None)[0]
    model.form = "II"
    model.leading = {"A": A, "B": B}
    model.leading_digits = {"A": A_digits, "B": B_digits}
    return model


def variant_III(s: DecimalSequence, k: int, depth: int, max_denominator: int | None = None,
                snap_leading: bool = False) -> AsymptoticModel:
    """s_n ~ A n^lambda (1 + c_1/n + ...); lambda from n (s_{n+1}/s_n - 1).

    Coefficients are reported normalised: c_0 is A and c_i (i >= 1) are the
    relative corrections.
    """
    if any(v <= 0 for v in s.values):
        raise ValueError("variant III needs a strictly positive sequence")
    ctx0 = _ctx(s.prec)
    ratio = DecimalSequence(s.start, [
        ctx0.multiply(Decimal(n), ctx0.subtract(ctx0.divide(s.values[n + 1 - s.start], s.values[n - s.start]),
                                                Decimal(1)))
        for n in range(s.start, s.stop)], s.prec)
    stops = _probe_stops(s, k, 1)
    lam, lam_digits, lam_used = _leading(asympk_apply(ratio, k), stops, 1, max_denominator, snap_leading)
    logs = _ln_table(s)
    rests = [s.truncate(stop).map(lambda n, v, ctx, lm=lm: ctx.divide(v, ctx.exp(ctx.multiply(lm, logs[n]))))
             for stop, lm in zip(stops, lam_used)]
    raw = _peel(rests, k, depth, None, False, None)[0]
    A = raw.coefficients[0]
    model = AsymptoticModel(form="III", k=k)
    model.leading = {"A": A, "lambda": lam}
    model.leading_digits = {"A": raw.digits[0], "lambda": lam_digits}
    model.coefficients = [A] + [c / A for c in raw.coefficients[1:]]
    model.digits = list(raw.digits)
    model.recognized = [None] + [_try_recognize(c, d, max_denominator)
                                 for c, d in zip(model.coefficients[1:], model.digits[1:])]
    return model


VARIANTS = {"plain": extract_coefficients, "I": variant_I, "II": variant_II, "III": variant_III}


def fit(s: DecimalSequence, variant: str, k: int | None = None, depth: int = 3,
        max_denominator: Optional[int] = None) -> AsymptoticModel:
    """Dispatch to the chosen variant; the form is never guessed."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose one of {sorted(VARIANTS)}")
    k = default_k(len(s)) if k is None else k
    return VARIANTS[variant](s, k, depth, max_denominator)
