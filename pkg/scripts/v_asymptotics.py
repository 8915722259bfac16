#!/usr/bin/env python3
"""Extrapolate log(v_n/(2n)!) - 2n + 4 log n and identify the coefficients."""
import argparse
import time
from decimal import Decimal
from math import factorial

from enumseq.asympk import DecimalSequence, confident, extract_coefficients
from enumseq.core.bignum import _ctx
from enumseq.core.recognize import recognize_symbolic
from enumseq.derivation import log_form
from enumseq.lines import v_defn


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=300)
    ap.add_argument("--precision", type=int, default=60)
    ap.add_argument("--k", type=int, default=8)
    ap.add_argument("--depth", type=int, default=4)
    args = ap.parse_args()

    t0 = time.perf_counter()
    ctx = _ctx(args.precision + 20)
    vals = []
    for n in range(2, args.terms + 2):
        x = ctx.ln(ctx.divide(Decimal(v_defn(n)), Decimal(factorial(2 * n))))
        vals.append(ctx.add(ctx.subtract(x, Decimal(2 * n)), ctx.multiply(4, ctx.ln(Decimal(n)))))
    s = DecimalSequence(2, [_ctx(args.precision).plus(v) for v in vals], args.precision)
    model = extract_coefficients(s, args.k, args.depth, max_denominator=10 ** 6)
    exact = log_form(args.depth)
    print(f"{len(s)} terms, k = {args.k}, P = {args.precision}, {time.perf_counter() - t0:.1f}s")
    for i, (c, d, r) in enumerate(zip(model.coefficients, model.digits, model.recognized)):
        want = exact.constant if i == 0 else exact.tail[i - 1]
        print(f"c_{i} = {confident(c, d)}  ({d} places)  recognized {r}  derived {want}")
    print("C recognized as", recognize_symbolic(confident(model.coefficients[0], model.digits[0])))


if __name__ == "__main__":
    main()
