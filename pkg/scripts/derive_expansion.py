#!/usr/bin/env python3
"""Print the exact asymptotic expansion of v_n in each normalization."""
import argparse

from enumseq.derivation import FORMS, derive


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=7)
    args = ap.parse_args()
    for form in FORMS:
        result = derive(form, args.terms)
        if form == "log":
            print(f"log: {result.slope} n + ({result.log_coeff}) log n + {result.constant}")
            coeffs = result.tail
        else:
            print(f"{form}:")
            coeffs = result
        for i, c in enumerate(coeffs, start=1):
            print(f"  [{i}] {c}")


if __name__ == "__main__":
    main()
