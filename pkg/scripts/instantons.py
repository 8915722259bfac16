#!/usr/bin/env python3
"""Quintic instanton numbers from the mirror map, with the Lambert check."""
import argparse

from enumseq.curves import extract_instantons, lambert_rebuild, qd_congruence_report, yukawa_series


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=20)
    args = ap.parse_args()
    q = extract_instantons(args.dmax)
    for d in range(1, args.dmax + 1):
        print(f"q_{d} = {q[d]}")
    ok = lambert_rebuild(q.values, args.dmax) == yukawa_series(args.dmax)
    print("Lambert rebuild matches:", ok)
    if args.dmax >= 16 and all(q.integral):
        for rep in qd_congruence_report(args.dmax):
            print(f"  {rep.part}: {'holds' if rep.passed else 'fails'}")


if __name__ == "__main__":
    main()
