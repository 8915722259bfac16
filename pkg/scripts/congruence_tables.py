#!/usr/bin/env python3
"""Print residue tables of v_n, n_d or q_d and the table statements that apply."""
import argparse

from enumseq import congruences as cg
from enumseq.curves import extract_instantons, kontsevich
from enumseq.lines import v_defn


def source(seq: str, top: int):
    if seq == "v":
        return v_defn
    if seq == "nd":
        vals = kontsevich(top).values
        return lambda n: vals[n - 1]
    q = extract_instantons(top)
    return lambda n: int(q[n])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seq", choices=("v", "nd", "qd"), default="v")
    ap.add_argument("--mods", default="4,5,11")
    ap.add_argument("--depth", type=int, default=14)
    args = ap.parse_args()
    for k in (int(m) for m in args.mods.split(",")):
        table = cg.residue_table(source(args.seq, k * args.depth), k, args.depth)
        print(f"k = {k}")
        print(table.render())
        if args.seq == "v":
            for part in cg.theorem1_applicable_parts(k):
                depth = args.depth if part < 5 else max(args.depth, k + 2)
                rep = cg.check_theorem1(part, k, depth)
                print(f"  part {part}: {'holds' if rep.passed else 'FAILS'}")
        print()


if __name__ == "__main__":
    main()
