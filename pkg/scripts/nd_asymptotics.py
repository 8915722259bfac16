#!/usr/bin/env python3
"""Growth constants of the plane-curve counts n_d from variant II."""
import argparse
import time

from enumseq.curves import nd_asymptotics


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=300)
    ap.add_argument("--precision", type=int, default=60)
    ap.add_argument("--k", type=int, default=8)
    args = ap.parse_args()
    t0 = time.perf_counter()
    r = nd_asymptotics(args.dmax, args.precision, args.k)
    lead = r.model.leading_digits
    print(f"d_max = {args.dmax}, {time.perf_counter() - t0:.1f}s")
    print(f"log-coefficient {r.model.leading['A']} ({lead['A']} places)")
    for name in ("A", "B0", "B1", "B2"):
        print(f"{name:>2} = {getattr(r, name)}")


if __name__ == "__main__":
    main()
