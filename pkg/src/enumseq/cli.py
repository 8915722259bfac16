"""enumseq command line: v, table, verify, asymp, derive, curves, instantons."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from math import factorial
from pathlib import Path
from typing import Callable, Optional

from . import congruences as cg
from . import curves, derivation, lines
from .asympk import DecimalSequence, fit
from .cache import CacheFile, cache_path, load_or_new
from .config import FORMATS, RunConfig
from .core.bignum import _ctx
from .reports import TheoremReport
from .sequences import FIRST_INDEX, SEQUENCES


class UsageError(Exception):
    """Bad arguments discovered after parsing; maps to exit status 2."""


# -- output ---------------------------------------------------------------------

def _emit_rows(rows: list, fmt: str, out) -> None:
    """rows: list of flat dicts with identical keys."""
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
    elif fmt == "csv":
        if rows:
            keys = sorted(rows[0])
            w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
    else:
        for row in rows:
            out.write(" ".join(str(row[k]) for k in sorted(row)) + "\n")


def _emit_doc(doc, out) -> None:
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _emit_reports(reports: list, cfg: RunConfig, out) -> int:
    for r in reports:
        if cfg.strict:
            r.asserted = True
    _emit_doc([r.to_json() for r in reports], out)
    return 1 if any(r.asserted and not r.passed for r in reports) else 0


# -- cached sequence access -------------------------------------------------------

def _cached_values(seq: str, stop: int, cfg: RunConfig, compute: Callable[[int], int]) -> CacheFile:
    start = FIRST_INDEX[seq]
    cf = load_or_new(cfg.cache_dir, seq, start)
    before = cf.count
    cf.extend_to(stop, compute)
    if cfg.cache_dir is not None and cf.count != before:
        cf.write(cache_path(cfg.cache_dir, seq))
    return cf


# -- subcommands -----------------------------------------------------------------

def cmd_v(args, cfg: RunConfig, out) -> int:
    if args.n is not None:
        lo = hi = args.n
    else:
        if args.start is None or args.stop is None:
            raise UsageError("give --n or both --from and --to")
        lo, hi = args.start, args.stop
    if lo < 0 or hi < lo:
        raise UsageError("need 0 <= from <= to")
    if args.method == "defn" and not args.weights:
        cf = _cached_values("v", hi, cfg, lines.v_defn)
        rows = [{"method": "defn", "n": n, "value": cf.get(n)} for n in range(lo, hi + 1)]
    else:
        weights = None
        if args.weights:
            if args.method != "equivariant":
                raise UsageError("--weights only applies to --method equivariant")
            weights = [int(w) for w in args.weights.split(",")]
            if lo != hi:
                raise UsageError("--weights needs a single --n")
        if weights is not None:
            rows = [{"method": "equivariant", "n": lo, "value": str(lines.compute(lo, "equivariant", weights))}]
        else:
            recs = lines.v_range(lo, hi, args.method, args.workers)
            rows = [r.to_json() for r in recs]
    _emit_rows(rows, cfg.output_format, out)
    return 0


def _sequence_value_fn(seq: str, depth_needed: int, cfg: RunConfig) -> Callable[[int], int]:
    if seq == "v":
        cf = _cached_values("v", depth_needed, cfg, lines.v_defn)
        return lambda n: int(cf.get(n))
    if seq == "nd":
        vals = curves.kontsevich(depth_needed).values
        return lambda n: vals[n - 1]
    counts = curves.extract_instantons(depth_needed)
    return lambda n: int(counts[n])


def cmd_table(args, cfg: RunConfig, out) -> int:
    if args.mod < 2:
        raise UsageError("--mod must be >= 2")
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    top = args.mod * args.depth
    table = cg.residue_table(_sequence_value_fn(args.seq, top, cfg), args.mod, args.depth)
    if cfg.output_format == "text":
        out.write(table.render() + "\n")
    else:
        rows = [{"l": l, "r": r, "value": table.entry(r, l)}
                for r in range(1, args.mod + 1) for l in range(args.depth)]
        _emit_rows(rows, cfg.output_format, out)
    return 0


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m for m in missing))


def _verify_reports(args) -> list[TheoremReport]:
    try:
        if args.theorem == "1":
            _need(args, "k")
            parts = [args.part] if args.part else cg.theorem1_applicable_parts(args.k)
            depth = args.depth or max(8, args.k + 2)
            return [cg.check_theorem1(p, args.k, depth) for p in parts]
        if args.theorem == "2.1":
            _need(args, "p")
            return [cg.check_extra1_part1(args.p)]
        if args.theorem == "2.2":
            _need(args, "r", "p")
            return [cg.check_extra1_part2(args.r, args.p)]
        if args.lemma == "cube":
            return [cg.check_divisibility_cube(range(2, (args.nmax or 100) + 1))]
        if args.lemma == "4":
            _need(args, "k", "l")
            return [cg.check_lemma4(args.k, args.l)]
        if args.lemma in ("12", "13a", "13b"):
            _need(args, "q")
            check = {"12": cg.check_lemma12, "13a": cg.check_lemma13a, "13b": cg.check_lemma13b}[args.lemma]
            js = [args.j] if args.j is not None else [1, 3, 5]
            return [check(args.q, j) for j in js]
        if args.lemma == "carl":
            _need(args, "p", "l")
            return [cg.check_lemma_carl(args.p, args.l)]
        if args.lemma == "catalan":
            return [cg.check_catalan_mod3(range(0, (args.kmax or 30) + 1))]
        if args.lemma == "periodicity":
            _need(args, "q")
            return [cg.check_periodicity_equidistribution(args.q)]
        if args.observations == "nd":
            return curves.nd_congruence_report(args.dmax or 60)
        if args.observations == "qd":
            return curves.qd_congruence_report(args.dmax or 16)
    except (ValueError, cg.InsufficientDepth) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("choose one of --theorem, --lemma, --observations")


def cmd_verify(args, cfg: RunConfig, out) -> int:
    return _emit_reports(_verify_reports(args), cfg, out)


TRANSFORMS = ("none", "log", "v", "nd")


def _transform(name: str, prec: int) -> Callable[[int, int], Decimal]:
    """Map (index, integer value) to the Decimal fed to the extrapolator."""
    ctx = _ctx(prec + 20)
    if name == "none":
        return lambda n, x: ctx.plus(Decimal(x))
    if name == "log":
        return lambda n, x: ctx.ln(Decimal(x))
    if name == "v":  # log(v_n / (2n)!)
        return lambda n, x: ctx.ln(ctx.divide(Decimal(x), Decimal(factorial(2 * n))))
    return lambda n, x: ctx.ln(ctx.divide(Decimal(x), Decimal(factorial(3 * n - 1))))


def read_sequence_file(path: Path, transform: str, prec: int, start: Optional[int] = None) -> DecimalSequence:
    cf = CacheFile.read(path)
    f = _transform(transform, prec)
    lo = cf.start if start is None else max(start, cf.start)
    vals = []
    for n in range(lo, cf.start + cf.count):
        raw = cf.get(n)
        x = int(raw) if transform != "none" else Decimal(raw)
        vals.append(_ctx(prec).plus(f(n, x)))
    return DecimalSequence(lo, vals, prec)


def cmd_asymp(args, cfg: RunConfig, out) -> int:
    if args.file is None:
        raise UsageError("--file is required")
    if args.transform not in TRANSFORMS:
        raise UsageError(f"--transform must be one of {TRANSFORMS}")
    path = Path(args.file)
    if not path.exists():
        raise UsageError(f"no such file: {path}")
    try:
        s = read_sequence_file(path, args.transform, cfg.precision, args.start)
        model = fit(s, args.variant, cfg.k, args.depth, args.max_den)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = model.to_json()
    doc["precision"] = cfg.precision
    doc["terms"] = len(s)
    _emit_doc(doc, out)
    return 0


def cmd_derive(args, cfg: RunConfig, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    result = derivation.derive(args.form, args.terms)
    if args.form == "log":
        doc = result.to_json()
    else:
        doc = {"coefficients": [str(c) for c in result], "constant": None, "form": args.form}
    _emit_doc(doc, out)
    return 0


def _dump_sequence(seq: str, values, cfg: RunConfig) -> None:
    if cfg.cache_dir is not None:
        CacheFile(seq, 1, [str(v) for v in values]).write(cache_path(cfg.cache_dir, seq))


def cmd_curves(args, cfg: RunConfig, out) -> int:
    if args.dmax < 1:
        raise UsageError("--dmax must be >= 1")
    counts = curves.kontsevich(args.dmax)
    _dump_sequence("nd", counts.values, cfg)
    if args.report:
        if args.dmax < 10:
            raise UsageError("--report needs --dmax >= 10")
        return _emit_reports(curves.nd_congruence_report(args.dmax), cfg, out)
    if args.asymptotics:
        if args.dmax < 100:
            raise UsageError("--asymptotics needs --dmax >= 100")
        _emit_doc(curves.nd_asymptotics(args.dmax, cfg.precision, cfg.k or 8).to_json(), out)
        return 0
    _emit_rows([{"d": d, "value": str(v)} for d, v in enumerate(counts.values, start=1)],
               cfg.output_format, out)
    return 0


def cmd_instantons(args, cfg: RunConfig, out) -> int:
    if args.dmax < 1:
        raise UsageError("--dmax must be >= 1")
    counts = curves.extract_instantons(args.dmax)
    if args.report:
        if args.dmax < 16:
            raise UsageError("--report needs --dmax >= 16")
        return _emit_reports(curves.qd_congruence_report(args.dmax), cfg, out)
    if all(counts.integral):
        _dump_sequence("qd", counts.values, cfg)
    rows = [{"d": d, "integral": ok, "value": str(v)}
            for d, (v, ok) in enumerate(zip(counts.values, counts.integral), start=1)]
    _emit_rows(rows, cfg.output_format, out)
    return 0 if all(counts.integral) else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", "--prec", dest="precision", type=int, help="decimal digits for numeric work (>= 20)")
    common.add_argument("--k", type=int, help="asymp_k order / modulus, depending on the command")
    common.add_argument("--format", dest="output_format", choices=FORMATS)
    common.add_argument("--cache-dir", help="sequence cache directory ('' disables caching)")
    common.add_argument("--strict", action="store_true", default=None,
                        help="treat observations as assertions")

    p = argparse.ArgumentParser(prog="enumseq", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("v", parents=[common], help="numbers of lines on hypersurfaces")
    v.add_argument("--n", type=int)
    v.add_argument("--from", dest="start", type=int)
    v.add_argument("--to", dest="stop", type=int)
    v.add_argument("--method", default="defn", choices=lines.METHODS + ("all",))
    v.add_argument("--weights", help="comma-separated torus weights for --method equivariant")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_v)

    t = sub.add_parser("table", parents=[common], help="residue table of a sequence")
    t.add_argument("--seq", choices=SEQUENCES, default="v")
    t.add_argument("--mod", type=int, required=True)
    t.add_argument("--depth", type=int, default=8)
    t.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", parents=[common], help="check a congruence statement")
    sel = ver.add_mutually_exclusive_group(required=True)
    sel.add_argument("--theorem", choices=("1", "2.1", "2.2"))
    sel.add_argument("--lemma", choices=("cube", "4", "12", "13a", "13b", "carl", "catalan", "periodicity"))
    sel.add_argument("--observations", choices=("nd", "qd"))
    for name in ("part", "depth", "p", "r", "l", "q", "j", "nmax", "kmax", "dmax"):
        ver.add_argument(f"--{name}", type=int)
    ver.set_defaults(func=cmd_verify)

    a = sub.add_parser("asymp", parents=[common], help="extrapolate an asymptotic expansion")
    a.add_argument("--file", help="sequence file with 'index value' lines")
    a.add_argument("--variant", default="plain", choices=("plain", "I", "II", "III"))
    a.add_argument("--depth", type=int, default=3)
    a.add_argument("--transform", default="none", choices=TRANSFORMS,
                   help="none | log | v: log(x/(2n)!) | nd: log(x/(3n-1)!)")
    a.add_argument("--start", type=int, help="first index to use")
    a.add_argument("--max-den", type=int, default=10 ** 4)
    a.set_defaults(func=cmd_asymp)

    d = sub.add_parser("derive", parents=[common], help="exact asymptotic expansion of v_n")
    d.add_argument("--form", choices=derivation.FORMS, default="D")
    d.add_argument("--terms", type=int, default=7)
    d.set_defaults(func=cmd_derive)

    c = sub.add_parser("curves", parents=[common], help="rational plane curves n_d")
    c.add_argument("--dmax", type=int, required=True)
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--report", action="store_true")
    mode.add_argument("--asymptotics", action="store_true")
    c.set_defaults(func=cmd_curves)

    i = sub.add_parser("instantons", parents=[common], help="quintic instanton numbers q_d")
    i.add_argument("--dmax", type=int, required=True)
    i.add_argument("--report", action="store_true")
    i.set_defaults(func=cmd_instantons)
    return p


def main(argv: Optional[list] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.resolve({name: getattr(args, name, None)
                                 for name in ("precision", "k", "output_format", "cache_dir", "strict")})
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args, cfg, out)
    except UsageError as exc:
        parser.error(str(exc))


def run(argv: list) -> tuple:
    """(exit status, stdout text) without touching the real stdout; handy in tests."""
    buf = io.StringIO()
    try:
        status = main(argv, buf)
    except SystemExit as exc:
        status = exc.code
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
