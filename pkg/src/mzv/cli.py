"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Reports
print deterministic pretty JSON (sorted keys, no timestamps); --csv adds
a delimited copy of the table plus a rendered PNG with the same stem.
"""

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

import mpmath as mp

from . import words
from .cache import ValueCache, cached_mzv, default_cache_dir
from .dims import check_counting_lemma, d_sequence
from .precision import PrecReal


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _fail(message):
    print(message, file=sys.stderr)
    return 1


def _parse_index(text):
    try:
        idx = tuple(int(p) for p in text.split(",") if p != "")
        if not idx or any(k < 1 for k in idx):
            raise ValueError
    except ValueError:
        raise SystemExit2("--index wants a comma list of positive "
                          "integers, got %r" % text)
    return idx


class SystemExit2(Exception):
    """Usage error detected after argparse; mapped to exit code 2."""


def _write_table(path, rows, fields):
    with open(path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=fields, extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow(r)


def _png_path(csv_path):
    stem, _ = os.path.splitext(csv_path)
    return stem + ".png"


def cmd_eval(args):
    idx = _parse_index(args.index)
    if not words.is_admissible_index(idx):
        raise SystemExit2("index %s is not admissible" % (args.index,))
    cache = ValueCache(default_cache_dir(args.cache_dir))
    value, hit = cached_mzv(cache, idx, args.prec, args.backend)
    if hit:
        print("cache hit", file=sys.stderr)
    text = mp.nstr(value.value.val, args.prec)
    if args.json:
        _emit({
            "backend": args.backend,
            "bound": mp.nstr(value.error_bound, 5)
            if value.error_bound else "0",
            "index": ",".join(map(str, idx)),
            "precision": args.prec,
            "value": text,
        })
    else:
        print(text)
    return 0


def cmd_dims(args):
    if args.check_lemma:
        rows = check_counting_lemma(args.max, gapset_limit=14)
        ok = all(r["ok"] for r in rows)
        out_rows = [{"n": r["n"], "d": r["d"],
                     "op_sum_even": r["op_sum_even"],
                     "ok": r["ok"]} for r in rows]
    else:
        ds = d_sequence(args.max)
        ok = True
        out_rows = [{"n": n, "d": ds[n]} for n in range(args.max + 1)]
    _emit(out_rows)
    if args.csv:
        _write_table(args.csv, out_rows, list(out_rows[0].keys()))
        from .figures import render_dims
        render_dims(out_rows, _png_path(args.csv))
    return 0 if ok else 1


def cmd_relations(args):
    from .relations import all_relations, upper_bound, verify_all
    n = args.weight
    if n < 2:
        raise SystemExit2("--weight must be at least 2")
    use_duality = not args.no_duality
    rank, U = upper_bound(n, use_duality)
    vecs = all_relations(n, use_duality)
    ds = d_sequence(n)
    all_verified = None
    if args.verify_numeric:
        ok, worst = verify_all(n, prec=args.verify_numeric,
                               use_duality=use_duality)
        all_verified = bool(ok)
    report = {
        "n": n,
        "num_words": len(words.enumerate_admissible(n)),
        "num_relations": len(vecs),
        "rank": rank,
        "upper_bound": U,
        "d_n": ds[n],
        "all_verified": all_verified,
    }
    _emit(report)
    if args.csv:
        _write_table(args.csv, [report], list(report.keys()))
        from .figures import render_relations
        render_relations([report], _png_path(args.csv))
    if args.verify_numeric and not all_verified:
        return 1
    return 0


def cmd_purity(args):
    from .purity import purity_report
    if args.n < 2:
        raise SystemExit2("--n must be at least 2")
    rep = purity_report(args.n)
    _emit({
        "all_pass": rep["all_pass"],
        "n": rep["n"],
        "total_dim": rep["total_dim"],
        "total_expected": rep["total_expected"],
        "words": rep["words"],
    })
    if args.csv:
        by_k = {}
        for r in rep["results"]:
            row = by_k.setdefault(r["k"], {"word_length": r["k"],
                                           "cohomology_dim": 0,
                                           "expected": 0})
            row["cohomology_dim"] += sum(r["cohomology"])
            row["expected"] += 1
        rows = [by_k[k] for k in sorted(by_k)]
        _write_table(args.csv, rows,
                     ["word_length", "cohomology_dim", "expected"])
        from .figures import render_purity
        render_purity(rows, _png_path(args.csv))
    return 0 if rep["all_pass"] else 1


def _resolve_pslq_item(item, prec, cache):
    parts = item.split("*")
    with mp.workdps(prec + 12):
        acc = PrecReal(1, 0)
        for part in parts:
            part = part.strip()
            if part.startswith("zeta:"):
                idx = _parse_index(part[len("zeta:"):])
                val, _ = cached_mzv(cache, idx, prec, "holder")
                acc = acc * val.value
            else:
                try:
                    acc = acc * PrecReal(
                        mp.mpf(part),
                        abs(mp.mpf(part)) * mp.mpf(10) ** (-(prec + 5)))
                except ValueError:
                    raise SystemExit2("cannot parse value %r" % part)
    return acc


def _split_values(text):
    """Comma-split --values, except that a bare integer fragment continues
    the index of a preceding zeta: entry (so zeta:2,3 is one input); write
    a literal with a decimal point to keep it standalone after a zeta:."""
    items = []
    for frag in text.split(","):
        frag = frag.strip()
        if not frag:
            continue
        if items and frag.isdigit() and \
                items[-1].split("*")[-1].strip().startswith("zeta:"):
            items[-1] += "," + frag
        else:
            items.append(frag)
    return items


def cmd_pslq(args):
    from .intrel import InsufficientPrecision, lll_cross_check, pslq
    cache = ValueCache(default_cache_dir(args.cache_dir))
    items = _split_values(args.values)
    if len(items) < 2:
        raise SystemExit2("--values wants at least two comma-separated "
                          "entries")
    xs = [_resolve_pslq_item(s, args.prec, cache) for s in items]
    try:
        r = pslq(xs, max_norm=args.max_norm, prec=args.prec)
    except InsufficientPrecision as exc:
        return _fail("insufficient precision: %s" % exc)
    report = {
        "status": r.status,
        "coefficients": r.coefficients,
        "norm_bound": r.norm_bound,
        "precision": r.precision_used,
        "residual": mp.nstr(abs(r.residual.val), 5),
    }
    confirmed = True
    if r.status == "found":
        confirmed = lll_cross_check(xs, r.coefficients, args.prec)
        report["lll_confirmed"] = confirmed
    _emit(report)
    return 0 if confirmed else 1


def cmd_paths(args):
    if args.action == "verify":
        return _paths_verify(args)
    return _paths_ch(args)


def _paths_verify(args):
    from .chen.verify import (sample_ideal_elements,
                              verify_half_integrality,
                              verify_product_formula,
                              verify_vanishing_on_I)
    import itertools
    n, prec = args.n, args.prec
    if n < 2:
        raise SystemExit2("--n must be at least 2")
    allw = [tuple(t) for t in itertools.product((0, 1), repeat=n)]
    cases = []
    if args.prop == 1:
        tol = mp.mpf(10) ** -6
        for i, g in enumerate(sample_ideal_elements(n, args.samples)):
            for w in allw:
                v = verify_vanishing_on_I(n, g, w, prec)
                cases.append({"sample": i, "word": "".join(map(str, w)),
                              "residual": mp.nstr(abs(v.val), 4),
                              "pass": bool(abs(v.val) <= tol)})
    elif args.prop == 2:
        tol = mp.mpf(10) ** -6
        with mp.workdps(prec + 15):
            unit = (2 * mp.pi * mp.mpc(0, 1)) ** n
            for eps in allw:
                for s in allw:
                    v = verify_product_formula(list(s), eps, prec)
                    expect = unit if s == eps else 0
                    gap = abs(v.val - expect)
                    cases.append({
                        "word": "".join(map(str, eps)),
                        "loops": "".join(map(str, s)),
                        "residual": mp.nstr(gap, 4),
                        "pass": bool(gap <= tol)})
    else:
        tol = mp.mpf(10) ** -4
        loops = [tuple(t) for t in
                 itertools.product((0, 1), repeat=n - 1)]
        for eps in words.enumerate_admissible(n):
            for s in loops:
                _, mult, res = verify_half_integrality(list(s), eps, prec)
                cases.append({
                    "word": "".join(map(str, eps)),
                    "loops": "".join(map(str, s)),
                    "multiple": mult,
                    "residual": mp.nstr(res, 4),
                    "pass": bool(res <= tol)})
    ok = all(c["pass"] for c in cases)
    _emit({"prop": args.prop, "n": n, "precision": prec,
           "cases": len(cases), "all_pass": ok,
           "failures": [c for c in cases if not c["pass"]]})
    return 0 if ok else 1


def _paths_ch(args):
    from .chen.verify import extension_class_check
    try:
        z = Fraction(args.z)
    except (ValueError, ZeroDivisionError):
        raise SystemExit2("--z wants a rational like 5/2, got %r" % args.z)
    if z in (0, 1):
        raise SystemExit2("--z must avoid the singularities 0 and 1")
    with mp.workdps(args.prec + 15):
        lhs, rhs = extension_class_check(z, args.prec)
        rhs_val = mp.mpf(rhs.numerator) / rhs.denominator
        gap = abs(lhs.val - rhs_val)
        tol = mp.mpf(10) ** -30
        ok = bool(gap <= tol)
        _emit({
            "z": str(z),
            "lhs": mp.nstr(lhs.val, args.prec),
            "rhs": str(rhs),
            "abs_error": mp.nstr(gap, 5),
            "pass": ok,
        })
    return 0 if ok else 1


def cmd_sweep(args):
    from .sweep import run_sweep
    report = run_sweep(args.profile)
    _emit(report)
    if args.csv:
        rows = report["rows"]
        _write_table(args.csv, rows, ["name", "pass", "seconds", "detail"])
        from .figures import render_sweep
        render_sweep(rows, _png_path(args.csv))
    return 0 if report["all_pass"] else 1


def cmd_cache(args):
    cache = ValueCache(default_cache_dir(args.cache_dir))
    _emit(cache.stats())
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="mzv",
        description="multiple zeta value toolkit: dimensions, relations, "
                    "high-precision evaluation, loop pairings")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("eval", help="evaluate one zeta value")
    q.add_argument("--index", required=True,
                   help="comma list, e.g. 1,3 for zeta(1,3)")
    q.add_argument("--prec", type=int, default=50)
    q.add_argument("--backend", choices=("holder", "chen", "series"),
                   default="holder")
    q.add_argument("--json", action="store_true")
    q.add_argument("--cache-dir", default=None)
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("dims", help="dimension bound sequence d_n")
    q.add_argument("--max", type=int, default=30)
    q.add_argument("--check-lemma", action="store_true",
                   help="verify the even-part counting identity and "
                        "gap-set enumeration")
    q.add_argument("--csv", default=None)
    q.set_defaults(func=cmd_dims)

    q = sub.add_parser("relations",
                       help="relation rank and the bound U_n")
    q.add_argument("--weight", type=int, required=True)
    q.add_argument("--no-duality", action="store_true")
    q.add_argument("--verify-numeric", type=int, default=None,
                   metavar="PREC")
    q.add_argument("--csv", default=None)
    q.set_defaults(func=cmd_relations)

    q = sub.add_parser("purity", help="cohomology purity certification")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--csv", default=None)
    q.set_defaults(func=cmd_purity)

    q = sub.add_parser("pslq", help="integer relation detection")
    q.add_argument("--values", required=True,
                   help="comma list; entries are decimals or zeta:1,3 "
                        "index specs, joined with * to multiply; a bare "
                        "integer after a zeta: entry extends its index")
    q.add_argument("--max-norm", type=int, default=10 ** 6)
    q.add_argument("--prec", type=int, default=60)
    q.add_argument("--cache-dir", default=None)
    q.set_defaults(func=cmd_pslq)

    q = sub.add_parser("paths", help="loop pairing verification")
    qq = q.add_subparsers(dest="action", required=True)
    v = qq.add_parser("verify", help="run one pairing property")
    v.add_argument("--prop", type=int, choices=(1, 2, 3), required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--prec", type=int, default=8)
    v.add_argument("--samples", type=int, default=5)
    v.set_defaults(func=cmd_paths)
    c = qq.add_parser("ch", help="extension class identity for one z")
    c.add_argument("--z", required=True)
    c.add_argument("--prec", type=int, default=40)
    c.set_defaults(func=cmd_paths)

    q = sub.add_parser("sweep", help="cross-module verification sweep")
    q.add_argument("profile", choices=("quick", "full"))
    q.add_argument("--csv", default=None)
    q.set_defaults(func=cmd_sweep)

    q = sub.add_parser("cache", help="cache statistics")
    q.add_argument("--cache-dir", default=None)
    q.set_defaults(func=cmd_cache)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
