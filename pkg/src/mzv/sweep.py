"""Cross-module verification sweeps.

Two profiles: quick targets a few minutes (weights <= 5, purity n <= 5,
precision 30), full targets well under two hours (weights <= 7, purity
n <= 7, precision 50).  Every row is an independent check with its own
timing; a crash in one check is recorded as a failure, not a crash of the
sweep.
"""

import itertools
import tempfile
import time
from fractions import Fraction

import mpmath as mp

from . import words
from .chen.verify import (extension_class_check, sample_ideal_elements,
                          verify_half_integrality, verify_product_formula,
                          verify_vanishing_on_I)
from .dims import check_counting_lemma, d_sequence, gf_coefficients
from .evaluator import eval_chen, eval_holder
from .intrel import lll_cross_check, pslq
from .purity import purity_report
from .relations import all_relations, upper_bound, verify_all

PROFILES = {
    "quick": {
        "max_weight": 5,
        "purity_max": 5,
        "prec": 30,
        "verify_prec": 30,
        "paths_n": (2,),
        "ch_zs": (Fraction(2),),
        "pslq_negative": False,
        "samples": 3,
    },
    "full": {
        "max_weight": 7,
        "purity_max": 7,
        "prec": 50,
        "verify_prec": 40,
        "paths_n": (2, 3),
        "ch_zs": (Fraction(2), Fraction(3), Fraction(-1), Fraction(5, 2)),
        "pslq_negative": True,
        "samples": 5,
    },
}


def _check_dims_sequence(p):
    N = 30
    rec = d_sequence(N)
    gf = gf_coefficients(N)
    return rec == gf, "d_0..d_%d recurrence matches generating function" % N


def _check_counting_lemma(p):
    rows = check_counting_lemma(30, gapset_limit=14)
    ok = all(r["ok"] for r in rows)
    return ok, "dimension identity to n=30, gap sets to n=14"


def _check_purity(p):
    totals = []
    for n in range(2, p["purity_max"] + 1):
        rep = purity_report(n)
        if not rep["all_pass"]:
            return False, "failure at n=%d: %s" % (n, rep["failures"][:3])
        totals.append(rep["total_dim"])
    return True, "totals %s for n=2..%d" % (totals, p["purity_max"])


def _check_eval_anchors(p):
    prec = p["prec"]
    with mp.workdps(prec + 15):
        z2 = eval_holder((2,), prec).value
        gap2 = abs(z2.val - mp.pi ** 2 / 6)
        z12 = eval_holder((1, 2), prec).value
        gap12 = abs(z12.val - mp.zeta(3))
        tol = mp.mpf(10) ** (-(prec - 2))
        ok = gap2 < tol and gap12 < tol
        return ok, "zeta(2) gap %s, zeta(1,2)-zeta(3) gap %s" % (
            mp.nstr(gap2, 3), mp.nstr(gap12, 3))


def _check_backend_agreement(p):
    worst = mp.mpf(0)
    count = 0
    with mp.workdps(45):
        for n in range(2, 6):
            for idx in words.enumerate_admissible_indices(n):
                a = eval_holder(idx, 30)
                b = eval_chen(idx, 10, cap=5)
                gap = abs(a.value.val - b.value.val)
                tol = a.error_bound + b.error_bound
                count += 1
                if gap > tol:
                    return False, "disagreement at %s: gap %s > tol %s" % (
                        idx, mp.nstr(gap, 3), mp.nstr(tol, 3))
                worst = max(worst, gap)
    return True, "%d indices, worst gap %s" % (count, mp.nstr(worst, 3))


def _check_relations(p):
    details = []
    ds = d_sequence(p["max_weight"])
    for n in range(2, p["max_weight"] + 1):
        rank, U = upper_bound(n)
        if not (ds[n] <= U <= 2 ** (n - 2)):
            return False, "bound sandwich broken at n=%d: U=%d" % (n, U)
        # determinism: reversed row order must give the same rank
        from .linalg import exact_rank
        vecs = all_relations(n)
        r2 = exact_rank([v.coeffs for v in reversed(vecs)])
        if r2 != rank:
            return False, "rank depends on row order at n=%d" % n
        details.append("U_%d=%d" % (n, U))
    tol = mp.mpf(10) ** (-(p["verify_prec"] - 5))
    for n in range(4, p["max_weight"] + 1):
        ok, worst = verify_all(n, prec=p["verify_prec"], tol=tol)
        if not ok:
            return False, "numeric residual %s at n=%d" % (
                mp.nstr(worst, 3), n)
    return True, " ".join(details)


def _check_pslq(p):
    with mp.workdps(75):
        z4 = eval_holder((4,), 60).value
        z2 = eval_holder((2,), 60).value
        xs = [z4, z2 * z2]
    r = pslq(xs, max_norm=10 ** 6, prec=60)
    if r.status != "found" or r.coefficients != [5, -2]:
        return False, "expected (5, -2), got %r" % (r,)
    if abs(r.residual.val) > mp.mpf(10) ** -45:
        return False, "residual too large: %s" % mp.nstr(r.residual.val, 3)
    if not lll_cross_check(xs, r.coefficients, 60):
        return False, "lattice cross-check rejected the relation"
    detail = "5 zeta(4) - 2 zeta(2)^2 confirmed"
    if p["pslq_negative"]:
        with mp.workdps(95):
            z5 = eval_holder((5,), 80).value
            z23 = eval_holder((2, 3), 80).value
        r2 = pslq([z5, z23], max_norm=10 ** 6, prec=80)
        if r2.status != "none_below_bound":
            return False, "unexpected relation %r" % (r2,)
        detail += "; zeta(5), zeta(2,3): none below 10^6"
    return True, detail


def _check_paths_props(p):
    worst = mp.mpf(0)
    for n in p["paths_n"]:
        prec = 8
        for sample in sample_ideal_elements(n, p["samples"]):
            for w in _all_words(n):
                v = verify_vanishing_on_I(n, sample, w, prec)
                worst = max(worst, abs(v.val))
                if abs(v.val) > mp.mpf(10) ** -6:
                    return False, "vanishing fails at n=%d word %s: %s" % (
                        n, w, mp.nstr(abs(v.val), 3))
        for eps in _all_words(n):
            for s in _all_words(n):
                val = verify_product_formula([int(b) for b in s], eps, prec)
                expect = (2 * mp.pi * mp.mpc(0, 1)) ** n if s == eps else 0
                gap = abs(val.val - expect)
                worst = max(worst, gap)
                if gap > mp.mpf(10) ** -6:
                    return False, "product formula fails: eps=%s g=%s" % (
                        eps, s)
        for eps in words.enumerate_admissible(n):
            for s in _all_words(n - 1):
                _, _, res = verify_half_integrality(
                    [int(b) for b in s], eps, prec)
                worst = max(worst, res)
                if res > mp.mpf(10) ** -4:
                    return False, "half-integrality fails: eps=%s g=%s" % (
                        eps, s)
    return True, "n in %s, worst residual %s" % (p["paths_n"],
                                                 mp.nstr(worst, 3))


def _all_words(n):
    return [tuple(t) for t in itertools.product((0, 1), repeat=n)]


def _check_extension_class(p):
    worst = mp.mpf(0)
    with mp.workdps(55):
        for z in p["ch_zs"]:
            lhs, rhs = extension_class_check(z, 40)
            gap = abs(lhs.val - mp.mpf(rhs.numerator) / rhs.denominator)
            worst = max(worst, gap)
            if gap > mp.mpf(10) ** -30:
                return False, "z=%s gap %s" % (z, mp.nstr(gap, 3))
    return True, "z in %s, worst gap %s" % (
        [str(z) for z in p["ch_zs"]], mp.nstr(worst, 3))


def _check_cache_roundtrip(p):
    from .cache import ValueCache, cached_mzv, mzv_key
    with tempfile.TemporaryDirectory() as d:
        c = ValueCache(d)
        _, hit1 = cached_mzv(c, (2,), 20, "holder")
        _, hit2 = cached_mzv(ValueCache(d), (2,), 20, "holder")
        rec = ValueCache(d).get("mzv", mzv_key((2,), "holder"), 20)
        with open(c.path, "a") as f:
            f.write("not json at all\n")
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            again = ValueCache(d).get("mzv", mzv_key((2,), "holder"), 20)
    ok = (not hit1 and hit2 and rec is not None and again is not None
          and again["value"] == rec["value"])
    return ok, "miss, hit, corrupt-line tolerance"


_CHECKS = [
    ("dims_sequence", _check_dims_sequence),
    ("counting_lemma", _check_counting_lemma),
    ("purity", _check_purity),
    ("eval_anchors", _check_eval_anchors),
    ("backend_agreement", _check_backend_agreement),
    ("relations", _check_relations),
    ("pslq", _check_pslq),
    ("paths_props", _check_paths_props),
    ("extension_class", _check_extension_class),
    ("cache_roundtrip", _check_cache_roundtrip),
]


def run_sweep(profile):
    if profile not in PROFILES:
        raise ValueError("unknown profile %r" % (profile,))
    p = PROFILES[profile]
    rows = []
    for name, fn in _CHECKS:
        t0 = time.time()
        try:
            ok, detail = fn(p)
        except Exception as exc:
            ok, detail = False, "crashed: %r" % (exc,)
        rows.append({
            "name": name,
            "pass": bool(ok),
            "seconds": round(time.time() - t0, 2),
            "detail": detail,
        })
    return {
        "profile": profile,
        "rows": rows,
        "all_pass": all(r["pass"] for r in rows),
    }
