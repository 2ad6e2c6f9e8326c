"""Transport of the flat connection sum_l e_l dx/(x - p_l) along paths.

Conventions, fixed once for the whole package:

* New letters multiply on the left: the word coefficient obeys
  dF_w = omega_{w[0]} F_{w[1:]}, so the FIRST letter of a word sits at the
  arrival end of the path.
* Consequently transports compose as F(later piece) * F(earlier piece),
  and a product expression written left to right is traversed right to left
  (the rightmost factor first), matching the composition used for loops.

Each straight step [a, b] expands every form in a geometric series around a:
omega_l = sum_j c_{l,j} s^j ds with c_{l,j} = (h/(a-p_l)) (-h/(a-p_l))^j and
h = b - a, valid because steps are kept shorter than STEP_RATIO times the
distance to the nearest pole. Word coefficients are then polynomials in the
step parameter s, built by one convolution-and-integrate per word. The
polynomial arithmetic runs in fixed-point integers (value = int / 2^S),
which is several times faster than mpc objects at these sizes.

Error accounting per step and word (k = word length, q = max step ratio,
L = -log(1-q) >= integral of |omega| over the step):

* truncating each omega at degree M:  <= k q^(M+1) L^k / k!   (each factor
  and each tail is dominated by q/(1-qs); one tail, k-1 full factors,
  k choices);
* inherited error from the inner word: <= err_inner * integral of the
  truncated |omega| (computed exactly as W_l);
* dropped polynomial degrees and fixed-point truncations are accumulated
  explicitly as they occur.

Bounds are kept as Python floats (they only need to be upper bounds) and
enter the PrecComplex error slots when a step is wrapped into an NCSeries.
"""

import math
from fractions import Fraction

import mpmath as mp
from mpmath.libmp import to_fixed

from ..precision import PrecComplex, as_mpc
from .paths import Path, Segment, PathThroughSingularity, segment_path
from .series import NCSeries

STEP_RATIO = 0.4
MAX_STEPS = 200000


class PrecisionNotReached(ArithmeticError):
    """Raised when a transport cannot certify the requested bound."""

    def __init__(self, requested, achieved):
        self.requested = requested
        self.achieved = achieved
        super().__init__(
            "requested coefficient bounds 1e-%d, achieved only %s"
            % (requested, mp.nstr(achieved, 5)))


def compose(F, G):
    """Series of a composite path, later factor first: coeff of w is the
    sum of coeff_F(u) coeff_G(v) over deconcatenations w = uv."""
    return F * G


def _seg_distance(p, a, b):
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0:
        return abs(p - a)
    t = ((p - a) * mp.conj(ab)).real / denom
    t = max(0, min(1, t))
    return abs(p - (a + t * ab))


def _steps_on_chord(a, b, poles):
    steps = []
    total = abs(b - a)
    if total == 0:
        return steps
    direction = (b - a) / total
    cur = a
    traveled = mp.mpf(0)
    while len(steps) < MAX_STEPS:
        d = min(abs(cur - p) for p in poles)
        if d == 0:
            raise PathThroughSingularity("step landed on a pole at %s"
                                         % mp.nstr(cur, 8))
        allowed = STEP_RATIO * d
        remaining = total - traveled
        if remaining <= allowed:
            steps.append((cur, b))
            return steps
        nxt = cur + direction * allowed
        steps.append((cur, nxt))
        cur = nxt
        traveled += allowed
    raise PathThroughSingularity("chord from %s to %s needs too many steps"
                                 % (mp.nstr(a, 8), mp.nstr(b, 8)))


def _step_series(a, b, poles, cap, tol, nletters, wordlists):
    h = b - a
    S = mp.mp.prec + 20
    assert S < 900, "working precision too high for float error bookkeeping"
    eps_fp = math.ldexp(1.0, -S)
    work_ulp = math.ldexp(1.0, -mp.mp.prec)

    csr, csi, Wl, taill = [], [], [], []
    for l in range(nletters):
        z = h / (a - poles[l])
        q = float(abs(z))
        assert q < 0.5, "step ratio exceeded"
        M = max(1, int(math.ceil(math.log(1.8 / tol) / math.log(1.0 / q))))
        rl, il = [], []
        c = z
        wsum = 0.0
        for j in range(M + 1):
            rl.append(to_fixed(c.real._mpf_, S))
            il.append(to_fixed(c.imag._mpf_, S))
            wsum += q ** (j + 1) / (j + 1)
            c = c * (-z)
        csr.append(rl)
        csi.append(il)
        Wl.append(wsum)
        taill.append(q ** (M + 2) / ((M + 2) * (1.0 - q)))
    D = max(len(rl) for rl in csr) - 1 + cap + 6

    polys = {(): ([1 << S], [0])}
    errs = {(): 0.0}
    abssums = {(): 1.0}
    out = {}
    for k in range(1, cap + 1):
        for rest in wordlists[k - 1]:
            pr, pi_ = polys[rest]
            lenp = len(pr)
            err_r = errs[rest]
            abs_r = abssums[rest]
            for l in range(nletters):
                w = (l,) + rest
                cr_list = csr[l]
                ci_list = csi[l]
                Ml = len(cr_list) - 1
                resr = [0] * (Ml + lenp)
                resi = [0] * (Ml + lenp)
                for i in range(Ml + 1):
                    cr = cr_list[i]
                    ci = ci_list[i]
                    for j in range(lenp):
                        m = i + j
                        ar = pr[j]
                        ai = pi_[j]
                        resr[m] += (cr * ar - ci * ai) >> S
                        resi[m] += (cr * ai + ci * ar) >> S
                keep = min(len(resr), D)
                qr = [0] * (keep + 1)
                qi = [0] * (keep + 1)
                dropf = 0.0
                for m in range(keep):
                    qr[m + 1] = resr[m] // (m + 1)
                    qi[m + 1] = resi[m] // (m + 1)
                for m in range(keep, len(resr)):
                    dropf += (math.hypot(float(resr[m]), float(resi[m]))
                              * eps_fp / (m + 1))
                slop = 1.5 * eps_fp * ((Ml + 1) * lenp + keep + 2)
                err_w = (dropf + Wl[l] * err_r + taill[l] * abs_r + slop)
                if k < cap:
                    polys[w] = (qr, qi)
                    errs[w] = err_w
                    abssums[w] = err_w + sum(
                        math.hypot(float(x), float(y)) * eps_fp
                        for x, y in zip(qr, qi))
                out[w] = (sum(qr), sum(qi), err_w)

    F = NCSeries(cap, nletters)
    F.coeffs[()] = PrecComplex(1, 0)
    for w, (vr, vi, err_w) in out.items():
        val = mp.mpc(mp.ldexp(mp.mpf(vr), -S), mp.ldexp(mp.mpf(vi), -S))
        err = err_w + 4.0 * work_ulp * (1.0 + abs(float(mp.ldexp(
            mp.mpf(vr if abs(vr) > abs(vi) else vi), -S))))
        F.coeffs[w] = PrecComplex(val, err)
    return F


def _wordlists(cap, nletters):
    lists = [[()]]
    for _ in range(cap):
        lists.append([(l,) + w for w in lists[-1] for l in range(nletters)])
    return lists


def transport(path, cap, prec, poles=(0, 1)):
    """NCSeries of the path; coefficient of w is the iterated integral of
    the forms dx/(x - poles[w[i]]), first letter at the arrival end."""
    if path.reg_start or path.reg_end:
        raise ValueError("path has regularized endpoints; "
                         "use transport_regularized")
    nletters = len(poles)
    with mp.workdps(prec + 12 + 3 * cap):
        poles_m = [as_mpc(p) for p in poles]
        chords = path.chords()
        thresh = mp.mpf(2) ** (-(mp.mp.prec * 2) // 3)
        for p in poles_m:
            if abs(chords[0][0] - p) == 0 or abs(chords[-1][1] - p) == 0:
                raise PathThroughSingularity(
                    "endpoint sits on the pole at %s" % mp.nstr(p, 5))
        steps = []
        for u, v in chords:
            for p in poles_m:
                d = _seg_distance(p, u, v)
                if d < thresh * (1 + abs(u) + abs(v)):
                    raise PathThroughSingularity(
                        "chord passes within %s of the pole at %s"
                        % (mp.nstr(d, 3), mp.nstr(p, 5)))
            steps.extend(_steps_on_chord(u, v, poles_m))
        tol = 10.0 ** (-(prec + 6)) / max(1, len(steps))
        wordlists = _wordlists(cap, nletters)
        F = NCSeries.unit(cap, nletters)
        for x0, x1 in steps:
            F = _step_series(x0, x1, poles_m, cap, tol, nletters,
                             wordlists) * F
    bound = F.max_err()
    if bound > mp.mpf(10) ** (-prec):
        raise PrecisionNotReached(prec, bound)
    return F


# ---------------------------------------------------------------------------
# Regularized endpoints: shrink by delta, extrapolate the constant term.
# ---------------------------------------------------------------------------

def extrapolate_constant(deltas, vals, bounds, terms):
    """Extract the delta -> 0 constant of a family of values assumed to
    follow sum over (m, j) in terms of c_{mj} delta^m log^j(1/delta).

    terms[0] must be (0, 0). Two rung windows (dropping the last or the
    first rung) each yield dual weights x with sum_k x_k phi_b(delta_k) =
    [b == 0]; twice the window gap is charged to the error bound alongside
    the weighted value bounds. The doubling matters: the windows share all
    but two rungs, so their gap reads common-mode model error at a
    discount, and with minimal redundancy the discount reaches about 1.8.
    Returns (value, bound, gap).
    """
    R = len(vals)
    B = len(terms)
    assert terms[0] == (0, 0)
    if R < B + 2:
        raise ValueError("need at least %d rungs, got %d" % (B + 2, R))
    with mp.workdps(mp.mp.dps + 40):
        Ls = [-mp.log(d) for d in deltas]
        rows = [[mp.mpf(deltas[k]) ** m * Ls[k] ** j for (m, j) in terms]
                for k in range(R)]

        def weights(idx):
            Mm = mp.matrix(len(idx), B)
            for r, k in enumerate(idx):
                for b in range(B):
                    Mm[r, b] = rows[k][b]
            scales = []
            for b in range(B):
                s = max(abs(Mm[r, b]) for r in range(len(idx)))
                scales.append(s if s > 0 else mp.mpf(1))
                for r in range(len(idx)):
                    Mm[r, b] /= scales[b]
            Q, Rt = mp.qr(Mm, mode='skinny')
            # minimal-norm x with Mm^T x = e_0 / scale_0: x = Q z,
            # Rt^T z = rhs solved by forward substitution
            rhs = [mp.mpf(0)] * B
            rhs[0] = 1 / scales[0]
            z = [mp.mpf(0)] * B
            for b in range(B):
                acc = rhs[b]
                for c in range(b):
                    acc -= Rt[c, b] * z[c]
                z[b] = acc / Rt[b, b]
            return [sum(Q[r, b] * z[b] for b in range(B))
                    for r in range(len(idx))]

        idx_a = list(range(R - 1))
        idx_b = list(range(1, R))
        xa = weights(idx_a)
        xb = weights(idx_b)
        c0a = sum((x * vals[k] for x, k in zip(xa, idx_a)), mp.mpc(0))
        c0b = sum((x * vals[k] for x, k in zip(xb, idx_b)), mp.mpc(0))
        gap = abs(c0a - c0b)
        bnd = sum((abs(x) * bounds[k] for x, k in zip(xb, idx_b)),
                  mp.mpf(0)) + 2 * gap
        val = +c0b
        bnd = +bnd
        gap = +gap
    return val, bnd, gap


_LADDER_CACHE = {}


def regularization_ladder(cap, prec, rungs=None):
    """Transports from both ends of [0, 1] toward the base point 1/2 at the
    shrink parameters delta_k = 2^(-6-k).

    Returns a dict with 'deltas' (mpf), 'exact' (Fractions), 'alphas'
    (series of [1/2 -> 1-delta_k]) and 'betas' (series of [delta_k -> 1/2]),
    built incrementally so rung k+1 only transports the short extensions.
    """
    if rungs is None:
        rungs = 3 * cap + 9
    key = (cap, prec, rungs)
    if key in _LADDER_CACHE:
        return _LADDER_CACHE[key]
    half = Fraction(1, 2)
    exact = [Fraction(1, 2 ** (6 + k)) for k in range(rungs)]
    with mp.workdps(prec + 12 + 3 * cap):
        betas = [transport(segment_path(exact[0], half), cap, prec)]
        alphas = [transport(segment_path(half, 1 - exact[0]), cap, prec)]
        for k in range(1, rungs):
            binc = transport(segment_path(exact[k], exact[k - 1]), cap, prec)
            betas.append(betas[-1] * binc)
            ainc = transport(segment_path(1 - exact[k - 1], 1 - exact[k]),
                             cap, prec)
            alphas.append(ainc * alphas[-1])
        deltas = [mp.mpf(2) ** (-(6 + k)) for k in range(rungs)]
    out = {"deltas": deltas, "exact": exact, "alphas": alphas,
           "betas": betas}
    _LADDER_CACHE[key] = out
    return out


class RegularizedTransport(NCSeries):
    """NCSeries whose coefficients were obtained as regularized endpoint
    limits; only words finite at the regularized ends are present unless the
    divergent ones were explicitly requested at construction."""

    __slots__ = ("window_gaps",)

    def __init__(self, cap, nletters, coeffs, window_gaps):
        super().__init__(cap, nletters, coeffs)
        self.window_gaps = dict(window_gaps)

    def coeff(self, w):
        w = tuple(w)
        assert len(w) <= self.cap
        if w not in self.coeffs:
            raise LookupError(
                "coefficient of %s diverges at a regularized endpoint; "
                "not computed" % (w,))
        return self.coeffs[w]


def _pole_letter(value):
    if value == 0:
        return 0
    if value == 1:
        return 1
    raise ValueError("regularized endpoint must sit on 0 or 1, got %r"
                     % (value,))


def _exact_endpoint(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float) and x in (0.0, 1.0):
        return Fraction(x)
    raise ValueError("regularized endpoints need exact coordinates, got %r"
                     % (x,))


def transport_regularized(path, cap, prec, admissible_only=True):
    """Regularized transport for a path whose flagged endpoints sit on 0 or
    1: evaluate at endpoint shrinks delta_k = 2^(-6-k) and extrapolate each
    coefficient in the basis delta^m log^j(1/delta).

    Words whose letter at a shrunk end matches that end's pole have no
    limit; with admissible_only they are omitted (requesting them from the
    result raises LookupError), otherwise the constant term of their
    log-divergent expansion is extracted and reported.
    """
    if not (path.reg_start or path.reg_end):
        raise ValueError("no regularized endpoint; use transport")
    prec_int = prec + 6
    base_terms = [(0, 0)] + [(m, j) for m in (1, 2, 3)
                             for j in range(cap + 2)]
    log_terms = [(0, j) for j in range(1, cap + 1)]
    # two rungs beyond the window minimum keep the least-norm weights
    # averaging rather than interpolating, which the gap estimate needs
    rungs = len(base_terms) + 4
    if not admissible_only:
        rungs += len(log_terms)

    start_letter = end_letter = None
    if path.reg_start:
        start_letter = _pole_letter(_exact_endpoint(path.start))
    if path.reg_end:
        end_letter = _pole_letter(_exact_endpoint(path.end))

    canonical = (len(path.pieces) == 1
                 and isinstance(path.pieces[0], Segment)
                 and path.reg_start and path.reg_end
                 and {_exact_endpoint(path.start),
                      _exact_endpoint(path.end)} == {0, 1})
    with mp.workdps(prec_int + 12 + 3 * cap):
        if canonical:
            lad = regularization_ladder(cap, prec_int, rungs=rungs)
            deltas = lad["deltas"]
            fulls = [a * b for a, b in zip(lad["alphas"], lad["betas"])]
            if _exact_endpoint(path.start) == 1:
                fulls = [f.reversal() for f in fulls]
        else:
            deltas, fulls = _bespoke_ladder(path, cap, prec_int, rungs)

        coeffs = {(): PrecComplex(1, 0)}
        gaps = {}
        wordlists = _wordlists(cap, 2)
        for k in range(1, cap + 1):
            for w in wordlists[k]:
                divergent = ((end_letter is not None and w[0] == end_letter)
                             or (start_letter is not None
                                 and w[-1] == start_letter))
                if divergent and admissible_only:
                    continue
                terms = base_terms if not divergent else \
                    [base_terms[0]] + log_terms + base_terms[1:]
                vals = [f.coeff(w).val for f in fulls]
                bounds = [f.coeff(w).err for f in fulls]
                val, bnd, gap = extrapolate_constant(deltas, vals, bounds,
                                                     terms)
                coeffs[w] = PrecComplex(val, bnd)
                gaps[w] = gap
    return RegularizedTransport(cap, 2, coeffs, gaps)


def _bespoke_ladder(path, cap, prec, rungs):
    """Shrink regularized ends of an arbitrary path along its end segments
    and transport incrementally, mirroring regularization_ladder."""
    pieces = list(path.pieces)
    exact = [Fraction(1, 2 ** (6 + k)) for k in range(rungs)]
    deltas = [mp.mpf(2) ** (-(6 + k)) for k in range(rungs)]

    def trim_start(delta):
        seg = pieces[0]
        if not isinstance(seg, Segment):
            raise ValueError("regularized start must end a straight piece")
        s, e = seg.endpoints()
        u = (e - s) / abs(e - s)
        return s + delta * u

    def trim_end(delta):
        seg = pieces[-1]
        if not isinstance(seg, Segment):
            raise ValueError("regularized end must end a straight piece")
        s, e = seg.endpoints()
        u = (e - s) / abs(e - s)
        return e - delta * u

    mid = pieces[1:-1] if len(pieces) > 1 else []
    first = pieces[0]
    last = pieces[-1]
    d0 = deltas[0]
    new_pieces = []
    if path.reg_start:
        new_pieces.append(Segment(trim_start(d0), first.endpoints()[1]))
    else:
        new_pieces.append(first)
    if len(pieces) > 1:
        new_pieces.extend(mid)
        if path.reg_end:
            new_pieces.append(Segment(last.endpoints()[0], trim_end(d0)))
        else:
            new_pieces.append(last)
    else:
        if path.reg_end:
            only = new_pieces[0]
            new_pieces[0] = Segment(only.start, trim_end(d0))
    fulls = [transport(Path(new_pieces), cap, prec)]
    for k in range(1, rungs):
        F = fulls[-1]
        if path.reg_start:
            inc = transport(segment_path(trim_start(deltas[k]),
                                         trim_start(deltas[k - 1])),
                            cap, prec)
            F = F * inc
        if path.reg_end:
            inc = transport(segment_path(trim_end(deltas[k - 1]),
                                         trim_end(deltas[k])),
                            cap, prec)
            F = inc * F
        fulls.append(F)
    return deltas, fulls
