"""Loop pairings and the sandwich integrals behind the vanishing, product
and half-integrality statements.

The pairing (gamma, eps_1...eps_n) is the coefficient of the word eps in
the Chen series of gamma, eps_1 at the arrival end. The sandwich integrals
place a group-ring element between beta = [0, 1/2] (traversed first) and
alpha = [1/2, 1] (traversed last). Both tails end on a pole, so each value
is evaluated at the endpoint shrinks delta_k = 2^(-6-k) and the constant
term of its expansion in delta^m log^j(1/delta) is extracted, pure log
powers included. This constant-term reading is what makes the divergent
tail pairings finite, with (alpha, (1)) carrying log 2 and (beta, (0))
carrying -log 2; for group elements deep enough in the augmentation ideal
the log terms cancel and the reading agrees with the honest limit.

Group words follow the same order as path composition: in a written
product the rightmost factor is traversed first, and Chen series multiply
in the written order.
"""

import random
from fractions import Fraction

import mpmath as mp

from ..precision import PrecComplex
from .groupring import GroupRingElement, h0, h1
from .paths import Arc, Path, Segment, rho0, rho1, segment_path
from .series import NCSeries
from .transport import (extrapolate_constant, regularization_ladder,
                        transport)

_LOOP_CACHE = {}
_GWORD_CACHE = {}


def _loop_series(gen, cap, prec):
    key = (gen, cap, prec)
    if key not in _LOOP_CACHE:
        loop = rho0() if gen == 0 else rho1()
        _LOOP_CACHE[key] = transport(loop, cap, prec)
    return _LOOP_CACHE[key]


def _gword_series(gword, cap, prec):
    key = (gword, cap, prec)
    if key in _GWORD_CACHE:
        return _GWORD_CACHE[key]
    F = NCSeries.unit(cap)
    for gen, exp in gword:
        base = _loop_series(gen, cap, prec)
        if exp < 0:
            base = base.inverse()
        for _ in range(abs(exp)):
            F = F * base
    _GWORD_CACHE[key] = F
    return F


def _element_series(g, cap, prec):
    F = NCSeries(cap)
    for gword, c in g.terms.items():
        F = F + _gword_series(gword, cap, prec).scale(c)
    return F


def pair(g, w, prec):
    """Coefficient of the word w in the Chen series of the group-ring
    element g (loops based at 1/2); linear in g."""
    w = tuple(w)
    if isinstance(g, (int,)):
        g = GroupRingElement.rho(g)
    cap = max(1, len(w))
    with mp.workdps(prec + 12 + 3 * cap):
        c = _element_series(g, cap, prec).coeff(w)
    return c


def _triple_coeff(A, S, B, w):
    """Coefficient of w in A*S*B without forming the product series."""
    n = len(w)
    acc = None
    for i in range(n + 1):
        for j in range(i, n + 1):
            t = A.coeff(w[:i]) * S.coeff(w[i:j]) * B.coeff(w[j:])
            acc = t if acc is None else acc + t
    return acc


def sandwich_value(g, w, prec):
    """Regularized integral over alpha * g * beta of the forms for w."""
    w = tuple(w)
    cap = max(1, len(w))
    prec_int = prec + 6
    terms = ([(0, 0)] + [(0, j) for j in range(1, cap + 1)] +
             [(m, j) for m in (1, 2) for j in range(cap + 1)])
    rungs = len(terms) + 4
    with mp.workdps(prec_int + 12 + 3 * cap):
        lad = regularization_ladder(cap, prec_int, rungs=rungs)
        S = _element_series(g, cap, prec_int)
        vals, bounds = [], []
        for alpha, beta in zip(lad["alphas"], lad["betas"]):
            c = _triple_coeff(alpha, S, beta, w)
            vals.append(c.val)
            bounds.append(c.err)
        val, bnd, _gap = extrapolate_constant(lad["deltas"], vals, bounds,
                                              terms)
    return PrecComplex(val, bnd)


def _as_loop(g):
    if isinstance(g, GroupRingElement):
        return g
    if g in (0, 1):
        return GroupRingElement.rho(g)
    raise ValueError("loop must be 0, 1, or a GroupRingElement")


def _difference_product(g_list):
    one = GroupRingElement.one()
    acc = one
    for g in g_list:
        acc = acc * (_as_loop(g) - one)
    return acc


def sample_ideal_elements(n, count, seed=7):
    """Deterministic products of n+1 small random combinations of the two
    augmentation-ideal generators; each lies in I^(n+1)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        acc = GroupRingElement.one()
        for _ in range(n + 1):
            c0, c1 = rng.randint(-2, 2), rng.randint(-2, 2)
            if c0 == 0 and c1 == 0:
                c0 = 1
            acc = acc * (h0.scale(c0) + h1.scale(c1))
        if acc.terms:
            out.append(acc)
    return out


def verify_vanishing_on_I(n, sample, w, prec):
    """Integral over alpha * sample * beta for sample in I^(n+1) and a word
    of length n; the statement under test is that it vanishes."""
    w = tuple(w)
    if len(w) != n:
        raise ValueError("word length %d does not match n=%d" % (len(w), n))
    return sandwich_value(sample, w, prec)


def verify_product_formula(g_list, eps, prec):
    """Integral over alpha * (g_1 - 1)...(g_n - 1) * beta of the forms for
    eps; (2 pi i)^n when g_i matches the loop around eps_i for every i,
    else 0."""
    eps = tuple(eps)
    if len(g_list) != len(eps):
        raise ValueError("need as many loops as letters")
    return sandwich_value(_difference_product(g_list), eps, prec)


def verify_half_integrality(g_list, eps, prec):
    """Integral over alpha * (g_1 - 1)...(g_{n-1} - 1) * beta for an
    admissible word (eps_1 = 1, eps_n = 0), divided by (2 pi i)^n / 2.

    Returns (value, nearest integer multiple, residual); the statement
    under test is that the residual vanishes.
    """
    eps = tuple(eps)
    n = len(eps)
    if len(g_list) != n - 1:
        raise ValueError("need n-1 loops for a length-n word")
    if not (eps[0] == 1 and eps[-1] == 0):
        raise ValueError("word must start with 1 and end with 0")
    value = sandwich_value(_difference_product(g_list), eps, prec)
    with mp.workdps(prec + 15):
        unit = (2 * mp.pi * mp.mpc(0, 1)) ** n / 2
        ratio = value.val / unit
        nearest = int(mp.nint(ratio.real))
        residual = abs(value.val - nearest * unit)
    return value, nearest, residual


def extension_class_check(z, prec):
    """exp of the integral of dx/(x-z) over [0, 1] against the exact value
    (z-1)/z. For z inside (0, 1) the path detours along a semicircle below
    the real axis; the lower branch contributes +pi*i to the integral and
    the identity still holds with the same right-hand side.
    """
    z = Fraction(z)
    if z in (0, 1):
        raise ValueError("z must avoid 0 and 1")
    rhs = (z - 1) / z
    if 0 < z < 1:
        r = min(z, 1 - z) / 2
        path = Path([Segment(0, z - r),
                     Arc(z, r, Fraction(1, 2), 1),
                     Segment(z + r, 1)])
    else:
        path = segment_path(0, 1)
    F = transport(path, 1, prec + 5, poles=(z,))
    with mp.workdps(prec + 15):
        lhs = F.coeff((0,)).exp()
    return lhs, rhs
