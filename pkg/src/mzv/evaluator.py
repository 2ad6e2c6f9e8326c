"""Admissible multiple zeta values by three routes.

* eval_series: the defining nested sum, truncated; deliberately cheap and
  low-precision, kept as an independent oracle for the two real backends.
* eval_holder: split the unit interval at 1/2; the coproduct turns the
  iterated integral into a sum over deconcatenations, and the substitution
  x -> 1-x maps the upper half onto the lower half while swapping the two
  letters, so every factor becomes a polylogarithm-type series at 1/2
  (li_half below) and converges geometrically.
* eval_chen: the regularized Chen transport along [0, 1]; the coefficient
  of the reversed index word times (-1)^depth.

The word transformation in eval_holder (flip the prefix, reverse the
suffix, no signs left over) is locked by tests against a brute-force
quadrature oracle; changing it silently breaks the backend-agreement
invariant, which is checked for every admissible index of weight <= 5.
"""

import math

import mpmath as mp

from . import words
from .chen.paths import segment_path
from .chen.transport import transport_regularized
from .precision import PrecReal

_BACKENDS = ("holder", "chen", "series")

# process-wide memo keyed (index, backend, precision); MzvValue instances
# are immutable in practice, so sharing them is safe
_MEMO = {}


class MzvValue:
    __slots__ = ("index", "value", "backend")

    def __init__(self, index, value, backend):
        assert backend in _BACKENDS
        self.index = tuple(index)
        self.value = value
        self.backend = backend

    @property
    def error_bound(self):
        return self.value.err

    def __repr__(self):
        return "MzvValue(%s, %s, backend=%s)" % (
            self.index, mp.nstr(self.value.val, 12), self.backend)


def _canon(idx):
    idx = tuple(int(k) for k in idx)
    if any(k < 1 for k in idx):
        raise ValueError("index entries must be positive integers")
    return idx


def _require_admissible(idx):
    if idx and not words.is_admissible_index(idx):
        raise ValueError("index %s is not admissible (last entry must be "
                         ">= 2)" % (idx,))


def eval_series(idx, terms):
    """Truncated defining sum over m_l <= terms, with an attached tail
    bound; oracle-grade accuracy only (the bound shrinks like a power of
    terms, not exponentially)."""
    idx = _canon(idx)
    _require_admissible(idx)
    if not idx:
        return MzvValue((), PrecReal(1, 0), "series")
    l = len(idx)
    M = int(terms)
    if M < l:
        raise ValueError("need at least depth many terms")
    with mp.workdps(30):
        acc = [mp.mpf(1)] + [mp.mpf(0)] * l
        for m in range(1, M + 1):
            minv = 1 / mp.mpf(m)
            for i in range(l, 0, -1):
                acc[i] += acc[i - 1] * minv ** idx[i - 1]
        value = acc[l]
        # tail: the inner l-1 indices are each >= 1, so the inner sum is at
        # most H_m^(l-1)/(l-1)!; integral comparison then gives the closed
        # bound below, valid while r < 1
        k_l = idx[-1]
        lnM = mp.log(M)
        r = (l - 1) / mp.mpf((k_l - 1) * (1 + lnM))
        if r >= 1:
            raise ValueError("terms too few for this depth: tail bound "
                             "diverges")
        tail = ((1 + lnM) ** (l - 1) / mp.factorial(l - 1)
                * mp.mpf(M) ** (1 - k_l) / (k_l - 1) / (1 - r))
        out = PrecReal(value, tail + value * mp.mpf(2) ** (20 - mp.mp.prec))
    return MzvValue(idx, out, "series")


def li_half(idx, prec):
    """The series sum over m_1 < ... < m_l of 2^(-m_l) / prod m_i^(k_i).

    Converges for every index (k_l = 1 included) thanks to the geometric
    factor; this is the building block of the Hoelder split.
    """
    idx = _canon(idx)
    if not idx:
        return PrecReal(1, 0)
    l = len(idx)
    with mp.workdps(prec + 12):
        target = mp.mpf(10) ** (-(prec + 2))
        M = max(8 * l, int(math.ceil(3.33 * (prec + 4))))
        while True:
            growth = mp.exp(mp.mpf(l - 1) / (M + 1)) / 2
            tail = (mp.mpf(2) ** (-M) * mp.mpf(M + 1) ** (l - 1)
                    / (1 - growth))
            if tail <= target:
                break
            M += 16
        # acc[i] = sum over m_1 < ... < m_i < m of prod m_j^(-k_j); the
        # geometric factor attaches to the outermost variable only, so it
        # multiplies acc[l-1] at the moment m is the outermost index
        acc = [mp.mpf(1)] + [mp.mpf(0)] * max(l - 1, 0)
        half = mp.mpf(1) / 2
        geo = mp.mpf(1)
        total = mp.mpf(0)
        for m in range(1, M + 1):
            minv = 1 / mp.mpf(m)
            geo *= half
            total += acc[l - 1] * geo * minv ** idx[-1]
            for i in range(l - 1, 0, -1):
                acc[i] += acc[i - 1] * minv ** idx[i - 1]
        out = PrecReal(total, tail + total * mp.mpf(2) ** (10 - mp.mp.prec))
    return out


def _flip(w):
    return tuple(1 - a for a in w)


def _half_factor(w):
    """Index whose li_half value is the [0,1/2] iterated integral of w."""
    if not w:
        return ()
    return words.word_to_index(w)


def eval_holder(idx, prec=50):
    """Backend A: deconcatenate the reversed index word and pair li_half
    factors; all signs cancel against the (-1)^depth of the integral
    representation."""
    idx = _canon(idx)
    _require_admissible(idx)
    if not idx:
        return MzvValue((), PrecReal(1, 0), "holder")
    memo_key = (idx, "holder", prec)
    if memo_key in _MEMO:
        return _MEMO[memo_key]
    u = tuple(reversed(words.index_to_word(idx)))
    n = len(u)
    with mp.workdps(prec + 12):
        inner = prec + 4
        total = PrecReal(0, 0)
        for cut in range(n + 1):
            v, w = u[:cut], u[cut:]
            left = li_half(_half_factor(_flip(v)), inner)
            right = li_half(_half_factor(tuple(reversed(w))), inner)
            total = total + left * right
    out = MzvValue(idx, total, "holder")
    _MEMO[memo_key] = out
    return out


def eval_chen(idx, prec=10, cap=None):
    """Backend B: (-1)^depth times the regularized [0,1] transport
    coefficient of the reversed index word. cap may exceed the weight to
    share one transport across several indices."""
    idx = _canon(idx)
    _require_admissible(idx)
    if not idx:
        return MzvValue((), PrecReal(1, 0), "chen")
    word = tuple(reversed(words.index_to_word(idx)))
    n = len(word)
    if cap is None:
        cap = n
    if cap < n:
        raise ValueError("cap below the weight of the index")
    memo_key = (idx, "chen", prec, cap)
    if memo_key in _MEMO:
        return _MEMO[memo_key]
    path = segment_path(0, 1, reg_start=True, reg_end=True)
    R = transport_regularized(path, cap, prec)
    c = R.coeff(word)
    sign = (-1) ** len(idx)
    with mp.workdps(prec + 15):
        val = PrecReal(sign * c.val.real, c.err + abs(c.val.imag))
    out = MzvValue(idx, val, "chen")
    _MEMO[memo_key] = out
    return out


def evaluate(idx, prec=50, backend="holder"):
    if backend == "holder":
        return eval_holder(idx, prec)
    if backend == "chen":
        return eval_chen(idx, prec)
    if backend == "series":
        # interpret prec as a digit target when dispatching generically
        idx = tuple(idx)
        k_l = idx[-1] if idx else 2
        terms = int(10 ** min(6.0, (prec + 1) / max(1, k_l - 1))) + 10
        return eval_series(idx, terms)
    raise ValueError("unknown backend %r" % (backend,))
