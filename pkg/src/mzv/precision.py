"""Arbitrary-precision values carrying explicit absolute error bounds.

Bounds are propagated first-order through every operation and padded with a
conservative rounding term, so they are honest estimates rather than
certified enclosures. Callers are expected to run under an mpmath working
precision comfortably above the target precision (see workdps helpers in the
consuming modules).
"""

from fractions import Fraction

import mpmath as mp


def as_mpf(x):
    """mpf from anything we accept, including Fraction (mpmath does not).

    An existing mpf passes through untouched: re-creating it would round
    to the ambient working precision and silently discard digits.
    """
    if isinstance(x, mp.mpf):
        return x
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def as_mpc(x):
    if isinstance(x, mp.mpc):
        return x
    if isinstance(x, mp.mpf):
        # bypass the constructor, which would re-round the mantissa
        return mp.make_mpc((x._mpf_, mp.mpf(0)._mpf_))
    if isinstance(x, Fraction):
        return as_mpc(as_mpf(x))
    return mp.mpc(x)


def _ulp_slop(magnitude):
    # a few ulps at the current working precision
    if magnitude == 0:
        return mp.mpf(0)
    return abs(magnitude) * mp.mpf(2) ** (4 - mp.mp.prec)


class PrecReal:
    """An mpf together with an absolute error bound."""

    __slots__ = ("val", "err")

    def __init__(self, val, err=0):
        self.val = as_mpf(val)
        self.err = as_mpf(err)
        assert self.err >= 0

    def __repr__(self):
        return "PrecReal(%s, err<=%s)" % (mp.nstr(self.val, 12),
                                          mp.nstr(self.err, 3))

    def __add__(self, other):
        other = _as_real(other)
        v = self.val + other.val
        return PrecReal(v, self.err + other.err + _ulp_slop(v))

    __radd__ = __add__

    def __neg__(self):
        return PrecReal(-self.val, self.err)

    def __sub__(self, other):
        return self + (-_as_real(other))

    def __rsub__(self, other):
        return _as_real(other) + (-self)

    def __mul__(self, other):
        other = _as_real(other)
        v = self.val * other.val
        err = (abs(self.val) * other.err + abs(other.val) * self.err
               + self.err * other.err + _ulp_slop(v))
        return PrecReal(v, err)

    __rmul__ = __mul__

    def exp(self):
        v = mp.exp(self.val)
        # |exp(x+e) - exp(x)| <= exp(x)(e^|e| - 1)
        err = abs(v) * mp.expm1(self.err) + _ulp_slop(v)
        return PrecReal(v, err)

    def log(self):
        assert self.val > self.err, "log of a value straddling zero"
        v = mp.log(self.val)
        err = self.err / (abs(self.val) - self.err) + _ulp_slop(v)
        return PrecReal(v, err)


class PrecComplex:
    """An mpc together with an absolute error bound (on the modulus)."""

    __slots__ = ("val", "err")

    def __init__(self, val, err=0):
        self.val = as_mpc(val)
        self.err = as_mpf(err)
        assert self.err >= 0

    def __repr__(self):
        return "PrecComplex(%s, err<=%s)" % (mp.nstr(self.val, 12),
                                             mp.nstr(self.err, 3))

    def __add__(self, other):
        other = _as_complex(other)
        v = self.val + other.val
        return PrecComplex(v, self.err + other.err + _ulp_slop(v))

    __radd__ = __add__

    def __neg__(self):
        return PrecComplex(-self.val, self.err)

    def __sub__(self, other):
        return self + (-_as_complex(other))

    def __rsub__(self, other):
        return _as_complex(other) + (-self)

    def __mul__(self, other):
        other = _as_complex(other)
        v = self.val * other.val
        err = (abs(self.val) * other.err + abs(other.val) * self.err
               + self.err * other.err + _ulp_slop(v))
        return PrecComplex(v, err)

    __rmul__ = __mul__

    def exp(self):
        v = mp.exp(self.val)
        err = abs(v) * mp.expm1(self.err) + _ulp_slop(v)
        return PrecComplex(v, err)

    @property
    def real(self):
        return PrecReal(self.val.real, self.err)

    @property
    def imag(self):
        return PrecReal(self.val.imag, self.err)


def _as_real(x):
    if isinstance(x, PrecReal):
        return x
    return PrecReal(x)


def _as_complex(x):
    if isinstance(x, PrecComplex):
        return x
    if isinstance(x, PrecReal):
        return PrecComplex(x.val, x.err)
    return PrecComplex(x)


def zero_complex():
    return PrecComplex(0, 0)


def one_complex():
    return PrecComplex(1, 0)
