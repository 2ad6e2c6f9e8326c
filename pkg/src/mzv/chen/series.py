"""Truncated noncommutative power series in the letter generators.

Words are tuples of letter indices (0 for dx/x, 1 for dx/(x-1) in the
two-pole case). Coefficients are PrecComplex. The product is truncated
concatenation: (F*G)(w) = sum over splittings w = u.v of F(u) G(v), which
is exactly the composition-of-paths rule, the later piece on the left.

The constant term of a transport is exactly 1 (error 0); keeping that exact
matters, because products of augmentation-zero factors then vanish in low
degree for structural reasons rather than numerical luck.
"""

from ..precision import PrecComplex, zero_complex, one_complex
from .. import words as _words


def all_words(cap, nletters=2):
    out = [()]
    frontier = [()]
    for _ in range(cap):
        frontier = [w + (a,) for w in frontier for a in range(nletters)]
        out.extend(frontier)
    return out


class NCSeries:
    __slots__ = ("cap", "nletters", "coeffs")

    def __init__(self, cap, nletters=2, coeffs=None):
        self.cap = cap
        self.nletters = nletters
        self.coeffs = dict(coeffs) if coeffs else {}

    @classmethod
    def unit(cls, cap, nletters=2):
        return cls(cap, nletters, {(): one_complex()})

    def coeff(self, w):
        w = tuple(w)
        assert len(w) <= self.cap
        return self.coeffs.get(w, zero_complex())

    def set_coeff(self, w, value):
        self.coeffs[tuple(w)] = value

    def __mul__(self, other):
        assert isinstance(other, NCSeries)
        if self.cap != other.cap:
            raise ValueError("degree caps differ: %d vs %d"
                             % (self.cap, other.cap))
        out = NCSeries(self.cap, self.nletters)
        acc = {}
        for u, cu in self.coeffs.items():
            for v, cv in other.coeffs.items():
                if len(u) + len(v) > self.cap:
                    continue
                w = u + v
                if w in acc:
                    acc[w] = acc[w] + cu * cv
                else:
                    acc[w] = cu * cv
        out.coeffs = acc
        return out

    def __add__(self, other):
        out = NCSeries(self.cap, self.nletters, self.coeffs)
        for w, c in other.coeffs.items():
            out.coeffs[w] = out.coeffs[w] + c if w in out.coeffs else c
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        out = NCSeries(self.cap, self.nletters)
        out.coeffs = {w: c * factor for w, c in self.coeffs.items()}
        return out

    def augmentation(self):
        return self.coeff(())

    def drop_unit(self):
        """Subtract the constant term in place of building a unit series."""
        out = NCSeries(self.cap, self.nletters, self.coeffs)
        one = out.coeffs.get((), zero_complex())
        out.coeffs[()] = one - one_complex()
        return out

    def inverse(self):
        """Geometric-series inverse; needs constant term 1."""
        x = self.drop_unit()
        # sum (-x)^k for k = 0..cap
        out = NCSeries.unit(self.cap, self.nletters)
        power = NCSeries.unit(self.cap, self.nletters)
        for _ in range(self.cap):
            power = power * x.scale(-1)
            out = out + power
        return out

    def reversal(self):
        """Coefficients of the reversed path: (-1)^|w| coeff(reverse w)."""
        out = NCSeries(self.cap, self.nletters)
        for w, c in self.coeffs.items():
            out.coeffs[tuple(reversed(w))] = c * ((-1) ** len(w))
        return out

    def grouplike_defect(self, u, v):
        """coeff(u) coeff(v) - sum over shuffles, zero for a transport."""
        u, v = tuple(u), tuple(v)
        assert len(u) + len(v) <= self.cap
        acc = self.coeff(u) * self.coeff(v)
        for w, mult in _words.shuffle(u, v).items():
            acc = acc - self.coeff(w) * mult
        return acc

    def max_err(self):
        return max((c.err for c in self.coeffs.values()), default=0)

    def __repr__(self):
        n = sum(1 for c in self.coeffs.values() if abs(c.val) > 1e-30)
        return "NCSeries(cap=%d, %d nonzero)" % (self.cap, n)
