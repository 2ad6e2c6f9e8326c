"""Piecewise paths in the plane: straight segments and circular arcs.

Coordinates may be Fractions, ints, floats, or complex; they are realized as
mpc numbers at the current mpmath working precision on demand, so one Path
object can be walked at several precisions.

Arc angles are stored in turns (fractions of a full revolution, increasing =
counterclockwise), which keeps the standard loops exactly representable:
the loop around 0 based at 1/2 is [1/2 -> 1/4], a full counterclockwise
circle of radius 1/4, then [1/4 -> 1/2].

Composition of paths is written right to left elsewhere in this package (in
a product the rightmost path is traversed first); a Path instance itself
just stores its pieces in traversal order.
"""

import math
from fractions import Fraction

import mpmath as mp

from ..precision import as_mpc

CHORDS_PER_TURN = 48


class PathThroughSingularity(ValueError):
    """A piece of the path passes through (or starts/ends on) a pole."""


def _key(x):
    """Hashable exact-ish form of a coordinate, for cache signatures."""
    if isinstance(x, (Fraction, int)):
        return ("q", x)
    if isinstance(x, complex):
        return ("c", x.real, x.imag)
    return ("f", float(x))


class Segment:
    __slots__ = ("start", "end")

    def __init__(self, start, end):
        self.start = start
        self.end = end

    def endpoints(self):
        return as_mpc(self.start), as_mpc(self.end)

    def chords(self):
        return [self.endpoints()]

    def reverse(self):
        return Segment(self.end, self.start)

    def signature(self):
        return ("seg", _key(self.start), _key(self.end))

    def __repr__(self):
        return "Segment(%s, %s)" % (self.start, self.end)


class Arc:
    """Circular arc center + radius * e^(2 pi i t), t from turn0 to turn1."""

    __slots__ = ("center", "radius", "turn0", "turn1")

    def __init__(self, center, radius, turn0, turn1):
        if turn0 == turn1:
            raise ValueError("empty arc")
        self.center = center
        self.radius = radius
        self.turn0 = turn0
        self.turn1 = turn1

    def point(self, t):
        return as_mpc(self.center) + as_mpc(self.radius) * mp.expjpi(2 * t)

    def endpoints(self):
        return self.point(self.turn0), self.point(self.turn1)

    def chords(self):
        span = self.turn1 - self.turn0
        n = max(2, int(math.ceil(CHORDS_PER_TURN * abs(float(span)))))
        ts = [self.turn0 + span * Fraction(i, n) for i in range(n + 1)]
        pts = [self.point(t) for t in ts]
        return list(zip(pts[:-1], pts[1:]))

    def reverse(self):
        return Arc(self.center, self.radius, self.turn1, self.turn0)

    def signature(self):
        return ("arc", _key(self.center), _key(self.radius),
                _key(self.turn0), _key(self.turn1))

    def __repr__(self):
        return "Arc(%s, %s, %s, %s)" % (self.center, self.radius,
                                        self.turn0, self.turn1)


class Path:
    """Ordered pieces, first-traversed first. Endpoints sitting exactly on a
    pole must be flagged regularized; plain transport refuses them."""

    __slots__ = ("pieces", "reg_start", "reg_end")

    def __init__(self, pieces, reg_start=False, reg_end=False):
        if not pieces:
            raise ValueError("empty path")
        self.pieces = list(pieces)
        self.reg_start = reg_start
        self.reg_end = reg_end

    @property
    def start(self):
        p = self.pieces[0]
        return p.start if isinstance(p, Segment) else p.point(p.turn0)

    @property
    def end(self):
        p = self.pieces[-1]
        return p.end if isinstance(p, Segment) else p.point(p.turn1)

    def chords(self):
        out = []
        last = None
        for piece in self.pieces:
            cs = piece.chords()
            if last is not None:
                gap = abs(cs[0][0] - last)
                if gap > mp.mpf(2) ** (8 - mp.mp.prec) * (1 + abs(last)):
                    raise ValueError("pieces do not join: gap %s" %
                                     mp.nstr(gap, 5))
            last = cs[-1][1]
            out.extend(cs)
        return out

    def reverse(self):
        return Path([p.reverse() for p in reversed(self.pieces)],
                    reg_start=self.reg_end, reg_end=self.reg_start)

    def signature(self):
        return tuple(p.signature() for p in self.pieces) + \
            (self.reg_start, self.reg_end)

    def __repr__(self):
        return "Path(%r, reg_start=%r, reg_end=%r)" % (
            self.pieces, self.reg_start, self.reg_end)


def segment_path(a, b, reg_start=False, reg_end=False):
    return Path([Segment(a, b)], reg_start=reg_start, reg_end=reg_end)


def rho0():
    """Counterclockwise loop around 0 based at 1/2 (radius 1/4)."""
    q = Fraction(1, 4)
    h = Fraction(1, 2)
    return Path([Segment(h, q), Arc(0, q, 0, 1), Segment(q, h)])


def rho1():
    """Counterclockwise loop around 1 based at 1/2 (radius 1/4)."""
    q = Fraction(3, 4)
    h = Fraction(1, 2)
    return Path([Segment(h, q),
                 Arc(1, Fraction(1, 4), Fraction(1, 2), Fraction(3, 2)),
                 Segment(q, h)])
