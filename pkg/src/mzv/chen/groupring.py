"""Group ring of the free group on the two loops, with rational coefficients.

Group words are tuples of (generator, exponent) with generator 0 or 1 for
the loops around 0 and 1, exponents nonzero, and adjacent generators
distinct. The augmentation sends every group word to 1; the augmentation
ideal is spanned by the differences g - 1, and its powers are what the
vanishing statement quantifies over.
"""

from fractions import Fraction


def _reduce(word):
    out = []
    for gen, exp in word:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


class GroupRingElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for word, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[_reduce(word)] = c

    @classmethod
    def one(cls):
        return cls({(): Fraction(1)})

    @classmethod
    def rho(cls, gen, exp=1):
        if gen not in (0, 1):
            raise ValueError("generator must be 0 or 1")
        return cls({((gen, exp),): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return GroupRingElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        factor = Fraction(factor)
        return GroupRingElement({w: c * factor
                                 for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = _reduce(u + v)
                out[w] = out.get(w, Fraction(0)) + cu * cv
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("only nonnegative powers; invert group "
                             "generators via rho(gen, -1)")
        acc = GroupRingElement.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and \
            self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def augmentation(self):
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        bits = []
        for w, c in sorted(self.terms.items()):
            mon = "*".join("r%d^%d" % (g, e) for g, e in w) or "1"
            bits.append("%s*%s" % (c, mon))
        return "GroupRingElement(%s)" % " + ".join(bits)


def h(gen):
    """The augmentation-zero element (loop - 1)."""
    return GroupRingElement.rho(gen) - GroupRingElement.one()


h0 = h(0)
h1 = h(1)
