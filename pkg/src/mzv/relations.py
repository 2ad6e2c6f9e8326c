"""Q-linear relations among weight-n zeta symbols and the bound they give.

Two sources of relations, both with exact integer coefficients:

* double shuffle: for admissible u and v, the shuffle of the words and the
  stuffle of the indices both expand the product zeta(u) zeta(v), so their
  difference is a relation.  Only finite products of admissible factors are
  taken; nothing is regularized, so weight-1 factors never appear.
* duality: e_w - e_dual(w) whenever the dual differs from w.

Stacking the vectors over the 2^(n-2) admissible words and taking the
exact rank gives U_n = 2^(n-2) - rank, an upper bound for the span's
dimension that is printed next to d_n but never claimed equal to it.
"""

import mpmath as mp

from . import words
from .evaluator import eval_holder


class RelationVector:
    __slots__ = ("weight", "coeffs", "provenance")

    def __init__(self, weight, coeffs, provenance):
        self.weight = weight
        self.coeffs = {w: int(c) for w, c in coeffs.items() if c}
        self.provenance = provenance
        for w in self.coeffs:
            if len(w) != weight or not words.is_admissible_word(w):
                raise ValueError("coefficient on non-admissible or "
                                 "wrong-weight word %r" % (w,))
        if len(self.coeffs) == 1:
            raise ValueError("a single-term relation would force a zeta "
                             "value to vanish; refusing %r" % (provenance,))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "RelationVector(%d, %d terms, %r)" % (
            self.weight, len(self.coeffs), self.provenance)


def gen_double_shuffle(n):
    """Shuffle-minus-stuffle vectors for all unordered admissible pairs
    with factor weights >= 2 summing to n."""
    if n < 4:
        raise ValueError("double shuffle needs weight >= 4")
    out = []
    for i in range(2, n - 1):
        j = n - i
        if j < i:
            break
        for u in words.enumerate_admissible(i):
            for v in words.enumerate_admissible(j):
                if j == i and v < u:
                    continue
                coeffs = dict(words.shuffle(u, v))
                st = words.stuffle(words.word_to_index(u),
                                   words.word_to_index(v))
                for idx, c in st.items():
                    w = words.index_to_word(idx)
                    coeffs[w] = coeffs.get(w, 0) - c
                vec = {w: c for w, c in coeffs.items() if c}
                if vec:
                    out.append(RelationVector(
                        n, vec, ("double_shuffle", u, v)))
    return out


def gen_duality(n):
    """e_w - e_dual(w) for each non-self-dual admissible w, one vector
    per unordered pair."""
    if n < 3:
        raise ValueError("duality is trivial below weight 3")
    out = []
    for w in words.enumerate_admissible(n):
        d = words.index_to_word(words.dual(words.word_to_index(w)))
        if d != w and w < d:
            out.append(RelationVector(n, {w: 1, d: -1}, ("duality", w)))
    return out


def all_relations(n, use_duality=True):
    vecs = []
    if n >= 4:
        vecs.extend(gen_double_shuffle(n))
    if use_duality and n >= 3:
        vecs.extend(gen_duality(n))
    return vecs


def upper_bound(n, use_duality=True):
    """(rank, U_n) with U_n = 2^(n-2) - rank of the stacked relations."""
    if n < 2:
        raise ValueError("weight must be at least 2")
    vecs = all_relations(n, use_duality)
    rank = exact_rank_of(vecs)
    return rank, 2 ** (n - 2) - rank


def exact_rank_of(vecs):
    from .linalg import exact_rank
    return exact_rank([v.coeffs for v in vecs])


def verify_numeric(vec, prec=40):
    """Residual of sum coeff * zeta(word) with an honest bound attached."""
    from .precision import PrecReal
    total = PrecReal(0, 0)
    with mp.workdps(prec + 12):
        for w, c in sorted(vec.coeffs.items()):
            val = eval_holder(words.word_to_index(w), prec).value
            total = total + val * PrecReal(c, 0)
    return total


def verify_all(n, prec=40, tol=None, use_duality=True):
    """(all_ok, worst_residual) over every emitted weight-n vector."""
    if tol is None:
        tol = mp.mpf(10) ** (-(prec - 5))
    worst = mp.mpf(0)
    ok = True
    for vec in all_relations(n, use_duality):
        r = verify_numeric(vec, prec)
        mag = abs(r.val) + r.err
        worst = max(worst, mag)
        if abs(r.val) > tol:
            ok = False
    return ok, worst
