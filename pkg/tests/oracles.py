"""Brute-force oracles, independent of the package implementation.

Everything in here is written the dumbest defensible way: exhaustive
enumeration, Fraction arithmetic, plain truncated sums with explicit tail
corrections. Used to generate and re-derive the frozen constants in the
test files; a few cheap ones are also called directly from tests.
"""

import itertools
from fractions import Fraction

import mpmath as mp


# ---------------------------------------------------------------------------
# word combinatorics


def interleavings(u, v):
    """All shuffles of tuples u and v, with multiplicity (list of tuples)."""
    if not u:
        return [tuple(v)]
    if not v:
        return [tuple(u)]
    out = []
    for rest in interleavings(u[1:], v):
        out.append((u[0],) + rest)
    for rest in interleavings(u, v[1:]):
        out.append((v[0],) + rest)
    return out


def shuffle_by_enumeration(u, v):
    """Shuffle product as a dict word -> multiplicity."""
    out = {}
    for w in interleavings(tuple(u), tuple(v)):
        out[w] = out.get(w, 0) + 1
    return out


def dual_by_word_manipulation(index):
    """Reverse the word, flip every bit, read the blocks back off."""
    word = []
    for k in index:
        word.append(1)
        word.extend([0] * (k - 1))
    flipped = [1 - b for b in reversed(word)]
    assert flipped[0] == 1, index
    parts = []
    for b in flipped:
        if b == 1:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


def admissible_words_by_filter(n):
    """Filter all 2^n binary words of length n."""
    if n == 0:
        return [()]
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        if bits[0] == 1 and bits[-1] == 0:
            out.append(bits)
    return sorted(out)


# ---------------------------------------------------------------------------
# nested sums


def mzv_truncated_fraction(index, M):
    """Exact Fraction truncation of the nested sum, all m_i <= M."""
    depth = len(index)
    # chains m_1 < m_2 < ... < m_depth <= M
    total = Fraction(0)
    for chain in itertools.combinations(range(1, M + 1), depth):
        term = Fraction(1)
        for m, k in zip(chain, index):
            term /= Fraction(m) ** k
        total += term
    return total


def stuffle_check_fraction(a, b, product_map, M=9):
    """Check sum-splitting of the product of two nested sums, exactly.

    At any finite cap M on every variable, the pairs of chains for a and b
    biject with the merged chains of the stuffle output, so the identity
    holds exactly term-for-term.
    """
    lhs = mzv_truncated_fraction(a, M) * mzv_truncated_fraction(b, M)
    rhs = Fraction(0)
    for idx, coeff in product_map.items():
        rhs += coeff * mzv_truncated_fraction(idx, M)
    return lhs == rhs


def mzv_truncations_at_caps(index, caps, dps=30):
    """Plain truncations of the nested sum at several caps, one pass."""
    caps = sorted(caps)
    M = caps[-1]
    with mp.workdps(dps):
        depth = len(index)
        if depth == 0:
            return [mp.mpf(1)] * len(caps)
        prefix = None  # prefix[m] = sum over inner chains strictly below m
        for k in index[:-1]:
            running = mp.mpf(0)
            new = [mp.mpf(0)] * (M + 1)
            for m in range(1, M + 1):
                new[m] = running
                running += (prefix[m] if prefix is not None else 1) \
                    / mp.mpf(m) ** k
            prefix = new
        kl = index[-1]
        out = []
        total = mp.mpf(0)
        it = iter(caps)
        next_cap = next(it)
        for m in range(1, M + 1):
            total += (prefix[m] if prefix is not None else 1) \
                / mp.mpf(m) ** kl
            while m == next_cap:
                out.append(+total)
                next_cap = next(it, None)
                if next_cap is None:
                    next_cap = -1
        return out


def mzv_series_richardson(index, M=200000, dps=30):
    """Nested sum extrapolated in the tail model poly(log M)/M^(k_l - 1).

    Truncations at M, 2M, 4M, ... feed a small solve for the limit; good
    for 10+ digits at M ~ 2*10^5 and k_l >= 2, any small depth.
    """
    depth = len(index)
    if depth == 0:
        return mp.mpf(1)
    kl = index[-1]
    assert kl >= 2, index
    levels = depth + 1
    caps = [M * 2 ** i for i in range(levels)]
    vals = mzv_truncations_at_caps(index, caps, dps=dps)
    with mp.workdps(dps):
        # S(M_i) = S - (b_0 + b_1 L_i + ... + b_{depth-1} L_i^{depth-1})
        #          / M_i^(kl-1)
        rows = []
        rhs = []
        for cap, v in zip(caps, vals):
            L = mp.log(cap)
            scale = mp.mpf(cap) ** (1 - kl)
            rows.append([mp.mpf(1)] + [-(L ** j) * scale
                                       for j in range(depth)])
            rhs.append(v)
        sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
        return sol[0]


def li_half_truncated(index, M=400, dps=40):
    """Sum_{m_1<...<m_l} 2^(-m_l) / prod m_i^{k_i}, plain truncation."""
    with mp.workdps(dps):
        depth = len(index)
        if depth == 0:
            return mp.mpf(1)
        prefix = [mp.mpf(1)] * (M + 1)
        for k in index[:-1]:
            running = mp.mpf(0)
            new = [mp.mpf(0)] * (M + 1)
            for m in range(1, M + 1):
                new[m] = running
                running += prefix[m] / mp.mpf(m) ** k
            prefix = new
        kl = index[-1]
        total = mp.mpf(0)
        for m in range(1, M + 1):
            total += prefix[m] * mp.mpf(2) ** (-m) / mp.mpf(m) ** kl
        return total


# ---------------------------------------------------------------------------
# counting


def d_by_recurrence(N):
    vals = [1, 0, 1]
    while len(vals) < N + 1:
        vals.append(vals[-2] + vals[-3])
    return vals[: N + 1]


def gf_coeffs_by_division(N):
    """Long division of 1 by 1 - t^2 - t^3."""
    denom = [1, 0, -1, -1]
    out = []
    rem = [1] + [0] * (N + 3)
    for i in range(N + 1):
        c = rem[i]
        out.append(c)
        for j, dj in enumerate(denom):
            rem[i + j] -= c * dj
    return out


def op_by_enumeration(a):
    """Count ordered compositions of a into odd parts >= 3."""
    if a == 0:
        return 1
    count = 0
    for first in range(3, a + 1, 2):
        count += op_by_enumeration(a - first)
    return count


def op_compositions(a):
    """The compositions themselves (for eyeballing)."""
    if a == 0:
        return [()]
    out = []
    for first in range(3, a + 1, 2):
        for rest in op_compositions(a - first):
            out.append((first,) + rest)
    return out


def gapsets_by_filter(n, family):
    """All nonempty subsets of {0..n} whose consecutive gaps satisfy family.

    family: "odd3" (odd and >= 3) or "ge2" (>= 2).
    """
    out = []
    universe = list(range(n + 1))
    for r in range(1, n + 2):
        for subset in itertools.combinations(universe, r):
            ok = True
            for x, y in zip(subset, subset[1:]):
                gap = y - x
                if family == "odd3":
                    if gap < 3 or gap % 2 == 0:
                        ok = False
                        break
                elif family == "ge2":
                    if gap < 2:
                        ok = False
                        break
                else:
                    raise ValueError(family)
            if ok:
                out.append(subset)
    return out


# ---------------------------------------------------------------------------
# exact rank (dense Fraction elimination, cross-check for the sparse one)


def rank_fraction_dense(rows, ncols):
    m = [[Fraction(x) for x in row] + [Fraction(0)] * (ncols - len(row))
         for row in rows]
    rank = 0
    col = 0
    nrows = len(m)
    while rank < nrows and col < ncols:
        piv = None
        for r in range(rank, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            if m[r][col] != 0:
                f = m[r][col] / pv
                for c in range(col, ncols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# analytic anchors (closed forms worked out by hand; see test comments)


def analytic_anchors(dps=60):
    """Closed-form values used to pin signs and orientations."""
    with mp.workdps(dps):
        return {
            "zeta2": mp.pi ** 2 / 6,
            "zeta3": mp.zeta(3),
            "zeta4": mp.pi ** 4 / 90,
            "li2_half": mp.pi ** 2 / 12 - mp.log(2) ** 2 / 2,
            "log2": mp.log(2),
            # loop coefficients, base point 1/2, counterclockwise:
            # (rho_0, (0)) = 2*pi*i (residue), (rho_0, (1)) = 0,
            # (rho_0, (1,0)) = -2*pi*i*log 2   [tails give 2πi log(2/3),
            #    circle gives 2πi log(3/4) via the zero mean of
            #    log(1 - w e^{iθ}); total 2πi log(1/2)]
            # (rho_1, (1,0)) = +2*pi*i*log 2   [same method around 1]
            "two_pi_i": mp.mpc(0, 2) * mp.pi,
        }


# ---------------------------------------------------------------------------
# direct quadrature of word coefficients


def iterated_integral_quadrature(word, a, b, dps=12, maxdegree=6):
    """Word coefficient of the path-ordered exponential over [a, b] by
    naive recursive tanh-sinh quadrature; first letter at the arrival end.

    Exponential in the depth (every level re-integrates the one below),
    so only useful for short words, but shares nothing with the series
    evaluators and therefore pins down the half-path word transformation
    independently.
    """
    word = tuple(word)
    with mp.workdps(dps):
        lo = mp.mpf(a)

        def rec(w, upper):
            if not w:
                return mp.mpf(1)
            pole = mp.mpf(0 if w[0] == 0 else 1)
            return mp.quad(lambda t: rec(w[1:], t) / (t - pole),
                           [lo, upper], maxdegree=maxdegree)

        return rec(word, mp.mpf(b))


if __name__ == "__main__":
    # regenerate the headline frozen values
    import json

    mp.mp.dps = 30
    print("d_0..d_12 ", d_by_recurrence(12))
    print("gf_0..gf_12", gf_coeffs_by_division(12))
    print("op(0..14)  ", [op_by_enumeration(a) for a in range(15)])
    print("sh(10,10)  ", shuffle_by_enumeration((1, 0), (1, 0)))
    print("dual(3)    ", dual_by_word_manipulation((3,)))
    print("dual(1,3)  ", dual_by_word_manipulation((1, 3)))
    print("|W_4|      ", len(admissible_words_by_filter(4)))
    print("zeta(2)    ", mzv_series_richardson((2,)))
    print("zeta(1,2)  ", mzv_series_richardson((1, 2)))
    print("li_half(1) ", li_half_truncated((1,)), "vs log2", mp.log(2))
