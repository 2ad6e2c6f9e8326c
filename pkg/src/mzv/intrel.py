"""Integer-relation detection over vectors of bounded-error reals.

pslq() is a from-scratch implementation of the standard algorithm with
gamma = sqrt(4/3).  It either returns a gcd-reduced relation whose
residual passes an independent re-evaluation, or a none_below_bound
verdict carrying the certified lower bound 1/max|H_jj| on the norm of any
relation that could still exist.  Verdicts of the second kind are
evidence at the stated (max_norm, precision), never proofs.

lll_reduce() is a small exact-arithmetic LLL (delta = 0.99, Fraction
Gram-Schmidt); it exists to cross-validate found relations on the lattice
[I | C x] with an algorithm that shares no code with pslq().
"""

from fractions import Fraction

import mpmath as mp

from .precision import PrecReal


class InsufficientPrecision(ArithmeticError):
    pass


class RelationResult:
    __slots__ = ("status", "coefficients", "norm_bound", "precision_used",
                 "residual")

    def __init__(self, status, coefficients, norm_bound, precision_used,
                 residual):
        assert status in ("found", "none_below_bound")
        self.status = status
        self.coefficients = coefficients
        self.norm_bound = norm_bound
        self.precision_used = precision_used
        self.residual = residual

    def __repr__(self):
        if self.status == "found":
            return "RelationResult(found, %s, residual=%s)" % (
                self.coefficients, mp.nstr(self.residual.val, 5))
        return "RelationResult(none_below_bound, norm_bound=%d)" % (
            self.norm_bound,)


def _as_prec_real(x):
    if isinstance(x, PrecReal):
        return x
    return PrecReal(x, 0)


def _gcd_reduce(vec):
    g = 0
    for c in vec:
        g = _gcd(g, abs(c))
    if g > 1:
        vec = [c // g for c in vec]
    for c in vec:
        if c:
            if c < 0:
                vec = [-x for x in vec]
            break
    return vec


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _residual(xs, vec):
    total = PrecReal(0, 0)
    for x, c in zip(xs, vec):
        total = total + x * PrecReal(c, 0)
    return total


def pslq(xs, max_norm=10 ** 6, prec=None):
    """Either a relation among xs or a certificate that none has norm
    <= max_norm at this precision."""
    xs = [_as_prec_real(x) for x in xs]
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two inputs")
    if prec is None:
        prec = 20 + 10 * n
    if prec < 20 + 10 * n:
        raise ValueError("precision %d below the floor 20 + 10*len = %d"
                         % (prec, 20 + 10 * n))
    tol_in = mp.mpf(10) ** (-prec)
    for x in xs:
        if x.err > tol_in:
            raise InsufficientPrecision(
                "input error bound %s exceeds 10^-%d" % (mp.nstr(x.err, 5),
                                                         prec))
    with mp.workdps(prec + 10):
        g = mp.sqrt(mp.mpf(4) / 3)
        x = [mp.mpf(v.val) for v in xs]
        if any(xi == 0 for xi in x):
            # a zero entry is the relation e_i all by itself
            i = [k for k, xi in enumerate(x) if xi == 0][0]
            vec = [0] * n
            vec[i] = 1
            return RelationResult("found", vec, 1, prec, _residual(xs, vec))
        s = [mp.mpf(0)] * n
        acc = mp.mpf(0)
        for k in range(n - 1, -1, -1):
            acc += x[k] ** 2
            s[k] = mp.sqrt(acc)
        t = s[0]
        y = [xi / t for xi in x]
        s = [sk / t for sk in s]
        H = [[mp.mpf(0)] * (n - 1) for _ in range(n)]
        for i in range(n):
            if i < n - 1:
                H[i][i] = s[i + 1] / s[i]
            for j in range(i):
                H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])
        A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        B = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

        def reduce_from(start):
            for i in range(1, n):
                for j in range(min(i - 1, start), -1, -1):
                    if H[j][j] == 0:
                        continue
                    t = mp.nint(H[i][j] / H[j][j])
                    if t == 0:
                        continue
                    ti = int(t)
                    y[j] += t * y[i]
                    for k in range(j + 1):
                        H[i][k] -= t * H[j][k]
                    for k in range(n):
                        A[i][k] -= ti * A[j][k]
                        B[k][j] += ti * B[k][i]

        reduce_from(n - 1)
        found_eps = mp.mpf(10) ** (10 - prec)
        maxit = 256 + 64 * n * prec
        norm_cert = mp.mpf(1)
        for _ in range(maxit):
            m, best = 0, mp.mpf(-1)
            for i in range(n - 1):
                q = g ** (i + 1) * abs(H[i][i])
                if q > best:
                    best, m = q, i
            y[m], y[m + 1] = y[m + 1], y[m]
            H[m], H[m + 1] = H[m + 1], H[m]
            A[m], A[m + 1] = A[m + 1], A[m]
            for r in range(n):
                B[r][m], B[r][m + 1] = B[r][m + 1], B[r][m]
            if m < n - 2:
                t0 = mp.hypot(H[m][m], H[m][m + 1])
                if t0 != 0:
                    c1, c2 = H[m][m] / t0, H[m][m + 1] / t0
                    for i in range(m, n):
                        h1, h2 = H[i][m], H[i][m + 1]
                        H[i][m] = c1 * h1 + c2 * h2
                        H[i][m + 1] = -c2 * h1 + c1 * h2
            reduce_from(m + 1)
            hmax = max(abs(H[i][i]) for i in range(n - 1))
            if hmax > 0:
                norm_cert = 1 / hmax
            imin = min(range(n), key=lambda i: abs(y[i]))
            if abs(y[imin]) < found_eps:
                vec = _gcd_reduce([B[k][imin] for k in range(n)])
                if not any(vec):
                    raise InsufficientPrecision("degenerate candidate")
                res = _residual(xs, vec)
                thresh = mp.mpf(10) ** (10 - prec)
                if abs(res.val) > thresh + res.err:
                    raise InsufficientPrecision(
                        "candidate %s fails re-evaluation: residual %s"
                        % (vec, mp.nstr(abs(res.val), 5)))
                return RelationResult("found", vec,
                                      max(1, int(mp.floor(norm_cert))),
                                      prec, res)
            if norm_cert > max_norm:
                return RelationResult(
                    "none_below_bound", None,
                    int(mp.floor(norm_cert)), prec,
                    PrecReal(min(abs(v) for v in y), 0))
        raise InsufficientPrecision(
            "iteration budget exhausted with norm bound %s <= max_norm %d"
            % (mp.nstr(norm_cert, 5), max_norm))


def _fr_round(q):
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


def lll_reduce(rows, delta=Fraction(99, 100)):
    """Exact LLL on integer rows; returns a new reduced list of rows."""
    b = [[int(v) for v in r] for r in rows]
    n = len(b)

    def gram():
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms = [Fraction(0)] * n
        star = [[Fraction(0)] * len(b[0]) for _ in range(n)]
        for i in range(n):
            star[i] = [Fraction(v) for v in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    continue
                mu[i][j] = Fraction(
                    sum(Fraction(x) * y for x, y in zip(b[i], star[j])),
                    1) / norms[j]
                star[i] = [si - mu[i][j] * sj
                           for si, sj in zip(star[i], star[j])]
            norms[i] = sum(si * si for si in star[i])
        return mu, norms

    k = 1
    while k < n:
        mu, norms = gram()
        for j in range(k - 1, -1, -1):
            q = _fr_round(mu[k][j])
            if q:
                b[k] = [xi - q * yi for xi, yi in zip(b[k], b[j])]
                mu, norms = gram()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            k = max(k - 1, 1)
    return b


def lll_cross_check(xs, coefficients, prec):
    """Confirm a pslq 'found' vector by reducing the lattice [I | C x]
    with the independent LLL routine; true when some reduced row
    reproduces +-coefficients with a small last coordinate."""
    xs = [_as_prec_real(x) for x in xs]
    n = len(xs)
    with mp.workdps(prec + 10):
        C = mp.mpf(10) ** (prec - 6)
        rows = []
        for i, x in enumerate(xs):
            row = [0] * n + [int(mp.nint(C * x.val))]
            row[i] = 1
            rows.append(row)
        reduced = lll_reduce(rows)
        want = _gcd_reduce(list(coefficients))
        limit = mp.mpf(10) ** 6
        for r in reduced:
            head = _gcd_reduce(list(r[:n]))
            if head == want and abs(r[n]) < limit * max(
                    1, max(abs(c) for c in want)):
                return True
    return False
