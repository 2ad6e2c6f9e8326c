"""Integer-relation search and its independent lattice cross-check."""

from fractions import Fraction

import mpmath as mp
import pytest

from mzv.evaluator import eval_holder
from mzv.intrel import (InsufficientPrecision, lll_cross_check, lll_reduce,
                        pslq)
from mzv.precision import PrecReal


def _pair_zeta4_zeta2sq(prec):
    z4 = eval_holder((4,), prec + 10).value
    z2 = eval_holder((2,), prec + 10).value
    with mp.workdps(prec + 20):
        return [z4, z2 * z2]


def test_pslq_finds_classical_weight_four_relation():
    xs = _pair_zeta4_zeta2sq(60)
    r = pslq(xs, prec=60)
    assert r.status == "found"
    assert r.coefficients == [5, -2]
    assert r.precision_used == 60
    with mp.workdps(80):
        assert abs(r.residual.val) < mp.mpf("1e-45")
    assert "found" in repr(r)


def test_found_relation_survives_doubled_precision():
    xs = _pair_zeta4_zeta2sq(120)
    r = pslq(xs, prec=120)
    assert r.status == "found"
    assert r.coefficients == [5, -2]


def test_positive_scaling_leaves_coefficients_alone():
    xs = _pair_zeta4_zeta2sq(60)
    with mp.workdps(80):
        scaled = [x * PrecReal(3, 0) for x in xs]
    assert pslq(scaled, prec=60).coefficients == [5, -2]


def test_duplicate_inputs():
    z2 = eval_holder((2,), 70).value
    r = pslq([z2, z2], prec=60)
    assert r.coefficients == [1, -1]


def test_zero_entry_shortcut():
    z2 = eval_holder((2,), 70).value
    r = pslq([z2, PrecReal(0, 0)], prec=60)
    assert r.status == "found"
    assert r.coefficients == [0, 1]
    assert r.residual.val == 0


def test_none_below_bound_certificate():
    z5 = eval_holder((5,), 90).value
    z23 = eval_holder((2, 3), 90).value
    r = pslq([z5, z23], max_norm=10 ** 6, prec=80)
    assert r.status == "none_below_bound"
    assert r.coefficients is None
    assert r.norm_bound > 10 ** 6
    assert "none_below_bound" in repr(r)


def test_precision_floor_enforced():
    xs = _pair_zeta4_zeta2sq(60)
    with pytest.raises(ValueError):
        pslq(xs, prec=30)
    with pytest.raises(ValueError):
        pslq([xs[0]], prec=60)


def test_sloppy_inputs_rejected():
    xs = [PrecReal(mp.mpf("1.1"), mp.mpf("1e-5")),
          PrecReal(mp.mpf("2.3"), 0)]
    with pytest.raises(InsufficientPrecision):
        pslq(xs, prec=60)


# ---------------------------------------------------------------------------
# the exact LLL used for cross-checks


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _gram_schmidt(rows):
    n = len(rows)
    star = [[Fraction(v) for v in r] for r in rows]
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            if norms[j]:
                mu[i][j] = Fraction(sum(Fraction(x) * y for x, y in
                                        zip(rows[i], star[j]))) / norms[j]
                star[i] = [a - mu[i][j] * b
                           for a, b in zip(star[i], star[j])]
        norms[i] = sum(v * v for v in star[i])
    return mu, norms


def test_lll_reduce_properties():
    rows = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    out = lll_reduce(rows)
    # same lattice volume
    assert abs(_det3(out)) == abs(_det3(rows)) == 3
    mu, norms = _gram_schmidt(out)
    for i in range(3):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2), (i, j)
    delta = Fraction(99, 100)
    for k in range(1, 3):
        assert norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]
    # the classical small basis for this lattice
    assert sorted(max(abs(v) for v in r) for r in out) == [1, 1, 2]


def test_lll_cross_check_agrees_and_disagrees():
    xs = _pair_zeta4_zeta2sq(60)
    assert lll_cross_check(xs, [5, -2], 60)
    assert not lll_cross_check(xs, [7, -3], 60)
