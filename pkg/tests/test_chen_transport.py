"""Transport anchors: orientations, loop coefficients, regularization.

The sign conventions are pinned by closed forms (see oracles.analytic_anchors
for the derivations): first letter of a word acts at the arrival end, and
written products compose with the rightmost factor traversed first.
"""

from fractions import Fraction

import mpmath as mp
import pytest

import oracles
from mzv.chen.paths import (Arc, Path, PathThroughSingularity, Segment,
                            rho0, rho1, segment_path)
from mzv.chen.transport import (compose, regularization_ladder, transport,
                                transport_regularized)

ANCHOR = oracles.analytic_anchors(dps=45)
# Arithmetic on anchors has to happen at high working precision: mpmath
# rounds every operation, even unary minus, to the ambient context.
with mp.workdps(45):
    NEG_LOG2 = -ANCHOR["log2"]
    TPI_LOG2 = ANCHOR["two_pi_i"] * ANCHOR["log2"]
    NEG_TPI_LOG2 = -TPI_LOG2


def _close(a, b, tol="1e-30"):
    with mp.workdps(45):
        return abs(a - b) < mp.mpf(tol)


def test_segment_letter_zero_descending():
    # integrating dx/x from 1/2 down to 1/4 gives log(1/4) - log(1/2)
    F = transport(segment_path(Fraction(1, 2), Fraction(1, 4)), 1, 35)
    assert _close(F.coeff((0,)).val, NEG_LOG2)
    G = transport(segment_path(Fraction(1, 4), Fraction(1, 2)), 1, 35)
    assert _close(G.coeff((0,)).val, ANCHOR["log2"])


def test_loop_around_zero_residue():
    F = transport(rho0(), 2, 35)
    assert _close(F.coeff((0,)).val, ANCHOR["two_pi_i"])
    assert _close(F.coeff((1,)).val, 0)
    assert _close(F.coeff((1, 0)).val, NEG_TPI_LOG2)
    assert _close(F.coeff((0, 1)).val, TPI_LOG2)


def test_loop_around_one():
    F = transport(rho1(), 2, 35)
    assert _close(F.coeff((1,)).val, ANCHOR["two_pi_i"])
    assert _close(F.coeff((0,)).val, 0)
    assert _close(F.coeff((1, 0)).val, TPI_LOG2)


def test_transport_is_grouplike():
    F = transport(rho0(), 3, 35)
    for u, v in [((0,), (1,)), ((0,), (0,)), ((0, 1), (0,))]:
        assert abs(F.grouplike_defect(u, v).val) < mp.mpf("1e-30")


def test_composition_matches_whole_path():
    a, m, b = Fraction(1, 4), Fraction(1, 2), Fraction(2, 3)
    whole = transport(segment_path(a, b), 3, 35)
    first = transport(segment_path(a, m), 3, 35)
    second = transport(segment_path(m, b), 3, 35)
    with mp.workdps(45):
        glued = compose(second, first)
        for w in [(0,), (1,), (0, 1), (1, 0, 0)]:
            assert abs(whole.coeff(w).val - glued.coeff(w).val) < mp.mpf(
                "1e-30")


def test_reverse_path_inverts():
    F = transport(segment_path(Fraction(1, 4), Fraction(1, 2)), 2, 35)
    R = transport(segment_path(Fraction(1, 2), Fraction(1, 4)), 2, 35)
    with mp.workdps(45):
        prod = F * R
        assert abs(prod.coeff(()).val - 1) < mp.mpf("1e-30")
        for w in [(0,), (1,), (0, 0), (0, 1)]:
            assert abs(prod.coeff(w).val) < mp.mpf("1e-30")


def test_homotopy_invariance_above_zero():
    arc = Path([Arc(0, Fraction(1, 2), 0, Fraction(1, 2))])
    lift = 0.6
    detour = Path([Segment(0.5, 0.5 + lift * 1j),
                   Segment(0.5 + lift * 1j, -0.5 + lift * 1j),
                   Segment(-0.5 + lift * 1j, -0.5)])
    A = transport(arc, 2, 30)
    B = transport(detour, 2, 30)
    with mp.workdps(40):
        for w in [(0,), (1,), (0, 1), (1, 1)]:
            assert abs(A.coeff(w).val - B.coeff(w).val) < mp.mpf("1e-25")


def test_monodromy_differs_below_zero():
    above = Path([Arc(0, Fraction(1, 2), 0, Fraction(1, 2))])
    below = Path([Arc(0, Fraction(1, 2), 0, Fraction(-1, 2))])
    A = transport(above, 1, 30)
    B = transport(below, 1, 30)
    with mp.workdps(40):
        gap = A.coeff((0,)).val - B.coeff((0,)).val
        assert _close(gap, ANCHOR["two_pi_i"], "1e-25")


def test_endpoint_on_pole_rejected():
    with pytest.raises(PathThroughSingularity):
        transport(segment_path(0, Fraction(1, 2)), 1, 20)


def test_chord_through_pole_rejected():
    with pytest.raises(PathThroughSingularity):
        transport(segment_path(Fraction(1, 2), Fraction(3, 2)), 1, 20)


def test_disconnected_path_rejected():
    with pytest.raises(ValueError):
        Path([Segment(Fraction(1, 4), Fraction(1, 3)),
              Segment(Fraction(1, 2), Fraction(2, 3))]).chords()


def test_regularized_unit_interval_weight_two_three():
    R = transport_regularized(segment_path(0, 1, reg_start=True,
                                           reg_end=True), 3, 10)
    with mp.workdps(30):
        z2 = ANCHOR["zeta2"]
        z3 = ANCHOR["zeta3"]
        assert abs(R.coeff((0, 1)).val + z2) < mp.mpf("1e-9")
        assert abs(R.coeff((0, 0, 1)).val + z3) < mp.mpf("1e-9")
        # Euler: zeta(1,2) = zeta(3), depth 2 so the sign flips back
        assert abs(R.coeff((0, 1, 1)).val - z3) < mp.mpf("1e-9")
        assert R.coeff((0, 1)).err < mp.mpf("1e-9")


def test_regularized_divergent_word_raises():
    R = transport_regularized(segment_path(0, 1, reg_start=True,
                                           reg_end=True), 2, 10)
    with pytest.raises(LookupError):
        R.coeff((1,))
    with pytest.raises(LookupError):
        R.coeff((0,))


def test_ladder_shape():
    lad = regularization_ladder(2, 10, rungs=8)
    assert len(lad["deltas"]) == 8
    assert len(lad["alphas"]) == 8
    assert len(lad["betas"]) == 8
    with mp.workdps(20):
        # deltas halve each rung
        for d0, d1 in zip(lad["deltas"], lad["deltas"][1:]):
            assert _close(d1 / d0, mp.mpf(1) / 2, "1e-15")
