"""Exact relation vectors, their rank, and the numeric residuals."""

import mpmath as mp
import pytest

from mzv.dims import d_sequence
from mzv.relations import (RelationVector, all_relations, exact_rank_of,
                           gen_double_shuffle, gen_duality, upper_bound,
                           verify_all, verify_numeric)

U_FROZEN = {2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 4}


def test_double_shuffle_weight_four_is_the_classical_vector():
    vecs = gen_double_shuffle(4)
    assert len(vecs) == 1
    vec = vecs[0]
    assert vec.coeffs == {(1, 1, 0, 0): 4, (1, 0, 0, 0): -1}
    assert vec.provenance == ("double_shuffle", (1, 0), (1, 0))


def test_duality_weight_three_and_four():
    d3 = gen_duality(3)
    assert [v.coeffs for v in d3] == [{(1, 0, 0): 1, (1, 1, 0): -1}]
    assert d3[0].provenance == ("duality", (1, 0, 0))
    d4 = gen_duality(4)
    # both weight-4 depth-2 words are self-dual, only (4) <-> (1,1,2) remains
    assert [v.coeffs for v in d4] == [{(1, 0, 0, 0): 1, (1, 1, 1, 0): -1}]


def test_relation_sources_respect_weight_floors():
    with pytest.raises(ValueError):
        gen_double_shuffle(3)
    with pytest.raises(ValueError):
        gen_duality(2)
    assert all_relations(2) == []
    assert all_relations(3, use_duality=False) == []


def test_upper_bounds_frozen_and_sandwiched():
    d = d_sequence(7)
    for n, u_want in U_FROZEN.items():
        rank, u = upper_bound(n)
        assert u == u_want, n
        assert rank == 2 ** (n - 2) - u
        assert d[n] <= u <= 2 ** (n - 2), n


def test_rank_does_not_depend_on_row_order():
    vecs = all_relations(5)
    assert exact_rank_of(vecs) == exact_rank_of(list(reversed(vecs)))


def test_duality_tightens_weight_three():
    assert upper_bound(3, use_duality=False) == (0, 2)
    assert upper_bound(3, use_duality=True) == (1, 1)


def test_verify_numeric_weight_four():
    for vec in all_relations(4):
        r = verify_numeric(vec, 40)
        with mp.workdps(60):
            assert abs(r.val) < mp.mpf("1e-35"), vec.provenance
            assert abs(r.val) <= r.err


def test_verify_all_small_weights():
    for n in (4, 5):
        ok, worst = verify_all(n, prec=40)
        assert ok, n
        assert worst < mp.mpf("1e-30"), n


def test_relation_vector_validation():
    with pytest.raises(ValueError):
        RelationVector(4, {(1, 0, 0, 0): 1}, ("test",))
    with pytest.raises(ValueError):
        RelationVector(4, {(0, 1, 0, 0): 1, (1, 0, 0, 0): -1}, ("test",))
    with pytest.raises(ValueError):
        RelationVector(3, {(1, 0, 0, 0): 1, (1, 1, 0): -1}, ("test",))


def test_relation_vector_drops_zero_entries():
    vec = RelationVector(4, {(1, 0, 0, 0): 0, (1, 1, 0, 0): 2,
                             (1, 0, 1, 0): -2}, ("test",))
    assert vec.coeffs == {(1, 1, 0, 0): 2, (1, 0, 1, 0): -2}
    assert bool(vec)
