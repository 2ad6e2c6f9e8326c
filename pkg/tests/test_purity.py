"""Word complexes: exact dimensions, square-zero, concentration."""

from math import comb

from mzv.purity import build_complex, cohomology, purity_report


def test_report_totals_and_word_counts():
    for n in range(2, 7):
        rep = purity_report(n)
        assert rep["all_pass"], n
        assert rep["failures"] == []
        assert rep["total_dim"] == rep["total_expected"] == 2 ** (n - 1)
        # one empty word plus 2^(k-2) admissible words for each 2 <= k <= n
        assert rep["words"] == 2 ** (n - 1)


def test_rows_concentrated_at_complementary_degree():
    rep = purity_report(4)
    for row in rep["results"]:
        assert row["square_zero"]
        assert row["concentrated"]
        H = row["cohomology"]
        assert sum(H) == 1
        assert H[4 - row["k"]] == 1


def test_empty_word_complex_is_simplicial():
    c = build_complex(3, ())
    assert c.dims() == [comb(4, p) for p in range(4)]
    assert c.check_square_zero()
    assert cohomology(c) == [0, 0, 0, 1]


def test_depth_word_dimensions():
    c = build_complex(5, (1, 0, 0))
    assert c.dims() == [comb(6, p) * comb(5 - p, 3) for p in range(6)]
    assert c.check_square_zero()
    assert cohomology(c) == [0, 0, 1, 0, 0, 0]
