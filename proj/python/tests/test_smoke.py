"""Smoke tests for the yflattice extension module."""

from fractions import Fraction

import yflattice as yf


def test_words_and_graph():
    assert yf.rank("21221") == 8
    assert yf.rank("") == 0
    assert yf.concat("2", "1221") == "21221"
    assert sorted(yf.up_neighbors("21")) == ["121", "211", "22"]
    assert sorted(yf.down_neighbors("2221")) == ["1221", "2121", "2211", "222"]
    assert yf.enumerate_level(4) == ["1111", "211", "121", "112", "22"]
    for n in range(12):
        assert len(yf.enumerate_level(n)) == yf.fibonacci(n + 1)
    assert yf.common_suffix_rank("21221", "1221") == 6
    assert [yf.g("21221", k) for k in (1, 2, 3)] == [2, 4, 7]


def test_path_counts():
    assert yf.d_bruteforce("", "22") == 3
    assert yf.d_closed("", "22") == 3
    assert yf.d_closed("1", "21") == 2
    assert yf.d_to_empty("21221") == 56
    assert yf.f_eval("21221", 0, 0) == Fraction(1, 720)
    assert yf.f_eval("21221", 5, 0) == Fraction(-1, 120)
    assert yf.f_eval("1111", 4, 3) == Fraction(-5, 8)
    assert yf.f_eval("", 0, 0) == 1
    assert yf.d_from_twos("22", 1) == 2
    assert yf.d_from_twos_fixed("22", 1, [1]) == 1
    whole, suffix_part, prefix_part = yf.factorize_check("2", "1221")
    assert whole == suffix_part * prefix_part == 56
    assert yf.enumerate_paths("", "2", 10) == [["2", "1", ""]]
    try:
        yf.d_bruteforce("", "2" * 16 + "1" * 8)
    except ValueError:
        pass
    else:
        raise AssertionError("expected the brute-force guard to refuse")


def test_boundary_measures():
    assert yf.pi_finite("21") == Fraction(1, 2)
    assert yf.pi_finite("2") == 1
    assert yf.is_positive_boundary("geometric:1") == "yes"
    assert yf.is_positive_boundary("const:5") == "no"
    lo, hi = yf.pi_infinite("geometric:1", "1/1000000")
    assert 0 < lo <= hi < 1 and hi - lo <= Fraction(1, 1000000)
    assert yf.pi_infinite("const:0", "1/10") == (0, 0)
    assert yf.mu_finite("finite:21", "2", 2) == Fraction(1, 2)
    assert yf.level_masses("geometric:1", 5, 8) == 1
    assert yf.mu_limit("geometric:1", "", "1/1000") == (1, 1)
    lo, hi = yf.mu_limit("geometric:1", "11", "1/1000000")
    assert 0 <= lo <= hi <= 1 and hi - lo <= Fraction(1, 1000000)

    report = yf.classify_level("geometric:1", 4, delta="1/2", l=1, epsilon="1/2")
    assert len(report["rows"]) == 5
    total_lo, total_hi = report["total_mass"]
    assert total_lo <= 1 <= total_hi

    stage = yf.classify_level_finite("finite:21221", 4, 6, delta="1/2", l=1, epsilon="1/2")
    assert stage["total_mass"] == (1, 1)
    assert sum(row["mu"][0] for row in stage["rows"]) == 1

    points, truncated = yf.concentration_series("geometric:1", "1/2", 4, 6)
    assert not truncated and [p["n"] for p in points] == [4, 5, 6]

    lower = yf.pi_ratio_bounds_check("geometric:1", "1/2", 1, "1")["lower"]
    assert lower == Fraction(1, 2)
    lhs, rhs = yf.ass_inequality_check("geometric:1", 4, "1/2", 6)
    assert lhs <= rhs


def main():
    test_words_and_graph()
    test_path_counts()
    test_boundary_measures()
    print("smoke ok")


if __name__ == "__main__":
    main()
