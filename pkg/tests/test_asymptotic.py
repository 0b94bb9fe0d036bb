import math

import pytest

from coprime_count import (
    error_report,
    f_of_n,
    main_term_finite,
    singular_constant,
)


def test_singular_constant_small_truncations():
    assert singular_constant(2) == pytest.approx(0.25, abs=1e-15)
    assert singular_constant(3) == pytest.approx(1 / 6, abs=1e-15)
    with pytest.raises(ValueError):
        singular_constant(1)


def test_singular_constant_truncation_stability():
    assert abs(singular_constant(10**6) - singular_constant(10**7)) < 1e-5


def test_singular_constant_monotone_with_bounded_tail():
    values = {P: singular_constant(P) for P in (11, 50, 100, 1000, 10**4, 10**5)}
    ordered = [values[P] for P in sorted(values)]
    assert all(a >= b for a, b in zip(ordered, ordered[1:]))
    for P in (11, 100, 1000, 10**4):
        assert abs(singular_constant(2 * P) - singular_constant(P)) <= 3.1 / P


def test_f_of_n_examples():
    sc = singular_constant(10**6)
    assert f_of_n(1, 10**6) == pytest.approx(sc, rel=1e-14)
    assert f_of_n(2, 10**6) == pytest.approx(3 * sc, rel=1e-14)
    assert abs(f_of_n(30, 10**6) - f_of_n(30, 10**7)) < 1e-5
    with pytest.raises(ValueError):
        f_of_n(100, 50)


def test_main_term_small_values(table_2000):
    # n=3: (9/2)(1/4)(8/9) = 1; n=4: 8*(2/3)*(3/4) = 4
    assert main_term_finite(3, table_2000) == pytest.approx(1.0, rel=1e-12)
    assert main_term_finite(4, table_2000) == pytest.approx(4.0, rel=1e-12)
    with pytest.raises(ValueError):
        main_term_finite(3000, table_2000)


def test_main_term_approaches_f(table_2000):
    # the tail beyond n multiplies by 1 + O(1/n)
    for n in (100, 500, 1000, 1999):
        M = main_term_finite(n, table_2000)
        f = f_of_n(n, 10**6)
        assert abs(M / (n * n / 2) - f) <= 10 * (3 / n)


def test_error_report_single_row(table_2000):
    (row,) = error_report(6, 6, table=table_2000)
    assert row.T == 9
    # M(6) = 18 * (22/25)(3/4)(8/9) = 10.56
    assert row.M == pytest.approx(10.56, rel=1e-12)
    assert row.abs_err_M == pytest.approx(1.56, rel=1e-10)
    assert row.abs_err_f == abs(row.T - row.fn_half_nsq)
    assert row.normalized_err == pytest.approx(row.abs_err_f / 6**1.5)


def test_error_report_rows_are_finite(table_2000):
    rows = error_report(50, 150, 10, table=table_2000)
    assert [r.n for r in rows] == list(range(50, 151, 10))
    for r in rows:
        assert math.isfinite(r.M) and math.isfinite(r.fn_half_nsq)
        assert r.normalized_err > 0
