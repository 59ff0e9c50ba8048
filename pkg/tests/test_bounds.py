import math
import random
from fractions import Fraction

import pytest

from ramseyprog.bounds import (
    alpha_semi,
    beta_quasi,
    beta_table,
    comparison_bounds,
    dominant_eigenpair,
    dominant_eigenvalue,
    frequency_vectors,
    lambda_max_by_charpoly,
    multinomial_count,
    quartic_root_check,
    quasi_counting_bound,
    semi_bound,
    semi_counting_bound,
    transfer_matrix,
    weighted_conjugate_sum,
)
from ramseyprog.errors import ConvergenceError
from ramseyprog.progressions import Family, pair_multiplicity

from brute import weighted_sums


def test_alpha_semi_values():
    assert alpha_semi(1) == pytest.approx(1.414214, abs=1e-6)
    assert alpha_semi(2) == pytest.approx(1.154701, abs=1e-6)
    assert alpha_semi(3) == pytest.approx(1.069045, abs=1e-6)
    for m in range(1, 12):
        a = alpha_semi(m)
        assert abs(a * a * (2**m - 1) - 2**m) / 2**m < 1e-12
    with pytest.raises(ValueError):
        alpha_semi(0)


def test_multinomial_count():
    assert multinomial_count((1, 2, 2)) == 30
    assert multinomial_count((7, 0, 0)) == 1
    assert multinomial_count((0, 0, 4)) == 1
    assert multinomial_count((2, 2)) == 6
    with pytest.raises(ValueError):
        multinomial_count((1, -1))


def test_frequency_vectors_enumeration():
    vs = list(frequency_vectors(3, 2))
    assert sorted(vs) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    for total, m in ((0, 1), (4, 3), (6, 2), (5, 5)):
        vs = list(frequency_vectors(total, m))
        assert len(vs) == math.comb(total + m - 1, m - 1)
        assert len(set(vs)) == len(vs)
        assert all(sum(v) == total and len(v) == m for v in vs)
    # total vector count: each of the `total` slots picks one of m values
    for total, m in ((4, 3), (5, 2)):
        assert sum(multinomial_count(v) for v in frequency_vectors(total, m)) == m**total


def test_semi_counting_bound_example():
    b = semi_counting_bound(10, 3, 1)
    assert b.closed_form == 12800
    assert b.sum_form == 12800
    assert b.displayed_form == 6400  # exponent-k variant is strictly smaller


def test_semi_counting_bound_scope1_degenerate():
    # single frequency vector (k-1, with weight 0 and multinomial 1)
    b = semi_counting_bound(9, 5, 1)
    assert b.sum_form == Fraction(81, 4) * 2 ** (9 - 5 + 1)
    assert b.sum_form == b.closed_form


def test_semi_counting_bound_collapse():
    for k in range(2, 9):
        for m in range(1, 5):
            b = semi_counting_bound(10, k, m)
            assert b.sum_form == b.closed_form
            assert b.displayed_form < b.closed_form


def test_semi_counting_bound_validation():
    with pytest.raises(ValueError):
        semi_counting_bound(10, 1, 1)
    with pytest.raises(ValueError):
        semi_counting_bound(0, 3, 1)
    with pytest.raises(ValueError):
        semi_counting_bound(10, 3, 0)


def test_transfer_matrix_entries():
    A = transfer_matrix(2, 1)
    assert A.entries == (
        (Fraction(1), Fraction(1)),
        (Fraction(1, 2), Fraction(1)),
    )
    A = transfer_matrix(3, 2)
    assert A.entries == (
        (Fraction(1), Fraction(1), Fraction(1)),
        (Fraction(2, 3), Fraction(2, 3), Fraction(1)),
        (Fraction(4, 9), Fraction(2, 3), Fraction(1)),
    )
    assert transfer_matrix(5, 0).entries == ((Fraction(1),),)


def test_transfer_matrix_entry_law():
    for r in (2, 3, 4):
        for n in (0, 1, 2, 3, 4):
            A = transfer_matrix(r, n)
            alpha = 1 - Fraction(1, r)
            for i in range(n + 1):
                for j in range(n + 1):
                    assert A.entries[i][j] == alpha ** pair_multiplicity(i, j, n)
            assert all(x == 1 for x in A.entries[0])
            assert all(row[n] == 1 for row in A.entries)
            assert all(0 < x <= 1 for row in A.entries for x in row)


def test_transfer_matrix_validation():
    with pytest.raises(ValueError):
        transfer_matrix(1, 1)
    with pytest.raises(ValueError):
        transfer_matrix(2, -1)
    with pytest.raises(ValueError):
        transfer_matrix(2, 64)  # dimension 65 exceeds the supported cap


def test_dominant_eigenvalue_closed_form():
    lam, residual = dominant_eigenvalue(transfer_matrix(2, 1))
    assert abs(lam - (1 + 1 / math.sqrt(2))) < 1e-10
    assert residual <= 1e-12
    lam, _ = dominant_eigenvalue(transfer_matrix(2, 0))
    assert lam == pytest.approx(1.0, abs=1e-12)
    lam, _ = dominant_eigenvalue(transfer_matrix(3, 2))
    assert lam == pytest.approx(2.425005, abs=1e-4)


def test_dominant_eigenvalue_sandwich_and_positivity():
    for r in (2, 3, 4, 6):
        for n in (1, 2, 3, 5):
            A = transfer_matrix(r, n)
            lam, vec, _ = dominant_eigenpair(A)
            sums = [float(s) for s in A.row_sums()]
            assert min(sums) - 1e-9 <= lam <= max(sums) + 1e-9
            assert all(x > 0 for x in vec)


def test_dominant_eigenvalue_convergence_error():
    A = transfer_matrix(3, 2)
    with pytest.raises(ConvergenceError) as err:
        dominant_eigenpair(A, tol=1e-30, max_iter=5)
    assert err.value.best_residual is not None
    assert err.value.best_residual > 0


def test_charpoly_cross_check():
    for r in (2, 3, 4):
        for n in (1, 2, 3):
            A = transfer_matrix(r, n)
            power, _ = dominant_eigenvalue(A)
            bisected = lambda_max_by_charpoly(A)
            assert abs(power - bisected) < 1e-9


def test_beta_quasi_values():
    assert beta_quasi(2, 1).base == pytest.approx(1.08239, abs=1e-5)
    assert beta_quasi(4, 1).base == pytest.approx(1.46410, abs=1e-5)
    res = beta_quasi(3, 4)
    assert res.base < 1 and not res.useful
    assert beta_quasi(2, 1).useful
    with pytest.raises(ValueError):
        beta_quasi(2, 0)


def test_quartic_root_check():
    root = quartic_root_check()
    assert root == pytest.approx(1.082392, abs=1e-6)
    assert abs(root**4 - 8 * root**2 + 8) < 1e-12
    assert root > 1.08226


def test_weighted_conjugate_sum_base_cases():
    vec, total = weighted_conjugate_sum(1, 2, 1)
    assert vec == [Fraction(1), Fraction(1, 2)]
    assert total == Fraction(3, 2)
    vec, total = weighted_conjugate_sum(2, 2, 1)
    assert vec == [Fraction(3, 2), Fraction(1)]
    assert total == Fraction(5, 2)
    with pytest.raises(ValueError):
        weighted_conjugate_sum(0, 2, 1)


def test_weighted_conjugate_sum_matches_enumeration():
    for r in (2, 3):
        for n in (0, 1, 2):
            for t in range(1, 6):
                vec, total = weighted_conjugate_sum(t, r, n)
                brute_vec = weighted_sums(t, r, n)
                assert vec == brute_vec
                assert total == sum(brute_vec)


def test_weighted_conjugate_sum_closed_form():
    hi = 1 + 1 / math.sqrt(2)
    lo = 1 - 1 / math.sqrt(2)
    for k in range(2, 21):
        _, total = weighted_conjugate_sum(k - 1, 2, 1)
        assert float(total) == pytest.approx((hi**k + lo**k) / 2, rel=1e-9)


def test_quasi_counting_bound():
    assert quasi_counting_bound(2, 10, 3, 1) == 32000
    # displayed two-color diameter-1 closed form
    for k in range(3, 11):
        N = 20
        got = float(quasi_counting_bound(2, N, k, 1))
        hi = (1 + 1 / math.sqrt(2)) ** k
        lo = (1 - 1 / math.sqrt(2)) ** k
        want = N * N * 2 ** (N - k + 1) * (hi + lo) / (2 * (k - 1))
        assert got == pytest.approx(want, rel=1e-9)
    # k=2 base case: single-entry vectors, S_1 = sum of alpha^j
    for r, n in ((2, 1), (3, 2), (4, 0)):
        alpha = 1 - Fraction(1, r)
        s1 = sum(alpha**j for j in range(n + 1))
        assert quasi_counting_bound(r, 7, 2, n) == Fraction(49) * r ** (7 - 1) * s1
    with pytest.raises(ValueError):
        quasi_counting_bound(2, 10, 1, 1)


def test_comparison_bounds():
    cb = comparison_bounds(4, 1, 10, 2)
    assert cb.naive_quasi == pytest.approx(32.0, rel=1e-12)
    assert cb.landman_semi == pytest.approx(100.0)
    assert cb.semi_power == pytest.approx(alpha_semi(2) ** 10)
    assert cb.quasi_power == pytest.approx(beta_quasi(4, 1).base ** 10)
    # with r=2, n=1 the naive base is exactly 1: no growth at all
    flat = comparison_bounds(2, 1, 12, 1)
    assert flat.naive_quasi == pytest.approx(1.0)
    with pytest.raises(ValueError):
        comparison_bounds(0, 1, 3, 1)


def test_semi_bound_threshold_is_exact():
    res = semi_bound(2)
    assert res.base_squared == Fraction(4, 3)
    assert res.threshold(25) == 36
    assert res.useful
    assert semi_bound(1).threshold(2) == 2
    assert semi_bound(1).threshold(3) == 2  # 2*sqrt(2) = 2.828...
    # exact integer floor must agree with careful float evaluation
    rng = random.Random(108)
    for _ in range(100):
        m = rng.randint(1, 6)
        k = rng.randint(0, 40)
        want = int((Fraction(2**m, 2**m - 1) ** k).__float__() ** 0.5)
        have = semi_bound(m).threshold(k)
        assert abs(have - want) <= 1, (m, k)
    with pytest.raises(ValueError):
        semi_bound(2).threshold(-1)


def test_quasi_threshold_floor():
    res = beta_quasi(4, 1)
    assert res.threshold(10) == math.floor(res.base**10)


def test_beta_table_region():
    results = beta_table(4, 6)
    assert len(results) == 18
    by_cell = {(res.r, res.family.param): res.base for res in results}
    goldens = {
        (2, 1): 1.08239,
        (3, 1): 1.28511,
        (3, 2): 1.11226,
        (3, 3): 1.02236,
        (4, 1): 1.46410,
        (4, 2): 1.24686,
        (4, 3): 1.12770,
        (4, 4): 1.05338,
        (4, 5): 1.00384,
    }
    for cell, value in goldens.items():
        # the published 5-decimal values are truncations, so compare from below
        assert value - 1e-5 <= by_cell[cell] <= value + 1.1e-5
    below_one = {cell for cell, b in by_cell.items() if b <= 1}
    assert below_one == {(2, n) for n in range(2, 7)} | {
        (3, n) for n in range(4, 7)
    } | {(4, 6)}
    with pytest.raises(ValueError):
        beta_table(1, 6)


def test_beta_monotone_where_useful():
    # strict monotonicity (decreasing in n, increasing in r) holds on the
    # useful region base > 1; past it the Perron root outgrows r and the
    # trend in n reverses, so nothing is asserted there
    results = beta_table(6, 8)
    cells = {(res.r, res.family.param): res for res in results}
    for (r, n), res in cells.items():
        if not res.useful:
            continue
        nxt = cells.get((r, n + 1))
        if nxt is not None and nxt.useful:
            assert nxt.base < res.base
        prev_r = cells.get((r - 1, n))
        if prev_r is not None and prev_r.useful:
            assert prev_r.base < res.base
