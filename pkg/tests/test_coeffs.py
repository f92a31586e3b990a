import pytest

from reeder.laurent import ONE, ZERO, LaurentPoly2, RationalFn
from reeder.qcomb import binom
from reeder.rootsys import c_even_weight, c_odd_weight
from reeder.stembridge import coeffs as cf
from reeder.stembridge.reduction import even_row, odd_row
from reeder.stembridge.rows import big_f

q = LaurentPoly2.monomial(1, 0)
t = LaurentPoly2.monomial(0, 1)


def test_b_small_values():
    assert cf.b_m(1) == q + ONE
    assert cf.c_m(1, 2) == q ** -3 + q ** 4
    assert cf.c_m(0, 5) == ZERO
    assert cf.b_coefficients("Psi6", 3) == (q + ONE) * (q ** 4 + q ** -4)


def test_selectors_reject_unknown_names():
    with pytest.raises(cf.OutOfRange):
        cf.b_coefficients("nope")
    with pytest.raises(cf.OutOfRange):
        cf.c_coefficients("nope", 1, 2)


def test_j_sets_spacing():
    assert list(cf.j_sets(1, 5, 2)) == [(2, 4), (2, 5), (3, 5)]
    assert list(cf.j_sets(0, 3, 0)) == [()]


@pytest.mark.parametrize("n", range(2, 11))
def test_gamma_two_step(n):
    psi = cf.psi6(n)
    for k in range(n + 2):
        rhs = cf.gamma_hkr(2, n - 2, k - 1) + cf.gamma_hkr(2, n - 1, k) + psi * binom(n - k - 2, k - 1)
        assert cf.gamma_hkr(2, n, k) == rhs


@pytest.mark.parametrize("n", range(1, 10))
def test_gamma_p_d_shift(n):
    for m in range(1, n + 1):
        for h in range(m):
            name = "gamma_p" if (m - h) % 2 == 0 else "gamma_d"
            assert cf.b_coefficients(name, n, m, h) == cf.b_coefficients(name, n + 1, m + 1, h + 1)


def test_lambda0_1n_small():
    assert cf.lambda0_1n(2) == -(t - q) * (t + ONE) * t ** -1
    assert RationalFn(cf.lambda0_1n(2)) == RationalFn(-(t - q) * (t * t - ONE), t * (t - ONE))


@pytest.mark.parametrize("n", range(2, 9))
def test_lambda_closed_forms_match_sums(n):
    assert cf.lambda0_1n(n) == cf.lambda0_1n_sum(n) == cf.lambda_0(1, n)
    for k in range(1, n // 2 + 1):
        assert cf.lambda_kk(k, n) == cf.lambda_kk_sum(k, n)


@pytest.mark.parametrize("n", range(2, 8))
def test_even_coefficients_match_collected_row(n):
    for k in range(1, n // 2 + 1):
        row = even_row(k, n)
        for h in range(k + 1):
            key = (0,) * n if h == 0 else c_even_weight(n, h)
            assert row.coeffs.get(key, ZERO) == cf.lambda_h(h, k, n)


@pytest.mark.parametrize("n", range(3, 8))
def test_odd_coefficients_match_collected_row(n):
    for k in range((n - 1) // 2 + 1):
        row = odd_row(k, n)
        assert row.coeffs.get((0,) * n, ZERO) == cf.lambda2_0(k, n)
        for h in range(k + 1):
            assert row.coeffs.get(c_odd_weight(n, h), ZERO) == cf.lambda2_2h(h, k, n)
        for h in range(1, min(k + 1, n // 2) + 1):
            assert row.coeffs.get(c_even_weight(n, h), ZERO) == cf.lambda2_h(h, k, n)


@pytest.mark.parametrize("n", range(3, 9))
def test_psi_and_gamma0(n):
    for k in range(1, (n - 1) // 2 + 1):
        assert cf.psi_nk(n, k) == cf.psi_nk_closed(n, k)
        if k >= 2:
            assert cf.gamma0_c(k, n) == cf.gamma0_c(k - 1, n - 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_power_one_antisymmetry(n):
    for j in range(1, n + 1):
        r = n - j + 1
        for i in range(r + 2):
            a = n - i - j + 2
            assert big_f(i, r, 1) == -big_f(a, r, 1)


def test_power_two_is_not_plain_antisymmetry():
    # the power-2 symmetry is a sign-reversing bijection of index sets, not F_i = -F_B
    n, j = 4, 1
    r = n - j + 1
    assert any(big_f(i, r, 2) != -big_f(n - i - j + 3, r, 2) for i in range(r + 2))


def test_d_is_difference():
    for n in range(3, 9):
        for k in range((n - 1) // 2 + 1):
            assert cf.d_kn(k, n) == cf.gammak_c(k, n) - cf.gamma0_c(k, n)
