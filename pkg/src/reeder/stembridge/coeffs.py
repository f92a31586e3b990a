"""
Coefficient formulas for the reduced recurrences.

Type B values are specialized (one variable q, stored in the q slot).  Type C
values are unspecialized Laurent polynomials in (q, t); the C-type row for
omega_{2k} collected by ``qm_row`` is twice the normalization used here, and
``reduction.even_row`` divides that factor out.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..laurent import ONE, ZERO, LaurentPoly2, RationalFn
from ..qcomb import binom, q_integer
from .rows import big_f


class OutOfRange(ValueError):
    pass


def _q(e: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(e, 0)


def _t(e: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(0, e)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _div(num: LaurentPoly2, den: LaurentPoly2) -> LaurentPoly2:
    return num.divmod_exact(den)


# --- type B (specialized) ------------------------------------------------------------


def c_m(m: int, n: int) -> LaurentPoly2:
    """c_m = (1-q^{2m})/(1-q^2) q^{-2n+1} (1+q^{4n-2m+1}); c_0 = 0."""
    if m < 0:
        raise OutOfRange(f"c_m needs m >= 0, got {m}")
    return q_integer(m, _q(2)) * _q(-2 * n + 1) * (ONE + _q(4 * n - 2 * m + 1))


def b_m(m: int) -> LaurentPoly2:
    """b_m = (q+1) q^{-2m+2} (1-q^{4m-2})/(1-q^2)."""
    if m < 1:
        raise OutOfRange(f"b_m needs m >= 1, got {m}")
    return (_q(1) + ONE) * _q(-2 * m + 2) * q_integer(2 * m - 1, _q(2))


def j_sets(h: int, k: int, r: int):
    """r-tuples h < j_1 < ... < j_r <= k with consecutive entries at least 2 apart."""
    if r < 0:
        return
    for js in combinations(range(h + 1, k + 1), r):
        if all(js[s + 1] - js[s] >= 2 for s in range(r - 1)):
            yield js


@lru_cache(maxsize=None)
def gamma_hkr(h: int, k: int, r: int) -> LaurentPoly2:
    """Gamma(h,k;r) = sum over J(h,k,r) of (q+1) sum_s (q^{2(j_s-1)} + q^{-2(j_s-1)})."""
    out = ZERO
    for js in j_sets(h, k, r):
        for j in js:
            out = out + (_q(1) + ONE) * (_q(2 * (j - 1)) + _q(-2 * (j - 1)))
    return out


def gamma0_b(k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_0 in the reduced specialized row of eps_k."""
    return gamma_i_b(0, k, n)


def gamma_i_b(i: int, k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_{eps_i} in the reduced specialized row of eps_k (i < k), sign included."""
    if not 0 <= i < k <= n:
        raise OutOfRange(f"need 0 <= i < k <= n, got i={i}, k={k}, n={n}")
    d = k - i
    if d % 2 == 0:
        s = d // 2
        return (c_m(i, n) * binom(n - i - s, s) + gamma_hkr(1, n - i, s)) * _sgn(s)
    s = (d - 1) // 2
    return ((c_m(i, n) + b_m(1)) * binom(n - i - s - 1, s) + gamma_hkr(2, n - i, s)) * _sgn(s + 1)


def psi6(n: int) -> LaurentPoly2:
    """(q+1)(q^{2n-2} + q^{2-2n})."""
    return (_q(1) + ONE) * (_q(2 * n - 2) + _q(2 - 2 * n))


def rewritten_row(m: int, n: int) -> dict:
    """{i: coefficient of C_{eps_i}} in c_m C_m - (rewritten right side) = 0."""
    out = {m: c_m(m, n)}
    for i in range(0, (m - 1) // 2 + 1):
        j = m - 2 * i - 1
        v = (c_m(j, n) + b_m(1)) * binom(n - m + i, i) + gamma_hkr(2, n - m + 2 * i + 1, i)
        out[j] = out.get(j, ZERO) - v * _sgn(i)
    for i in range(1, m // 2 + 1):
        j = m - 2 * i
        v = c_m(j, n) * binom(n - m + i, i) + gamma_hkr(1, n - m + 2 * i, i)
        out[j] = out.get(j, ZERO) - v * _sgn(i - 1)
    return out


def compact_row(m: int, n: int) -> dict:
    """{i: coefficient} of c_m C_m - sum b_i C_{m-2i+1} - sum b_{n-m+i+1} C_{m-2i}."""
    out = {m: c_m(m, n)}
    for i in range(1, (m + 1) // 2 + 1):
        j = m - 2 * i + 1
        out[j] = out.get(j, ZERO) - b_m(i)
    for i in range(1, m // 2 + 1):
        j = m - 2 * i
        out[j] = out.get(j, ZERO) - b_m(n - m + i + 1)
    return out


def gamma_p(n: int, m: int, h: int) -> LaurentPoly2:
    """Coefficient of C_h after substituting the lower rows, m - h = 2s even."""
    if (m - h) % 2 or not 0 <= h < m <= n:
        raise OutOfRange(f"gamma_p needs m - h even and positive, got n={n}, m={m}, h={h}")
    s = (m - h) // 2
    out = ZERO
    for i in range(s):
        out = out + b_m(s - i) * (_sgn(i) * binom(n - m + i, i))
    for i in range(1, s):
        out = out + b_m(n - h - s + i + 1) * (_sgn(i - 1) * binom(n - m + i, i))
    return out + gamma_hkr(1, n - h, s) * _sgn(s - 1)


def gamma_d(n: int, m: int, h: int) -> LaurentPoly2:
    """Same, m - h = 2s + 1 odd."""
    if (m - h) % 2 == 0 or not 0 <= h < m <= n:
        raise OutOfRange(f"gamma_d needs m - h odd and positive, got n={n}, m={m}, h={h}")
    s = (m - h - 1) // 2
    out = ZERO
    for i in range(s):
        out = out + b_m(n - h - s + i + 1) * (_sgn(i) * binom(n - m + i, i))
    for i in range(1, s + 1):
        out = out + b_m(s - i + 1) * (_sgn(i - 1) * binom(n - m + i, i))
    return out + (b_m(1) * binom(n - m + s, s) + gamma_hkr(2, n - h, s)) * _sgn(s)


_B_SELECTORS = {
    "c_m": c_m,
    "b_m": b_m,
    "Gamma_hkr": gamma_hkr,
    "Gamma0": gamma0_b,
    "Gamma_i": gamma_i_b,
    "Psi6": psi6,
    "gamma_p": gamma_p,
    "gamma_d": gamma_d,
}


def b_coefficients(selector: str, *params) -> LaurentPoly2:
    try:
        fn = _B_SELECTORS[selector]
    except KeyError:
        raise OutOfRange(f"unknown type-B selector {selector!r}") from None
    return fn(*params)


# --- type C (unspecialized) ----------------------------------------------------------


def F(i: int, j: int, n: int, power: int) -> LaurentPoly2:
    """F_i^{j,n} for the quasi-minuscule recurrence of the given power; zero when j is out of 1..n."""
    if not 1 <= j <= n:
        return ZERO
    return big_f(i, n - j + 1, power)


def psi_ij(i: int, j: int, n: int) -> LaurentPoly2:
    """Psi_i^{j,n} = F_i^{j,n} - F_{B(i,j)}^{j,n}, power 2, B(i,j) = n-i-j+3."""
    return F(i, j, n, 2) - F(n - i - j + 3, j, n, 2)


def lambda_kk(k: int, n: int) -> LaurentPoly2:
    """Leading coefficient of the omega_{2k} row, closed form."""
    if k < 1 or 2 * k > n:
        raise OutOfRange(f"need 1 <= k, 2k <= n, got k={k}, n={n}")
    num = (_t(2 * k - 1) - _q(1) * _t(2 * n)) * (_t(2 * k) - ONE)
    return _div(num, _t(n + 2 * k - 1) * (_t(1) - ONE))


def lambda_kk_sum(k: int, n: int) -> LaurentPoly2:
    out = ZERO
    for i in range(1, 2 * k + 1):
        out = out + F(0, i, n, 1)
    return out


@lru_cache(maxsize=None)
def lambda_0(k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_0 in the omega_{2k} row, by the recursion in n."""
    if k <= 0 or 2 * k > n:
        return ZERO
    out = lambda_0(k, n - 1) - lambda_0(k - 1, n - 2)
    out = out + F(0, 2, n, 1) * (_sgn(k) * binom(n - k - 1, k - 1))
    for i in range(1, k + 1):
        out = out + F(i, 1, n, 1) * (_sgn(k - i + 1) * binom(n - i - k, k - i))
    return out


def lambda_h(h: int, k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_{omega_{2h}} in the omega_{2k} row."""
    if h == 0:
        return lambda_0(k, n)
    if h == k:
        return lambda_kk(k, n)
    if not 0 < h < k or 2 * k > n:
        raise OutOfRange(f"need 0 <= h <= k, 2k <= n, got h={h}, k={k}, n={n}")
    return lambda_0(k - h, n - 2 * h) + lambda_kk(h, n) * (_sgn(k - h) * binom(n - h - k, k - h))


def lambda0_1n(n: int) -> LaurentPoly2:
    """Closed form of Lambda_0^{1,n}."""
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    num = -(_t(1) - _q(1)) * (_t(2 * n - 2) - ONE)
    return _div(num, _t(n - 1) * (_t(1) - ONE))


def lambda0_1n_sum(n: int) -> LaurentPoly2:
    """-sum_{m=2}^{n} (F_0^{2,m} + F_1^{1,m})."""
    out = ZERO
    for m in range(2, n + 1):
        out = out - F(0, 2, m, 1) - F(1, 1, m, 1)
    return out


def lambda2_2h(h: int, k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_{2|h} in the omega_1+omega_{2k+1} row."""
    if not 0 <= h <= k:
        return ZERO
    return F(0, 1, n, 2) * (_sgn(k - h) * binom(n - k - h - 1, k - h))


@lru_cache(maxsize=None)
def lambda2_h(h: int, k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_{omega_{2h}}, h >= 1, in the omega_1+omega_{2k+1} row."""
    if k < 0 or h < 1 or 2 * k + 1 > n or h > k + 1 or 2 * h > n:
        return ZERO
    if h == 1:
        return (lambda2_0(k - 1, n - 2) - lambda2_2h(0, k, n - 1)
                + F(0, 3, n, 2) * (_sgn(k) * binom(n - k - 2, k - 1)))
    return (lambda2_h(h - 1, k - 1, n - 2) - lambda2_2h(h - 1, k, n - 1)
            + F(0, 3, n, 2) * (_sgn(k - h) * binom(n - k - h - 1, k - h + 1)))


@lru_cache(maxsize=None)
def lambda2_0(k: int, n: int) -> LaurentPoly2:
    """Coefficient of C_0 in the omega_1+omega_{2k+1} row."""
    if k < 0 or 2 * k + 1 > n:
        return ZERO
    out = lambda2_0(k, n - 1) - lambda2_0(k - 1, n - 2)
    out = out + F(0, 3, n, 2) * (_sgn(k - 1) * binom(n - k - 2, k - 1))
    for i in range(1, k + 2):
        out = out + psi_ij(i, 1, n) * (_sgn(k - i + 1) * binom(n - k - i, k - i + 1))
    return out


def gamma0_c(k: int, n: int) -> LaurentPoly2:
    num = (_t(2) + _q(1)) * (_t(1) - _q(1)) * (_t(2 * (n - 2 * k)) - ONE)
    return _div(num, _t(n - 2 * k + 1) * (_t(1) - ONE))


def gammak_c(k: int, n: int) -> LaurentPoly2:
    a = _div(-(_t(1) - _q(1)) * (ONE + _q(1) * _t(2 * (n - 2 * k) - 1)), _t(n - 2 * k))
    b = _div((ONE - _q(2) * _t(2 * n - 2 * k - 1)) * (_t(2 * k) - ONE), _t(n - 1) * (_t(1) - ONE))
    return a - b


def gammak1_c(k: int, n: int) -> LaurentPoly2:
    return -_div((ONE - _q(2) * _t(2 * (n - k - 1))) * (_t(2 * k + 1) - ONE), _t(n - 1) * (_t(1) - ONE))


def d_kn(k: int, n: int) -> LaurentPoly2:
    num = (_q(2) * _t(2 * (k - 1)) - ONE) * (_t(2 * n - 2 * k + 1) - ONE)
    return _div(num, _t(n - 1) * (_t(1) - ONE))


def psi_nk(n: int, k: int) -> LaurentPoly2:
    """Psi(n,k) = sum_{i=1}^{k+1} Psi_i^{k-i+2,n} + F_0^{k+2,n}."""
    out = F(0, k + 2, n, 2)
    for i in range(1, k + 2):
        out = out + psi_ij(i, k - i + 2, n)
    return out


def psi_nk_closed(n: int, k: int) -> LaurentPoly2:
    num = (_t(2) + _q(1)) * (_t(1) - _q(1)) * (_t(2 * (n - 2 * k) - 1) + ONE)
    return _div(num, _t(n - 2 * k + 1))


_C_SELECTORS = {
    "Lambda_kk": lambda_kk,
    "Lambda_h": lambda_h,
    "Lambda_0": lambda_0,
    "Lambda0_1n": lambda0_1n,
    "Lambda2_2h": lambda2_2h,
    "Lambda2_h": lambda2_h,
    "Lambda2_0": lambda2_0,
    "Gamma0_c": gamma0_c,
    "Gammak_c": gammak_c,
    "Gammak1_c": gammak1_c,
    "D_kn": d_kn,
    "Psi_nk": psi_nk,
}


def c_coefficients(selector: str, *params) -> LaurentPoly2:
    try:
        fn = _C_SELECTORS[selector]
    except KeyError:
        raise OutOfRange(f"unknown type-C selector {selector!r}") from None
    return fn(*params)


def as_fraction(p: LaurentPoly2) -> RationalFn:
    return RationalFn(p)
