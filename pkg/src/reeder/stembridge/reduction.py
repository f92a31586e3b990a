"""
Integer multipliers that reduce the triangular systems, the reduced identities
they produce, and the final univariate check for omega_1 + omega_{2k+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..laurent import ONE, ZERO, LaurentPoly2, RationalFn
from ..qcomb import binom
from ..rootsys import build_root_system, c_even_weight, c_odd_weight, eps
from . import coeffs as cf
from .rows import RecurrenceRow, minuscule_row, qm_row


class IdentityFailure(AssertionError):
    """Carries the first coefficient where two sides disagree."""

    def __init__(self, what: str, key=None, lhs=None, rhs=None):
        self.what, self.key, self.lhs, self.rhs = what, key, lhs, rhs
        super().__init__(f"{what}: mismatch at {key}: {lhs} != {rhs}")


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


# --- multipliers --------------------------------------------------------------------


@lru_cache(maxsize=None)
def a_mult(h: int, k: int, n: int) -> int:
    if h > k or h <= 0:
        return 0
    if h == k:
        return 1
    if h > 1:
        return a_mult(h - 1, k - 1, n - 2)
    return sum(_sgn(i) * binom(n - i - 1, i - 1) * a_mult(i - 1, k - 1, n - 2) for i in range(2, k + 1))


@lru_cache(maxsize=None)
def b_mult(h: int, k: int, n: int) -> int:
    if h > k or h < 0:
        return 0
    if h == k:
        return 1
    if h > 0:
        return b_mult(h - 1, k - 1, n - 2)
    # sign chosen so that sum_i (-1)^i binom(n-i-1, i) B_i = 0
    return -sum(_sgn(i) * binom(n - i - 1, i) * b_mult(i, k, n) for i in range(1, k + 1))


@dataclass(frozen=True)
class ReductionMultipliers:
    kind: str
    k: int
    n: int
    values: tuple

    def __getitem__(self, i):
        return self.values[i] if 0 <= i < len(self.values) else 0


def reduction_multipliers(kind: str, k: int, n: int) -> ReductionMultipliers:
    """values[i] for i = 0..k; A_0 is always 0."""
    if kind == "A":
        if k < 0 or n < 2 * k:
            raise cf.OutOfRange(f"A multipliers need 0 <= k, 2k <= n, got k={k}, n={n}")
        return ReductionMultipliers("A", k, n, tuple(a_mult(i, k, n) for i in range(k + 1)))
    if kind == "B":
        if k < 0 or n < 2 * k + 1:
            raise cf.OutOfRange(f"B multipliers need 0 <= k, 2k+1 <= n, got k={k}, n={n}")
        return ReductionMultipliers("B", k, n, tuple(b_mult(i, k, n) for i in range(k + 1)))
    raise cf.OutOfRange(f"unknown multiplier kind {kind!r}")


def combine_rows(rows, mult, lam=None) -> RecurrenceRow:
    """sum_i mult[i] * rows[i], collected; the result is labelled by lam (default: last row)."""
    mult = list(mult)
    if len(mult) != len(rows):
        raise ValueError(f"{len(rows)} rows but {len(mult)} multipliers")
    out: dict = {}
    for row, m in zip(rows, mult):
        if not m:
            continue
        for mu, c in row.coeffs.items():
            v = out.get(mu, ZERO) + c * m
            if v.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = v
    if lam is None:
        lam = rows[-1].lam
    return RecurrenceRow(tuple(lam), out)


# --- rows in the normalization used by the coefficient formulas ----------------------


def _zero(n: int) -> tuple:
    return (0,) * n


def _even_key(n: int, h: int) -> tuple:
    return _zero(n) if h == 0 else c_even_weight(n, h)


def even_row(k: int, n: int) -> RecurrenceRow:
    """Reduced omega_{2k} row, halved (the collected row carries every term twice)."""
    return qm_row(c_even_weight(n, k), build_root_system("C", n)).exact_div(2)


def odd_row(k: int, n: int) -> RecurrenceRow:
    return qm_row(c_odd_weight(n, k), build_root_system("C", n))


def _compare(what: str, got: dict, want: dict):
    keys = sorted(set(got) | set(want), reverse=True)
    for key in keys:
        a, b = got.get(key, ZERO), want.get(key, ZERO)
        if a != b:
            raise IdentityFailure(what, key, a, b)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


# --- reduced identities ------------------------------------------------------------------


@dataclass
class IdentityReport:
    family: str
    k: int
    n: int
    checks: list

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)


def _check_b(m: int, n: int) -> list:
    rs = build_root_system("B", n)
    row = minuscule_row(eps(n, m), rs).specialize()
    by_index = {sum(1 for x in mu if x): c for mu, c in row.coeffs.items()}
    _compare(f"B{n} eps_{m}: collected row vs rewritten form", by_index, _clean(cf.rewritten_row(m, n)))
    # the compact form agrees with the collected row modulo the rows of lower weights
    diff = {i: cf.compact_row(m, n).get(i, ZERO) - by_index.get(i, ZERO) for i in range(m + 1)}
    for h in range(m - 1, 0, -1):
        d = diff.get(h, ZERO)
        if d.is_zero():
            continue
        lower = minuscule_row(eps(n, h), rs).specialize()
        lead = lower.coeffs[eps(n, h)]
        try:
            factor = d.divmod_exact(lead)
        except ArithmeticError:
            raise IdentityFailure(f"B{n} eps_{m}: compact form not reducible by row {h}", h, d, lead)
        for mu, c in lower.coeffs.items():
            i = sum(1 for x in mu if x)
            diff[i] = diff.get(i, ZERO) - factor * c
    _compare(f"B{n} eps_{m}: compact form modulo lower rows", _clean(diff), {})
    return [("rewritten", True), ("compact", True)]


def _check_c_even(k: int, n: int) -> list:
    mult = reduction_multipliers("A", k, n)
    rows = [even_row(i, n) for i in range(1, k + 1)]
    got = combine_rows(rows, mult.values[1:]).coeffs
    want = {c_even_weight(n, k): cf.lambda_kk(k, n)}
    tail = cf.lambda0_1n(n - 2 * k + 2)
    for h in range(k):
        want[_even_key(n, h)] = tail
    _compare(f"C{n} omega_{2 * k}: A-combination", got, _clean(want))
    return [("even-combination", True)]


def _check_c_odd(k: int, n: int) -> list:
    mult = reduction_multipliers("B", k, n)
    rows = [odd_row(i, n) for i in range(k + 1)]
    got = combine_rows(rows, mult.values).coeffs
    want = {c_odd_weight(n, k): cf.lambda2_2h(k, k, n), _even_key(n, k): cf.gammak_c(k, n)}
    if n > 2 * k + 1:
        want[c_even_weight(n, k + 1)] = cf.gammak1_c(k, n)
    for h in range(k):
        want[_even_key(n, h)] = cf.gamma0_c(k, n)
    _compare(f"C{n} omega_1+omega_{2 * k + 1}: B-combination", got, _clean(want))
    return [("odd-edge" if n == 2 * k + 1 else "odd-generic", True)]


def reduced_identities(family: str, k: int, n: int) -> IdentityReport:
    """
    family "B": k is m in 1..n.  "C-even": 1 <= k, 2k <= n.  "C-odd": 0 <= k, 2k+1 <= n.
    Raises IdentityFailure on the first mismatching coefficient.
    """
    if family == "B":
        if not 1 <= k <= n:
            raise cf.OutOfRange(f"B needs 1 <= m <= n, got m={k}, n={n}")
        return IdentityReport(family, k, n, _check_b(k, n))
    if family == "C-even":
        if k < 1 or 2 * k > n:
            raise cf.OutOfRange(f"C-even needs 1 <= k, 2k <= n, got k={k}, n={n}")
        return IdentityReport(family, k, n, _check_c_even(k, n))
    if family == "C-odd":
        if k < 0 or 2 * k + 1 > n:
            raise cf.OutOfRange(f"C-odd needs 0 <= k, 2k+1 <= n, got k={k}, n={n}")
        return IdentityReport(family, k, n, _check_c_odd(k, n))
    raise cf.OutOfRange(f"unknown family {family!r}")


# --- ratio and final identity ----------------------------------------------------------


def _t(e: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(0, e)


def _q(e: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(e, 0)


def c_next_ratio(k: int, n: int) -> RationalFn:
    """C_{k+1,n}(q,t) / C_{k,n}(q,t)."""
    if k < 0 or 2 * k + 2 > n:
        raise cf.OutOfRange(f"need 0 <= k, 2k+2 <= n, got k={k}, n={n}")
    num = ((_t(2 * (n - 2 * k - 1)) - ONE) * (_t(2 * (n - k + 1)) - ONE)
           * (ONE - _q(1) * _t(2 * k - 1)) * _t(2))
    den = ((_t(2 * (n - 2 * k + 1)) - ONE) * (_t(2 * (k + 1)) - ONE)
           * (ONE - _q(1) * _t(2 * (n - k) - 1)))
    return RationalFn(num, den)


def final_value(k: int, n: int, reading: str = "n-2k") -> RationalFn:
    """
    Specialized C_{2|k,n} obtained from the reduced odd row.

    ``reading`` picks the index of the Lambda_0^{1,.} denominator in the generic
    branch: "n-2k" (the one that follows from the omega_{2k} identity) or "n-2".
    """
    from ..closedforms import c_even_specialized

    if k < 0 or 2 * k + 1 > n:
        raise cf.OutOfRange(f"need 0 <= k, 2k+1 <= n, got k={k}, n={n}")
    lead = RationalFn(cf.F(0, 1, n, 2)).specialize()
    if n == 2 * k + 1:
        inner = RationalFn(cf.gammak_c(k, n))
        if k > 0:
            inner = inner - RationalFn(cf.gamma0_c(k, n) * cf.lambda_kk(k, n)) / RationalFn(cf.lambda0_1n(3))
        return -(c_even_specialized(k, n) * inner.specialize()) / lead
    if reading == "n-2k":
        tail = cf.lambda0_1n(n - 2 * k)
    elif reading == "n-2":
        tail = cf.lambda0_1n(n - 2)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    inner = (RationalFn(cf.gammak1_c(k, n))
             - RationalFn(cf.gamma0_c(k, n) * cf.lambda_kk(k + 1, n)) / RationalFn(tail)
             + RationalFn(cf.d_kn(k, n)) / c_next_ratio(k, n))
    return -(c_even_specialized(k + 1, n) * inner.specialize()) / lead


def final_identity(k: int, n: int, reading: str = "n-2k") -> bool:
    from ..closedforms import cc2_closed

    try:
        return final_value(k, n, reading) == cc2_closed(k, n)
    except ZeroDivisionError:
        return False
