"""
Batches of exact checks, shared by the command line driver and the test suite.

Every generator yields ``Check`` records; nothing here raises on a mismatch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from ..closedforms import (
    at_q2_q,
    b_zero_weight_bipartition,
    c_even_specialized,
    c_zero_weight_bipartitions,
    cb_closed,
    cc2_closed,
    pw_b_specialized,
    pw_bipartition,
    t_ratio,
    trivial_series,
)
from ..laurent import ONE, ZERO, RationalFn
from ..qcomb import binom
from ..rootsys import (
    build_root_system,
    c_even_weight,
    c_odd_weight,
    conj_zero_count_b,
    conj_zero_sign_b,
    eps,
    pair_orbit_qm,
    reduce_weight,
    weyl_orbit,
)
from . import coeffs as cf
from .reduction import (
    IdentityFailure,
    a_mult,
    b_mult,
    c_next_ratio,
    final_identity,
    reduced_identities,
)
from .rows import big_f, b_rows, c_chain_weights, c_rows, solve_chain


@dataclass
class Check:
    name: str
    family: str
    rank: int
    weight: object = None
    ok: bool = True
    lhs: object = None
    rhs: object = None


def _eq(name, family, n, weight, lhs, rhs) -> Check:
    return Check(name, family, n, weight, lhs == rhs, lhs, rhs)


def _truth(name, family, n, weight, ok) -> Check:
    return Check(name, family, n, weight, bool(ok))


# --- chains -------------------------------------------------------------------------


def b_solved(n: int):
    return solve_chain([r.specialize() for r in b_rows(n)], trivial_series(n))


def c_solved(n: int, specialized: bool = True):
    rows = c_rows(n, True)
    if specialized:
        return solve_chain([r.specialize() for r in rows], trivial_series(n))
    return solve_chain(list(rows), RationalFn(ONE))


def b_chain_checks(n: int, table=None):
    """Solved specialized C_{eps_m} against the closed form."""
    table = table if table is not None else b_solved(n)
    for m in range(1, n + 1):
        yield _eq("chain", "B", n, eps(n, m), table[eps(n, m)], RationalFn(cb_closed(m, n)))


def b_closedform_checks(n: int):
    for m in range(1, n + 1):
        lam = eps(n, m)
        yield _eq("closed=P_W", "B", n, lam, cb_closed(m, n), pw_b_specialized(m, n))
        bp = b_zero_weight_bipartition(m, n)
        yield _eq("P_W=hook", "B", n, lam, pw_b_specialized(m, n), at_q2_q(pw_bipartition(bp, n)))


def c_chain_checks(n: int, table=None, ratio_table=None):
    """Solved specialized C_mu against the closed forms, then ratios of the unspecialized chain."""
    table = table if table is not None else c_solved(n)
    for kind, k, lam in c_chain_weights(n, True):
        want = c_even_specialized(k, n) if kind == "even" else cc2_closed(k, n)
        yield _eq("chain", "C", n, lam, table[lam], want)
    if n >= 2:
        ratio_table = ratio_table if ratio_table is not None else c_solved(n, specialized=False)

        def even(k):
            return ratio_table[(0,) * n] if k == 0 else ratio_table[c_even_weight(n, k)]

        for k in range(0, (n - 2) // 2 + 1):
            yield _eq("ratio", "C", n, c_even_weight(n, k + 1), even(k + 1), even(k) * c_next_ratio(k, n))


def c_closedform_checks(n: int):
    for k in range(1, n // 2 + 1):
        (bp,) = c_zero_weight_bipartitions("even", k, n)
        yield _eq("closed=P_W", "C", n, c_even_weight(n, k), c_even_specialized(k, n),
                  RationalFn(at_q2_q(pw_bipartition(bp, n))))
    for k in range(0, (n - 1) // 2 + 1):
        lam = c_odd_weight(n, k)
        pw = ZERO
        for bp in c_zero_weight_bipartitions("odd", k, n):
            pw = pw + at_q2_q(pw_bipartition(bp, n))
        yield _eq("closed=P_W", "C", n, lam, cc2_closed(k, n), RationalFn(pw))
        yield _eq("hook-form", "C", n, lam, cc2_closed(k, n, "hook"), cc2_closed(k, n))
        if 2 * k + 2 <= n:
            yield _eq("shifted-form", "C", n, lam, cc2_closed(k, n, "shifted"), cc2_closed(k, n))


# --- oracles -------------------------------------------------------------------------


def oracle_checks(family: str, n: int, force: bool = False, rows: bool = True):
    """reeder_check for 0 and every small weight, then the rows evaluated on oracle values."""
    from ..oracles import cached_character, multiplicity_series, reeder_check
    from ..rootsys import small_weights

    rs = build_root_system(family, n)
    for lam in [(0,) * n] + small_weights(rs):
        r = reeder_check(lam, rs, force=force, strict=False)
        yield Check("reeder", family, n, lam, r.ok, r.lhs, r.rhs if r.lhs != r.rhs else r.closed)
    yield _eq("base", family, n, (0,) * n,
              multiplicity_series(cached_character(rs, force), (0,) * n, rs), trivial_series(n))
    if rows:
        gc = cached_character(rs, force)
        chain = b_rows(n) if family == "B" else c_rows(n, True)
        for row in chain:
            vals = {mu: RationalFn(multiplicity_series(gc, mu, rs)) for mu in row.coeffs}
            yield _eq("row-on-oracle", family, n, row.lam, row.specialize().evaluate(vals), RationalFn(ZERO))


# --- coefficient identities -------------------------------------------------------------


def _reduced(family, k, n) -> Check:
    try:
        reduced_identities(family, k, n)
        return Check(f"reduced:{family}", family[0], n, k, True)
    except IdentityFailure as exc:
        return Check(f"reduced:{family}", family[0], n, (k, exc.key), False, exc.lhs, exc.rhs)


def b_identity_checks(n_max: int, row_max: int = 6):
    for n in range(2, n_max + 1):
        if n <= row_max:
            for m in range(1, n + 1):
                yield _reduced("B", m, n)
        # the closed forms satisfy the compact recurrence
        C = [RationalFn(cb_closed(m, n)) for m in range(n + 1)]
        for m in range(1, n + 1):
            rhs = RationalFn(ZERO)
            for i, coeff in cf.compact_row(m, n).items():
                if i != m:
                    rhs = rhs - C[i] * RationalFn(coeff)
            yield _eq("compact-closed", "B", n, m, C[m] * RationalFn(cf.c_m(m, n)), rhs)
        yield _eq("b-shift", "B", n, None, cf.psi6(n) + cf.b_m(n - 1), cf.b_m(n))
        for k in range(0, n + 2):
            psi = cf.psi6(n)
            yield _eq("gamma2-step", "B", n, k, cf.gamma_hkr(2, n, k),
                      psi * binom(n - k - 2, k - 1) + cf.gamma_hkr(2, n - 2, k - 1) + cf.gamma_hkr(2, n - 1, k))
            yield _eq("gamma1-step", "B", n, k, cf.gamma_hkr(1, n, k),
                      psi * binom(n - k - 1, k - 1) + cf.gamma_hkr(1, n - 2, k - 1) + cf.gamma_hkr(1, n - 1, k))
        for m in range(1, n + 1):
            for h in range(m):
                if (m - h) % 2 == 0:
                    s = (m - h) // 2
                    v = cf.gamma_p(n, m, h)
                    yield _eq("gamma_p", "B", n, (m, h), v, cf.b_m(n - m + s + 1))
                    if m < n:
                        yield _eq("gamma_p-shift", "B", n, (m, h), v, cf.gamma_p(n + 1, m + 1, h + 1))
                else:
                    s = (m - h - 1) // 2
                    v = cf.gamma_d(n, m, h)
                    yield _eq("gamma_d", "B", n, (m, h), v, cf.b_m(s + 1))
                    if m < n:
                        yield _eq("gamma_d-shift", "B", n, (m, h), v, cf.gamma_d(n + 1, m + 1, h + 1))


def gamma_set(lam, rs, i: int, j: int, orbit=None) -> Counter:
    """Multiset of reduced (weight, sign) of w lam - 2i e_j over the pairs with w e_1 = e_j."""
    out: Counter = Counter()
    for mu, beta in (orbit if orbit is not None else pair_orbit_qm(lam, rs)):
        if not beta[j - 1]:
            continue
        nu = list(mu)
        nu[j - 1] -= 2 * i
        red = reduce_weight(nu, rs)
        if red.sign:
            out[(red.dominant, red.sign)] += 1
    return out


def _flip(c: Counter) -> Counter:
    return Counter({(mu, -s): v for (mu, s), v in c.items()})


def f_symmetry_checks(n_max: int, orbit_max: int = 6):
    """
    Power 1: F_i^j = -F_{A(i,j)}^j with A(i,j) = n-i-j+2.  Both powers: the
    orbit contributions for i and for A(i,j) (power 1) or B(i,j) = n-i-j+3
    (power 2) are matched with opposite signs.
    """
    for n in range(2, n_max + 1):
        ok = True
        for j in range(1, n + 1):
            r = n - j + 1
            for i in range(r + 2):
                ok &= big_f(i, r, 1) == -big_f(n - i - j + 2, r, 1)
        yield _truth("F-antisymmetry", "C", n, None, ok)
        if n > orbit_max:
            continue
        rs = build_root_system("C", n)
        for name, off, lams in (("A-bijection", 2, [c_even_weight(n, k) for k in range(1, n // 2 + 1)]),
                                ("B-bijection", 3, [c_odd_weight(n, k) for k in range((n - 1) // 2 + 1)])):
            for lam in lams:
                orbit = pair_orbit_qm(lam, rs)
                ok = True
                for j in range(1, n + 1):
                    for i in range(n - j + 3):
                        a = n - i - j + off
                        if a >= 0:
                            ok &= gamma_set(lam, rs, i, j, orbit) == _flip(gamma_set(lam, rs, a, j, orbit))
                yield _truth(name, "C", n, lam, ok)


def multiplier_checks(n_max: int):
    """A/B family recursions and vanishing sums, exhaustively up to n_max."""
    def sg(e):
        return -1 if e % 2 else 1

    for n in range(0, n_max + 1):
        ok_a = ok_id = ok_tri = ok_b = True
        for k in range(0, n + 1):
            for h in range(0, k + 1):
                if k >= 1 and h >= 1 and 2 * k <= n - 1:
                    ok_a &= a_mult(h, k, n) == a_mult(h, k, n - 1) + a_mult(h, k - 1, n - 1)
                if 2 * k + 1 <= n:
                    if h < k:
                        ok_id &= sum(sg(i - h) * binom(n - i - h - 1, i - h) * b_mult(i, k, n)
                                     for i in range(h, k + 1)) == 0
                    if h < k - 1:
                        ok_tri &= sum(sg(i - h) * binom(n - i - h - 2, i - h) * b_mult(i, k, n)
                                      for i in range(h, k + 1)) == 0
                if 2 * k + 3 <= n:
                    ok_b &= b_mult(h, k + 1, n + 1) == b_mult(h, k + 1, n) + b_mult(h, k, n)
        yield _truth("A-recursion", "C", n, None, ok_a)
        yield _truth("B-vanishing", "C", n, None, ok_id)
        yield _truth("B-vanishing-shifted", "C", n, None, ok_tri)
        yield _truth("B-recursion", "C", n, None, ok_b)
        if n >= 2 and n % 2 == 0:
            k = n // 2
            yield _truth("B-top", "C", n, k, all(b_mult(j, k, n) == 0 for j in range(k)))


def c_identity_checks(n_max: int, row_max: int = 6, coeff_max: int = 8):
    for n in range(2, min(n_max, row_max) + 1):
        for k in range(1, n // 2 + 1):
            yield _reduced("C-even", k, n)
        for k in range(0, (n - 1) // 2 + 1):
            yield _reduced("C-odd", k, n)
    for n in range(2, min(n_max, coeff_max) + 1):
        yield _eq("Lambda0-closed", "C", n, None, cf.lambda0_1n(n), cf.lambda0_1n_sum(n))
        yield _eq("Lambda0-recursive", "C", n, None, cf.lambda0_1n(n), cf.lambda_0(1, n))
        for k in range(1, n // 2 + 1):
            yield _eq("Lambda_kk", "C", n, k, cf.lambda_kk(k, n), cf.lambda_kk_sum(k, n))
        for k in range(1, (n - 1) // 2 + 1):
            if n < 3:
                continue
            yield _eq("Psi-closed", "C", n, k, cf.psi_nk(n, k), cf.psi_nk_closed(n, k))
            yield _eq("Psi-step", "C", n, k, cf.psi_nk(n, k), cf.psi_nk(n - 1, k - 1) + cf.psi_ij(k + 1, 1, n))
            yield _eq("Gamma0-sum", "C", n, k, cf.gamma0_c(k, n),
                      sum((cf.psi_nk(j, k) for j in range(2 * k + 1, n + 1)), ZERO))
            if k >= 2:
                yield _eq("Gamma0-shift", "C", n, k, cf.gamma0_c(k, n), cf.gamma0_c(k - 1, n - 2))
        for k in range(0, (n - 1) // 2 + 1):
            yield _eq("D-difference", "C", n, k, cf.d_kn(k, n), cf.gammak_c(k, n) - cf.gamma0_c(k, n))
        for k in range(0, n // 2):
            yield _eq("ratio-specialized", "C", n, k, c_next_ratio(k, n).specialize(), t_ratio(k, n))
    yield from f_symmetry_checks(min(n_max, coeff_max), min(row_max, coeff_max))
    yield from multiplier_checks(n_max)
    yield from final_checks(n_max)


def final_checks(n_max: int):
    for n in range(1, n_max + 1):
        for k in range(0, (n - 1) // 2 + 1):
            yield _truth("final", "C", n, k, final_identity(k, n))


# --- counting checks -------------------------------------------------------------------


def counting_checks(n_max: int):
    """Orbit points conjugate to the zero weight: counts and signs against the formulas."""
    for n in range(2, n_max + 1):
        rs = build_root_system("B", n)
        for k in range(1, n + 1):
            signs = [r.sign for r in (reduce_weight(mu, rs) for mu in weyl_orbit(eps(n, k), rs))
                     if r.sign and not any(r.dominant)]
            yield _eq("B-count", "B", n, k, len(signs), conj_zero_count_b(n, k))
            yield _eq("B-sign", "B", n, k, set(signs), {conj_zero_sign_b(k)})
        rs = build_root_system("C", n)
        for k in range(1, n // 2 + 1):
            signs = [r.sign for r in (reduce_weight(mu, rs) for mu in weyl_orbit(c_even_weight(n, k), rs))
                     if r.sign and not any(r.dominant)]
            yield _eq("C-count", "C", n, k, len(signs), comb(n - k, k))
            yield _eq("C-sign", "C", n, k, set(signs), {-1 if k % 2 else 1})
