import random
from collections import defaultdict
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reeder import oracles
from reeder.closedforms import pw_bipartition, trivial_series, x, y
from reeder.laurent import ONE, LaurentPoly2
from reeder.oracles import (
    MismatchReport,
    ResourceLimit,
    bn_character,
    cached_character,
    lambda_g_character,
    molien_pw,
    multiplicity_series,
    reeder_check,
    sn_character,
    trivial_isotypic,
)
from reeder.qcomb import Bipartition, bipartitions, partitions
from reeder.rootsys import (
    all_elements,
    build_root_system,
    c_odd_weight,
    is_dominant,
    small_weights,
)

u = LaurentPoly2.monomial(1, 0)


def _f(shape):
    # number of standard tableaux, from the trivial character sum
    return sn_character(tuple(shape), (1,) * sum(shape)) if sum(shape) else 1


def test_rank_one_exterior():
    rs = build_root_system("B", 1, allow_rank_one=True)
    assert trivial_isotypic(rs) == ONE + u ** 3


def test_c2_total_dimension():
    gc = lambda_g_character(build_root_system("C", 2))
    assert gc.total() == 2 ** 10


def test_b2_zero_weight_palindromic():
    gc = cached_character(build_root_system("B", 2))
    c = gc.coefficients((0, 0))
    assert len(c) - 1 == 10 and c == c[::-1] and c[-1] != 0


def test_b2_series():
    rs = build_root_system("B", 2)
    gc = cached_character(rs)
    assert multiplicity_series(gc, (0, 0), rs) == (ONE + u ** 3) * (ONE + u ** 7)
    assert multiplicity_series(gc, (1, 0), rs).eval_at(1, 1) == 4


@pytest.mark.parametrize("family,n", [("B", 2), ("C", 2), ("B", 3), ("C", 3)])
def test_nonnegative_multiplicities(family, n):
    rs = build_root_system(family, n)
    gc = cached_character(rs)
    for lam in [(0,) * n] + small_weights(rs):
        assert all(c > 0 for _, c in multiplicity_series(gc, lam, rs).items())


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["B", "C"]), st.integers(0, 10 ** 6), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_w_invariance(family, seed, mu):
    rs = build_root_system(family, 3)
    gc = cached_character(rs)
    w = random.Random(seed).choice(list(all_elements(3)))
    assert gc.coefficients(w.apply(tuple(mu))) == gc.coefficients(tuple(mu))


@pytest.mark.parametrize("family", ["B", "C"])
def test_rank_two_reconstruction(family):
    # Weyl numerator identity: sum_w sgn(w) e^{w rho} * ch = sum_lam m_lam sum_w sgn(w) e^{w(lam+rho)}
    rs = build_root_system(family, 2)
    gc = cached_character(rs)
    group = list(all_elements(2))
    lhs = defaultdict(lambda: np.zeros(gc.degree + 1, dtype=np.int64))
    rhs = defaultdict(lambda: np.zeros(gc.degree + 1, dtype=np.int64))
    for mu in gc.terms:
        c = np.array(gc.coefficients(mu), dtype=np.int64)
        for w in group:
            key = tuple(2 * m + r for m, r in zip(mu, w.apply(rs.rho2)))
            lhs[key] += w.sign() * c
        if is_dominant(mu):
            mult = np.zeros(gc.degree + 1, dtype=np.int64)
            for d, v in multiplicity_series(gc, mu, rs).items():
                mult[d[0] // 2] = v
            for w in group:
                rhs[w.apply(tuple(2 * m + r for m, r in zip(mu, rs.rho2)))] += w.sign() * mult
    keys = set(lhs) | set(rhs)
    zero = np.zeros(gc.degree + 1, dtype=np.int64)
    assert all((lhs.get(k, zero) == rhs.get(k, zero)).all() for k in keys)


def test_resource_guard():
    with pytest.raises(ResourceLimit):
        lambda_g_character(build_root_system("B", 5))
    with pytest.raises(ResourceLimit):
        bn_character(Bipartition.of((5,), ()))


def test_sn_characters():
    assert sn_character((2, 1), (1, 1, 1)) == 2
    assert sn_character((2, 1), (3,)) == -1
    assert sn_character((1, 1, 1), (2, 1)) == -1
    for n in range(1, 6):
        assert sum(_f(p.parts) ** 2 for p in partitions(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_trivial_character(n):
    chi = bn_character(Bipartition.of((n,), ()))
    assert set(chi.values.values()) == {1}


@pytest.mark.parametrize("n", range(1, 5))
def test_dimensions_and_class_constancy(n):
    for bp in bipartitions(n):
        chi = bn_character(bp)
        k = bp.alpha.size
        assert chi.degree() == comb(n, k) * _f(bp.alpha.parts) * _f(bp.beta.parts)
        by_class = {}
        for w, v in chi.values.items():
            assert isinstance(v, int)
            assert by_class.setdefault(w.signed_cycle_type(), v) == v


def test_orthonormal_n3():
    chars = [bn_character(bp) for bp in bipartitions(3)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert a.inner(b) == (1 if i == j else 0)


def test_molien_rank_one():
    assert molien_pw(bn_character(Bipartition.of((1,), ())), 1).to_poly() == ONE + y() * x()


@pytest.mark.parametrize("n", range(1, 5))
def test_molien_trivial_product(n):
    want = ONE
    for j in range(1, n + 1):
        want = want * (ONE + y() * x(2 * j - 1))
    assert molien_pw(bn_character(Bipartition.of((n,), ())), n).to_poly() == want


@pytest.mark.parametrize("n", range(1, 5))
def test_molien_two_row_bipartitions(n):
    for k in range(n + 1):
        bp = Bipartition.of((n - k,), (k,))
        s = molien_pw(bn_character(bp), n)
        assert (s.coeffs >= 0).all() and s.coeffs.shape[1] <= n + 1
        assert s.to_poly() == pw_bipartition(bp, n)


def test_reeder_examples():
    assert reeder_check((1, 0), build_root_system("B", 2)).ok
    assert reeder_check((1, 1), build_root_system("C", 2)).ok
    rep = reeder_check(c_odd_weight(3, 1), build_root_system("C", 3))
    assert rep.ok
    assert {(bp.alpha.parts, bp.beta.parts) for bp in rep.bipartitions} == {((1, 1), (1,)), ((1, 1, 1), ())}


def test_trivial_series_matches_oracle():
    for n in (2, 3):
        assert trivial_isotypic(build_root_system("C", n)) == trivial_series(n)


def test_mismatch_is_reported(monkeypatch):
    monkeypatch.setattr(oracles, "pw_bipartition", lambda bp, n=None: ONE)
    rs = build_root_system("B", 2)
    with pytest.raises(MismatchReport) as exc:
        reeder_check((1, 0), rs)
    assert exc.value.report.closed == ONE
    assert not reeder_check((1, 0), rs, strict=False).ok
