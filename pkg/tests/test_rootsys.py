from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reeder.rootsys import (
    IncomparableLattice,
    SignedPermutation,
    UnsupportedRank,
    all_elements,
    build_root_system,
    c_even_weight,
    conj_zero_count_b,
    conj_zero_sign_b,
    dominance_leq,
    dominance_leq_bruteforce,
    eps,
    is_dominant,
    is_small,
    orbit_with_reps,
    pair_orbit_qm,
    reduce_weight,
    small_weights,
    stabilizer_orbit,
    unit,
    weight_to_json,
    weyl_orbit,
)


def test_build():
    b2 = build_root_system("B", 2)
    assert set(b2.positive_roots) == {(1, -1), (1, 1), (1, 0), (0, 1)}
    c3 = build_root_system("C", 3)
    assert len(c3.positive_roots) == 9
    assert c3.rho == (3, 2, 1)
    assert build_root_system("B", 3).rho == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert c3.theta == (2, 0, 0) and c3.theta_check == (1, 0, 0)
    with pytest.raises(UnsupportedRank):
        build_root_system("B", 1)
    assert build_root_system("B", 1, allow_rank_one=True).dim == 3


@pytest.mark.parametrize("family", "BC")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_root_counts(family, n):
    rs = build_root_system(family, n)
    assert len(rs.positive_roots) == n * n
    assert rs.exponents == tuple(2 * i - 1 for i in range(1, n + 1))
    assert rs.degrees == tuple(2 * i for i in range(1, n + 1))


def test_reduce_examples():
    c2 = build_root_system("C", 2)
    r = reduce_weight((-1, 1), c2)
    assert (r.sign, r.dominant) == (-1, (0, 0))
    assert reduce_weight((-2, 0), c2).sign == 0
    r = reduce_weight((0, -1), build_root_system("B", 2))
    assert (r.sign, r.dominant) == (-1, (0, 0))


def test_signed_permutation_examples():
    swap = SignedPermutation((1, 0))
    flip = SignedPermutation((0, 1), frozenset({0}))
    assert swap.apply((1, 0)) == (0, 1)
    assert flip.apply((1, 0)) == (-1, 0) and flip.sign() == -1
    both = swap.compose(SignedPermutation((0, 1), frozenset({0, 1})))
    assert both.sign() == -1


def test_group_law():
    elems = list(all_elements(3))
    assert len(elems) == 48
    mu = (3, -1, 2)
    for w in elems[::5]:
        for v in elems[::7]:
            assert w.compose(v).apply(mu) == w.apply(v.apply(mu))
            assert w.compose(v).sign() == w.sign() * v.sign()
        assert w.inverse().apply(w.apply(mu)) == mu


def test_orbits():
    b2 = build_root_system("B", 2)
    assert weyl_orbit((1, 0), b2) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(weyl_orbit((1, 1, 0), build_root_system("C", 3))) == 12
    for family, n in [("B", 3), ("C", 3)]:
        rs = build_root_system(family, n)
        for lam in small_weights(rs):
            stab = sum(1 for w in all_elements(n) if w.apply(lam) == lam)
            assert len(weyl_orbit(lam, rs)) * stab == rs.order
            for mu, w in orbit_with_reps(lam, rs).items():
                assert w.apply(lam) == mu


def test_stabilizer_orbits():
    b4 = build_root_system("B", 4)
    assert stabilizer_orbit((1, 1, 0, 0), unit(4, 1), b4) == {unit(4, 1), unit(4, 2)}
    assert stabilizer_orbit((0, 0, 0, 0), unit(4, 1), b4) == {unit(4, j, s) for j in range(1, 5) for s in (1, -1)}
    b3 = build_root_system("B", 3)
    assert stabilizer_orbit((1, 1, 1), unit(3, 1), b3) == {unit(3, 1), unit(3, 2), unit(3, 3)}


def test_pair_orbit():
    c2 = build_root_system("C", 2)
    pairs = pair_orbit_qm((1, 1), c2)
    # w theta = 2e_1 forces w e_1 = e_1, so the first coordinate stays 1
    assert len(pairs) == 4
    assert {mu for mu, beta in pairs if beta == (2, 0)} == {(1, 1), (1, -1)}
    assert {mu for mu, beta in pairs if beta == (0, 2)} == {(1, 1), (-1, 1)}
    assert pair_orbit_qm((0, 0, 0), build_root_system("C", 3)) == {((0, 0, 0), unit(3, j, 2)) for j in (1, 2, 3)}
    for lam in small_weights(build_root_system("C", 4)):
        assert all(sum(beta) == 2 and max(beta) == 2 for _, beta in pair_orbit_qm(lam, build_root_system("C", 4)))


def test_dominance_examples():
    c5 = build_root_system("C", 5)
    assert dominance_leq(c_even_weight(5, 1), c_even_weight(5, 2), c5)
    assert dominance_leq((1, 1, 0), (1, 1, 0), build_root_system("C", 3))
    assert dominance_leq((0, 0, 0), (1, 0, 0), build_root_system("B", 3))
    with pytest.raises(IncomparableLattice):
        dominance_leq((0, 0), (1, 0), build_root_system("C", 2))


@pytest.mark.parametrize("family", "BC")
@pytest.mark.parametrize("n", [2, 3])
def test_dominance_matches_bruteforce(family, n):
    rs = build_root_system(family, n)
    box = [w for w in product(range(3), repeat=n) if is_dominant(w)]
    for mu, lam in product(box, box):
        try:
            fast = dominance_leq(mu, lam, rs)
        except IncomparableLattice:
            continue
        assert fast == dominance_leq_bruteforce(mu, lam, rs)


def test_small_weights():
    assert small_weights(build_root_system("B", 3)) == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    assert set(small_weights(build_root_system("C", 3))) == {(2, 0, 0), (1, 1, 0), (2, 1, 1)}
    c3 = build_root_system("C", 3)
    assert not is_small((4, 0, 0), c3)


@pytest.mark.parametrize("family", "BC")
@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_weights_are_exactly_the_small_ones(family, n):
    rs = build_root_system(family, n)
    smalls = set(small_weights(rs))
    for w in product(range(4), repeat=n):
        if not is_dominant(w) or not any(w):
            continue
        assert is_small(w, rs) == (w in smalls), w


def test_counting_formulas_by_enumeration():
    for n in range(2, 6):
        rs = build_root_system("B", n)
        for k in range(1, n + 1):
            reds = [reduce_weight(mu, rs) for mu in weyl_orbit(eps(n, k), rs)]
            signs = [r.sign for r in reds if r.sign and not any(r.dominant)]
            assert len(signs) == conj_zero_count_b(n, k)
            assert set(signs) == {conj_zero_sign_b(k)}
        rs = build_root_system("C", n)
        for k in range(1, n // 2 + 1):
            reds = [reduce_weight(mu, rs) for mu in weyl_orbit(c_even_weight(n, k), rs)]
            signs = [r.sign for r in reds if r.sign and not any(r.dominant)]
            assert len(signs) == comb(n - k, k) and set(signs) == {(-1) ** k}


def test_weight_json():
    assert weight_to_json((1, 0)) == [1, 0]
    assert weight_to_json((3, 1), half=True) == {"half": True, "coords": [3, 1]}


group3 = list(all_elements(3))


@given(st.sampled_from("BC"), st.sampled_from(group3), st.tuples(*[st.integers(-4, 4)] * 3))
def test_reduce_is_equivariant(family, w, mu):
    rs = build_root_system(family, 3)
    r = reduce_weight(mu, rs)
    v2 = tuple(2 * m + p for m, p in zip(mu, rs.rho2))
    moved2 = tuple(a - p for a, p in zip(w.apply(v2), rs.rho2))
    if any(m % 2 for m in moved2):
        return
    r2 = reduce_weight(tuple(m // 2 for m in moved2), rs)
    assert r2.sign == r.sign * w.sign()
    if r.sign:
        assert r2.dominant == r.dominant
