import pytest

from reeder.closedforms import t_ratio
from reeder.laurent import ONE, ZERO
from reeder.qcomb import binom
from reeder.rootsys import c_even_weight, c_odd_weight
from reeder.stembridge import coeffs as cf
from reeder.stembridge.reduction import (
    IdentityFailure,
    RecurrenceRow,
    b_mult,
    c_next_ratio,
    combine_rows,
    even_row,
    final_identity,
    odd_row,
    reduced_identities,
    reduction_multipliers,
)


def _sg(e):
    return -1 if e % 2 else 1


def test_top_multipliers_are_one():
    for n in range(2, 10):
        for k in range(1, n // 2 + 1):
            assert reduction_multipliers("A", k, n)[k] == 1
            assert reduction_multipliers("A", k, n)[0] == 0
        for k in range((n - 1) // 2 + 1):
            assert reduction_multipliers("B", k, n)[k] == 1


def test_multiplier_domains():
    with pytest.raises(cf.OutOfRange):
        reduction_multipliers("A", 3, 5)
    with pytest.raises(cf.OutOfRange):
        reduction_multipliers("B", 2, 4)
    with pytest.raises(cf.OutOfRange):
        reduction_multipliers("Z", 1, 4)


def test_a_recursion():
    for n in range(3, 13):
        for k in range(1, (n - 1) // 2 + 1):
            for h in range(1, k + 1):
                a = reduction_multipliers("A", k, n)[h]
                assert a == reduction_multipliers("A", k, n - 1)[h] + reduction_multipliers("A", k - 1, n - 1)[h]


def test_b_tridiagonal_vanishing():
    for n in range(1, 13):
        for k in range((n - 1) // 2 + 1):
            b = reduction_multipliers("B", k, n)
            for h in range(k - 1):
                assert sum(_sg(i - h) * binom(n - i - h - 2, i - h) * b[i] for i in range(h, k + 1)) == 0


def test_b_top_vanishes():
    for k in range(1, 6):
        assert all(b_mult(j, k, 2 * k) == 0 for j in range(k))


def test_combine_rows():
    a = RecurrenceRow((1, 0), {(1, 0): ONE, (0, 0): ONE})
    b = RecurrenceRow((1, 1), {(1, 1): ONE, (0, 0): -ONE * 2})
    got = combine_rows([a, b], [2, 1])
    assert got.lam == (1, 1)
    assert got.coeffs == {(1, 0): ONE * 2, (1, 1): ONE}
    with pytest.raises(ValueError):
        combine_rows([a], [1, 2])


def test_b_reduced_example():
    assert reduced_identities("B", 3, 4).ok


@pytest.mark.parametrize("n", range(2, 7))
def test_reduced_identities_all(n):
    for m in range(1, n + 1):
        assert reduced_identities("B", m, n).ok
    for k in range(1, n // 2 + 1):
        assert reduced_identities("C-even", k, n).ok
    for k in range((n - 1) // 2 + 1):
        assert reduced_identities("C-odd", k, n).ok


def test_c_even_tail_coefficient():
    k, n = 2, 5
    rows = [even_row(i, n) for i in range(1, k + 1)]
    got = combine_rows(rows, reduction_multipliers("A", k, n).values[1:])
    assert got.coeffs[c_even_weight(n, 1)] == cf.lambda0_1n(n - 2 * k + 2)


def test_c_odd_lower_coefficient_vanishes():
    k, n = 1, 4
    rows = [odd_row(i, n) for i in range(k + 1)]
    got = combine_rows(rows, reduction_multipliers("B", k, n).values)
    assert got.coeffs.get(c_odd_weight(n, 0), ZERO) == ZERO


def test_identity_failure_carries_key():
    err = IdentityFailure("demo", (1, 0), ONE, ZERO)
    assert err.key == (1, 0) and "demo" in str(err)


def test_reduced_domains():
    with pytest.raises(cf.OutOfRange):
        reduced_identities("C-even", 3, 5)
    with pytest.raises(cf.OutOfRange):
        reduced_identities("X", 1, 3)


def test_next_ratio_specializes_to_t_ratio():
    for n in range(4, 9):
        for k in range(1, n // 2):
            assert c_next_ratio(k, n).specialize() == t_ratio(k, n)


def test_final_identity_k0():
    assert final_identity(0, 3)


@pytest.mark.parametrize("n", range(3, 13))
def test_final_identity(n):
    for k in range(1, (n - 1) // 2 + 1):
        assert final_identity(k, n)


def test_other_denominator_reading_fails():
    # the n - 2 index only coincides with n - 2k at k = 1
    assert final_identity(1, 5, "n-2")
    assert not final_identity(2, 6, "n-2")
