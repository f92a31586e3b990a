"""
Reduced minuscule (type B) and quasi-minuscule (type C) recurrence rows, and
the triangular solver producing tables of C_mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..laurent import ONE, ZERO, LaurentPoly2, RationalFn
from ..rootsys import (
    NotQuasiMinusculePath,
    RootSystem,
    build_root_system,
    dominance_leq,
    is_dominant,
    orbit_with_reps,
    pair_orbit_qm,
    reduce_weight,
    stabilizer_orbit,
    unit,
)


class NotMinusculePath(ValueError):
    pass


class SingularLeadingCoefficient(ArithmeticError):
    pass


class MissingDependency(KeyError):
    pass


@dataclass
class RecurrenceRow:
    """sum_mu coeffs[mu] * C_mu = 0, with every key dominated by lam."""
    lam: tuple
    coeffs: dict = field(default_factory=dict)

    def leading(self) -> LaurentPoly2:
        return self.coeffs.get(self.lam, ZERO)

    def specialize(self) -> "RecurrenceRow":
        return RecurrenceRow(self.lam, {mu: c.specialize() for mu, c in self.coeffs.items()})

    def scale(self, factor) -> "RecurrenceRow":
        return RecurrenceRow(self.lam, {mu: c * factor for mu, c in self.coeffs.items()})

    def exact_div(self, d: int) -> "RecurrenceRow":
        return RecurrenceRow(self.lam, {mu: c.scale_exact(d) for mu, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, RecurrenceRow):
            return NotImplemented
        return self.lam == other.lam and _clean(self.coeffs) == _clean(other.coeffs)

    def evaluate(self, values: dict):
        """sum coeffs[mu] * values[mu]; values may be polynomials or rational functions."""
        total = RationalFn(ZERO)
        for mu, c in self.coeffs.items():
            if mu not in values:
                raise MissingDependency(mu)
            total = total + RationalFn(c) * values[mu]
        return total

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "coeffs": [[list(mu), c.to_json()] for mu, c in sorted(self.coeffs.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, obj) -> "RecurrenceRow":
        return cls(tuple(obj["lambda"]),
                   {tuple(mu): LaurentPoly2.from_json(c) for mu, c in obj["coeffs"]})


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


def _accumulate(coeffs: dict, mu, term: LaurentPoly2):
    v = coeffs.get(mu, ZERO) + term
    if v.is_zero():
        coeffs.pop(mu, None)
    else:
        coeffs[mu] = v


def _check_triangular(row: RecurrenceRow, rs: RootSystem):
    for mu in row.coeffs:
        if not dominance_leq(mu, row.lam, rs):
            raise AssertionError(f"row for {row.lam} has key {mu} not below it")
    if row.leading().is_zero():
        raise SingularLeadingCoefficient(f"leading coefficient of row {row.lam} vanishes")


# --- the f_i of the quasi-minuscule recurrence ----------------------------------


@lru_cache(maxsize=None)
def f_row(r: int) -> tuple:
    """
    f_0, ..., f_{r+1} defined by
    (1 - t z)(1 - q t z) * sum_{j<r} (t^2 z)^j = sum_i t^r f_i z^i.
    """
    if r < 1:
        raise ValueError(f"r = (rho, beta^vee) must be positive, got {r}")
    out = []
    for i in range(r + 2):
        f = ZERO
        if i <= r - 1:
            f = f + LaurentPoly2.monomial(0, 2 * i - r)
        if 1 <= i <= r:
            f = f - (ONE + LaurentPoly2.monomial(1, 0)) * LaurentPoly2.monomial(0, 2 * i - 1 - r)
        if 2 <= i <= r + 1:
            f = f + LaurentPoly2.monomial(1, 2 * i - 2 - r)
        out.append(f)
    return tuple(out)


@lru_cache(maxsize=None)
def big_f(i: int, r: int, power: int) -> LaurentPoly2:
    """F_i := f_i(q,t) - q^power f_i(q^-1, t^-1) for (rho, beta^vee) = r; zero outside 0..r+1."""
    if i < 0 or i > r + 1:
        return ZERO
    f = f_row(r)[i]
    return f - f.bar() * LaurentPoly2.monomial(power, 0)


# --- rows -------------------------------------------------------------------------


def minuscule_row(lam, rs: RootSystem, reps: dict | None = None) -> RecurrenceRow:
    """
    Collected minuscule recurrence for coweight e_1 (type B), unspecialized.

    Each coset representative w contributes
    sum_{psi in W_lam e_1} t^{-(rho, w psi)} - q^{(lam, e_1)} t^{(rho, w psi)}
    to the reduced form of C_{w lam}.  Any representative of the coset gives
    the same inner sum, because psi already runs over a full W_lam-orbit.
    """
    if rs.family != "B":
        raise NotMinusculePath("the minuscule recurrence is used for type B only")
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if reps is None:
        reps = orbit_with_reps(lam, rs)
    psis = sorted(stabilizer_orbit(lam, unit(rs.rank, 1), rs))
    qpow = lam[0]
    coeffs: dict = {}
    for mu, w in reps.items():
        red = reduce_weight(mu, rs)
        if red.sign == 0:
            continue
        term = ZERO
        for psi in psis:
            p2 = rs.pair_rho2(w.apply(psi))  # 2 (rho, w psi) = half-unit exponent
            term = term + LaurentPoly2.from_half(0, -p2) - LaurentPoly2.from_half(2 * qpow, p2)
        _accumulate(coeffs, red.dominant, term * red.sign)
    row = RecurrenceRow(lam, coeffs)
    _check_triangular(row, rs)
    return row


def qm_row(lam, rs: RootSystem, power: int | None = None) -> RecurrenceRow:
    """
    Collected quasi-minuscule recurrence for coweight theta^vee = e_1 (type C),
    unspecialized.  For every pair (mu, 2e_j) in the orbit of (lam, theta) and
    every i, F_i^j is added to the reduced form of C_{mu - 2 i e_j}.
    """
    if rs.family != "C":
        raise NotQuasiMinusculePath("the quasi-minuscule recurrence is used for type C only")
    lam = tuple(lam)
    if power is None:
        power = lam[0]
    coeffs: dict = {}
    for mu, beta in sorted(pair_orbit_qm(lam, rs)):
        j = next(idx for idx, x in enumerate(beta) if x)
        r = rs.rho2[j] // 2
        for i in range(r + 2):
            F = big_f(i, r, power)
            if F.is_zero():
                continue
            nu = list(mu)
            nu[j] -= 2 * i
            red = reduce_weight(nu, rs)
            if red.sign:
                _accumulate(coeffs, red.dominant, F * red.sign)
    row = RecurrenceRow(lam, coeffs)
    _check_triangular(row, rs)
    return row


# --- solving ----------------------------------------------------------------------


@dataclass
class CTable:
    entries: dict
    base: RationalFn

    def __getitem__(self, mu):
        return self.entries[tuple(mu)]

    def __contains__(self, mu):
        return tuple(mu) in self.entries

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "entries": [[list(mu), v.to_json()] for mu, v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, obj) -> "CTable":
        return cls({tuple(mu): RationalFn.from_json(v) for mu, v in obj["entries"]},
                   RationalFn.from_json(obj["base"]))


def solve_chain(rows: list, base, zero_weight: tuple | None = None) -> CTable:
    """
    Solve rows in order: C_lam = -(sum_{mu < lam} Gamma_mu C_mu) / Gamma_lam.

    ``base`` is C_0.  Every solved entry is substituted back into its row and
    checked to vanish by cross-multiplication.
    """
    base = base if isinstance(base, RationalFn) else RationalFn(base)
    entries: dict = {}
    if zero_weight is None and rows:
        zero_weight = tuple(0 for _ in rows[0].lam)
    if zero_weight is not None:
        entries[zero_weight] = base
    for row in rows:
        lead = row.leading()
        if lead.is_zero():
            raise SingularLeadingCoefficient(f"leading coefficient of row {row.lam} vanishes")
        if row.lam in entries:
            # a row for an already-fixed weight (e.g. the base) is only checked
            _verify(row, entries)
            continue
        rest = RationalFn(ZERO)
        for mu, c in row.coeffs.items():
            if mu == row.lam:
                continue
            if mu not in entries:
                raise MissingDependency(f"C_{mu} needed by row {row.lam} is not solved yet")
            rest = rest + RationalFn(c) * entries[mu]
        value = (-rest / RationalFn(lead)).try_polynomial()
        entries[row.lam] = value
        _verify(row, entries)
    return CTable(entries, base)


def _verify(row: RecurrenceRow, entries: dict):
    if not row.evaluate(entries).is_zero():
        raise ArithmeticError(f"row {row.lam} does not vanish on the solved table")


# --- chains -----------------------------------------------------------------------


def b_chain_weights(n: int) -> list:
    from ..rootsys import eps
    return [eps(n, m) for m in range(1, n + 1)]


def c_chain_weights(n: int, odd: bool = True) -> list:
    """Small type-C weights ordered compatibly with dominance (no zero weight)."""
    from ..rootsys import c_even_weight, c_odd_weight
    out = []
    for k in range(1, n // 2 + 1):
        out.append(("even", k, c_even_weight(n, k)))
    if odd:
        for k in range(0, (n - 1) // 2 + 1):
            out.append(("odd", k, c_odd_weight(n, k)))
    # omega_{2k} < omega_1 + omega_{2k-1}... order: by height then even before odd
    out.sort(key=lambda e: (sum(e[2]), e[0] == "odd"))
    return out


@lru_cache(maxsize=None)
def b_rows(n: int) -> tuple:
    rs = build_root_system("B", n)
    return tuple(minuscule_row(lam, rs) for lam in b_chain_weights(n))


@lru_cache(maxsize=None)
def c_rows(n: int, odd: bool = True) -> tuple:
    rs = build_root_system("C", n)
    return tuple(qm_row(lam, rs) for _, _, lam in c_chain_weights(n, odd))


def trivial_series(n: int) -> LaurentPoly2:
    """prod_{j=1}^n (1 + q^{4j-1}): the normalization fixed for specialized C_0."""
    out = ONE
    for j in range(1, n + 1):
        out = out * (ONE + LaurentPoly2.monomial(4 * j - 1, 0))
    return out
