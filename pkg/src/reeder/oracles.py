"""
Brute-force oracles for both sides of the graded multiplicity equality.

Left side: the weight decomposition of the exterior algebra of the Lie algebra,
with multiplicities of V_lambda extracted by an alternating sum over W.
Right side: Molien series of a hyperoctahedral character in the coinvariant
exterior algebra, averaged over the explicit group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

from .closedforms import at_q2_q, b_zero_weight_bipartition, c_zero_weight_bipartitions, pw_bipartition
from .laurent import ZERO, LaurentPoly2
from .qcomb import Bipartition
from .rootsys import RootSystem, SignedPermutation, all_elements, c_even_weight, c_odd_weight, eps, is_dominant

MAX_RANK = 4


class ResourceLimit(RuntimeError):
    pass


class NonIntegerMultiplicity(ArithmeticError):
    pass


class MismatchReport(AssertionError):
    def __init__(self, report: "ReederReport"):
        self.report = report
        super().__init__(f"{report.family}{report.rank} {report.weight}: {report.lhs} != {report.rhs}")


def _guard(n: int, force: bool):
    if n > MAX_RANK and not force:
        raise ResourceLimit(f"rank {n} exceeds the oracle limit {MAX_RANK}; pass force=True to override")


def u_poly(coeffs) -> LaurentPoly2:
    """Coefficient list in u as a polynomial in q (u := q)."""
    return LaurentPoly2({(2 * d, 0): int(c) for d, c in enumerate(coeffs) if c})


# --- exterior algebra of the Lie algebra ---------------------------------------------


@dataclass
class GradedCharacter:
    """Weight -> coefficients in u, stored densely over a box [-bound, bound]^n."""
    rank: int
    bound: int
    data: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return self.data.shape[-1] - 1

    def coefficients(self, mu) -> list:
        if any(abs(m) > self.bound for m in mu):
            return [0] * (self.degree + 1)
        return [int(c) for c in self.data[tuple(m + self.bound for m in mu)]]

    def poly(self, mu) -> LaurentPoly2:
        return u_poly(self.coefficients(mu))

    @property
    def terms(self) -> dict:
        """Weight -> polynomial in u (as q), nonzero entries only."""
        out = {}
        nz = np.argwhere(self.data.any(axis=-1))
        for idx in nz:
            mu = tuple(int(i) - self.bound for i in idx)
            out[mu] = self.poly(mu)
        return out

    def total(self) -> int:
        return int(self.data.sum())


def lambda_g_character(rs: RootSystem, force: bool = False) -> GradedCharacter:
    """prod over all roots of (1 + u e^alpha), times (1 + u)^n for the Cartan part."""
    n = rs.rank
    _guard(n, force)
    roots = rs.roots()
    bound = max(sum(max(a[i], 0) for a in roots) for i in range(n))
    N = rs.dim
    data = np.zeros((2 * bound + 1,) * n + (N + 1,), dtype=np.int64)
    data[(bound,) * n + (0,)] = 1
    used = 0
    for alpha in roots:
        used += 1
        src = tuple(slice(max(0, -a), 2 * bound + 1 - max(0, a)) for a in alpha)
        dst = tuple(slice(max(0, a), 2 * bound + 1 - max(0, -a)) for a in alpha)
        shifted = data[src + (slice(0, used),)].copy()
        data[dst + (slice(1, used + 1),)] += shifted
    for i in range(n):
        data[..., 1:] = data[..., 1:] + data[..., :-1]
    return GradedCharacter(n, bound, data)


@lru_cache(maxsize=None)
def _lambda_g_cached(family: str, n: int) -> GradedCharacter:
    from .rootsys import build_root_system
    return lambda_g_character(build_root_system(family, n, allow_rank_one=True), force=True)


def cached_character(rs: RootSystem, force: bool = False) -> GradedCharacter:
    _guard(rs.rank, force)
    return _lambda_g_cached(rs.family, rs.rank)


def multiplicity_series(gc: GradedCharacter, lam, rs: RootSystem) -> LaurentPoly2:
    """Graded multiplicity of V_lambda, as a polynomial in u written in the q slot."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    v = tuple(2 * l + r for l, r in zip(lam, rs.rho2))
    total = np.zeros(gc.degree + 1, dtype=np.int64)
    for w in all_elements(rs.rank):
        mu2 = [a - r for a, r in zip(w.apply(v), rs.rho2)]
        if any(m % 2 for m in mu2):
            continue
        mu = tuple(m // 2 for m in mu2)
        if any(abs(m) > gc.bound for m in mu):
            continue
        total += w.sign() * gc.data[tuple(m + gc.bound for m in mu)]
    return u_poly(total)


# --- characters of the hyperoctahedral group ------------------------------------------


def _beta_set(shape, length: int) -> tuple:
    parts = list(shape) + [0] * (length - len(shape))
    return tuple(p + length - 1 - i for i, p in enumerate(parts))


@lru_cache(maxsize=None)
def sn_character(shape: tuple, cycle_type: tuple) -> int:
    """Murnaghan-Nakayama, with rim hooks removed on a beta-set."""
    shape = tuple(p for p in shape if p)
    cycle_type = tuple(c for c in cycle_type if c)
    if sum(shape) != sum(cycle_type):
        raise ValueError(f"shape {shape} and cycle type {cycle_type} have different sizes")
    if not cycle_type:
        return 1
    r, rest = cycle_type[0], cycle_type[1:]
    beta = _beta_set(shape, len(shape))
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        between = sum(1 for c in beta if b - r < c < b)
        new = sorted((beads - {b}) | {b - r}, reverse=True)
        m = len(new)
        new_shape = tuple(x - (m - 1 - i) for i, x in enumerate(new))
        total += (-1) ** between * sn_character(new_shape, rest)
    return total


def _cycle_type(perm: list) -> tuple:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        j, c = s, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            c += 1
        out.append(c)
    return tuple(sorted(out, reverse=True))


@dataclass
class ClassFunctionB:
    n: int
    values: dict = field(repr=False)

    def __getitem__(self, w: SignedPermutation) -> int:
        return self.values[w]

    def degree(self) -> int:
        return self.values[SignedPermutation.identity(self.n)]

    def inner(self, other: "ClassFunctionB") -> int:
        s = sum(a * other.values[w] for w, a in self.values.items())
        order = 2 ** self.n * factorial(self.n)
        if s % order:
            raise NonIntegerMultiplicity(f"inner product {s}/{order}")
        return s // order


def _subgroup_value(h: SignedPermutation, k: int, alpha, beta):
    """Character of pi'_alpha x pi''_beta at h, or None when h leaves B_k x B_{n-k}."""
    if any((i < k) != (p < k) for i, p in enumerate(h.perm)):
        return None
    first = [p for p in h.perm[:k]]
    second = [p - k for p in h.perm[k:]]
    flips2 = sum(1 for i in h.flips if i >= k)
    val = sn_character(alpha, _cycle_type(first)) * sn_character(beta, _cycle_type(second))
    return -val if flips2 % 2 else val


@lru_cache(maxsize=None)
def _bn_character(alpha: tuple, beta: tuple, n: int) -> ClassFunctionB:
    k = sum(alpha)
    group = list(all_elements(n))
    inverses = [x.inverse() for x in group]
    h_order = 2 ** n * factorial(k) * factorial(n - k)
    by_class: dict = {}
    values = {}
    for g in group:
        key = g.signed_cycle_type()
        if key not in by_class:
            s = 0
            for x, xi in zip(group, inverses):
                val = _subgroup_value(xi * g * x, k, alpha, beta)
                if val is not None:
                    s += val
            if s % h_order:
                raise NonIntegerMultiplicity(f"induced value {s}/{h_order} at {key}")
            by_class[key] = s // h_order
        values[g] = by_class[key]
    return ClassFunctionB(n, values)


def bn_character(bp: Bipartition, n: int | None = None, force: bool = False) -> ClassFunctionB:
    """Ind from B_k x B_h of (pi'_alpha x pi''_beta): alpha trivial on flips, beta by the sign."""
    if n is None:
        n = bp.size
    if bp.size != n:
        raise ValueError(f"bipartition of {bp.size} used for rank {n}")
    _guard(n, force)
    return _bn_character(bp.alpha.parts, bp.beta.parts, n)


# --- Molien series -----------------------------------------------------------------


@dataclass
class TruncatedSeries2:
    """coeffs[d, k] is the coefficient of x^d y^k, d <= D (x harmonic, y exterior)."""
    coeffs: np.ndarray
    D: int

    def to_poly(self) -> LaurentPoly2:
        """x in the q slot, y in the t slot (same layout as the closed forms)."""
        return LaurentPoly2({(2 * d, 2 * k): int(c)
                             for (d, k), c in np.ndenumerate(self.coeffs) if c})


def _inverse_series(cycles_pos, cycles_neg, D: int) -> list:
    """1 / det(1 - x M) truncated at x^D, from the signed cycle type."""
    a = [0] * (D + 1)
    a[0] = 1
    for c, s in [(c, 1) for c in cycles_pos] + [(c, -1) for c in cycles_neg]:
        # 1 / (1 - s x^c)
        for d in range(c, D + 1):
            a[d] += s * a[d - c]
    return a


def _exterior_poly(cycles_pos, cycles_neg, n: int) -> list:
    """det(1 + y M) as coefficients in y."""
    p = [1] + [0] * n
    for c, s in [(c, 1) for c in cycles_pos] + [(c, -1) for c in cycles_neg]:
        # factor 1 - s (-y)^c
        coef = -s * (-1) ** c
        p = [p[i] + (coef * p[i - c] if i >= c else 0) for i in range(n + 1)]
    return p


def molien_pw(chi: ClassFunctionB, n: int, D: int | None = None, force: bool = False) -> TruncatedSeries2:
    """prod(1 - x^{2i}) * |W|^-1 sum_w chi(w) det(1 + y w) / det(1 - x w), truncated at x^D."""
    _guard(n, force)
    if D is None:
        D = n * n
    if D < n * n:
        raise ValueError(f"truncation degree {D} is below n^2 = {n * n}")
    classes: dict = {}
    for w, v in chi.values.items():
        key = w.signed_cycle_type()
        cnt, val = classes.get(key, (0, v))
        classes[key] = (cnt + 1, val)
    acc = np.zeros((D + 1, n + 1), dtype=object)
    acc[:] = 0
    for (pos, neg), (cnt, val) in sorted(classes.items()):
        if not val:
            continue
        xs = np.array(_inverse_series(pos, neg, D), dtype=object)
        ys = np.array(_exterior_poly(pos, neg, n), dtype=object)
        acc += (cnt * val) * np.outer(xs, ys)
    for i in range(1, n + 1):
        # multiply by 1 - x^{2i}
        if 2 * i <= D:
            acc[2 * i:] = acc[2 * i:] - acc[:D + 1 - 2 * i].copy()
    order = 2 ** n * factorial(n)
    out = np.zeros_like(acc)
    for idx, c in np.ndenumerate(acc):
        if c % order:
            raise NonIntegerMultiplicity(f"coefficient {c}/{order} at x^{idx[0]} y^{idx[1]}")
        out[idx] = c // order
    return TruncatedSeries2(out, D)


# --- the graded equality ---------------------------------------------------------------


def zero_weight_bipartitions(lam, rs: RootSystem) -> list:
    """W-types of the zero-weight space of the small representation V_lambda."""
    n = rs.rank
    lam = tuple(lam)
    if not any(lam):
        return [Bipartition.of((n,), ())]
    if rs.family == "B":
        for m in range(1, n + 1):
            if lam == eps(n, m):
                return [b_zero_weight_bipartition(m, n)]
    else:
        for k in range(1, n // 2 + 1):
            if lam == c_even_weight(n, k):
                return c_zero_weight_bipartitions("even", k, n)
        for k in range(0, (n - 1) // 2 + 1):
            if lam == c_odd_weight(n, k):
                return c_zero_weight_bipartitions("odd", k, n)
    raise ValueError(f"{lam} is not a small weight of {rs.family}{n}")


@dataclass
class ReederReport:
    family: str
    rank: int
    weight: tuple
    bipartitions: list
    lhs: LaurentPoly2
    rhs: LaurentPoly2
    closed: LaurentPoly2

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs == self.closed


def reeder_check(lam, rs: RootSystem, force: bool = False, strict: bool = True) -> ReederReport:
    """
    Exterior-algebra multiplicity at u = q against the Molien P_W of the
    zero-weight W-types at (x, y) = (q^2, q); the closed hook formula is
    compared too.  With ``strict`` a mismatch raises MismatchReport.
    """
    n = rs.rank
    _guard(n, force)
    bps = zero_weight_bipartitions(lam, rs)
    lhs = multiplicity_series(cached_character(rs, force), lam, rs)
    rhs, closed = ZERO, ZERO
    for bp in bps:
        rhs = rhs + at_q2_q(molien_pw(bn_character(bp, n, force), n, force=force).to_poly())
        closed = closed + at_q2_q(pw_bipartition(bp, n))
    report = ReederReport(rs.family, n, tuple(lam), bps, lhs, rhs, closed)
    if strict and not report.ok:
        raise MismatchReport(report)
    return report


def trivial_isotypic(rs: RootSystem, force: bool = False) -> LaurentPoly2:
    return multiplicity_series(cached_character(rs, force), (0,) * rs.rank, rs)


__all__ = [
    "ClassFunctionB", "GradedCharacter", "MismatchReport", "NonIntegerMultiplicity",
    "ReederReport", "ResourceLimit", "TruncatedSeries2", "bn_character", "cached_character",
    "lambda_g_character", "molien_pw", "multiplicity_series", "reeder_check", "sn_character",
    "trivial_isotypic", "u_poly", "zero_weight_bipartitions",
]
