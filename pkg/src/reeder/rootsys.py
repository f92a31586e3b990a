"""
Root systems of types B_n and C_n in the e_i basis, their common Weyl group of
signed permutations, dominance order, and the dot-action reduction rule.

Integral weights are plain tuples of ints.  The Weyl vector is carried doubled
(``rho2 = 2*rho``) so that half-integral type-B data never needs fractions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import comb

Weight = tuple


class UnsupportedRank(ValueError):
    pass


class IncomparableLattice(ValueError):
    """The difference of two weights is not in the root lattice."""


@dataclass(frozen=True)
class SignedPermutation:
    """
    Element of the hyperoctahedral group acting on R^n.

    ``(w mu)[i] = -mu[perm[i]]`` if ``i`` is in ``flips`` else ``mu[perm[i]]``
    (0-indexed): permute the coordinates, then negate the flipped slots.
    """
    perm: tuple
    flips: frozenset = frozenset()

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, mu):
        return tuple(-mu[p] if i in self.flips else mu[p] for i, p in enumerate(self.perm))

    __call__ = apply

    def sign(self) -> int:
        return _perm_sign(self.perm) * (-1) ** len(self.flips)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """``self * other``: apply ``other`` first."""
        perm = tuple(other.perm[p] for p in self.perm)
        flips = frozenset(i for i, p in enumerate(self.perm)
                          if (i in self.flips) != (p in other.flips))
        return SignedPermutation(perm, flips)

    __mul__ = compose

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        flips = frozenset(self.perm[i] for i in self.flips)
        return SignedPermutation(tuple(inv), flips)

    def signed_images(self) -> tuple:
        """Tuple s with w(e_j) = sign * e_{|s_j|-1}, sign = sign(s_j)."""
        out = [0] * self.n
        for i, p in enumerate(self.perm):
            out[p] = -(i + 1) if i in self.flips else (i + 1)
        return tuple(out)

    def signed_cycle_type(self) -> tuple:
        """(sorted lengths of positive cycles, sorted lengths of negative cycles)."""
        images = self.signed_images()
        seen = [False] * self.n
        pos, neg = [], []
        for start in range(self.n):
            if seen[start]:
                continue
            j, length, sgn = start, 0, 1
            while not seen[j]:
                seen[j] = True
                s = images[j]
                sgn *= 1 if s > 0 else -1
                j = abs(s) - 1
                length += 1
            (pos if sgn > 0 else neg).append(length)
        return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def simple_reflection(n: int, i: int) -> SignedPermutation:
    """s_i for i in 1..n: swap e_i, e_{i+1} for i < n; negate e_n for i = n."""
    if i < n:
        perm = list(range(n))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return SignedPermutation(tuple(perm))
    return SignedPermutation(tuple(range(n)), frozenset({n - 1}))


def all_elements(n: int):
    """Every signed permutation of rank n (2^n n! of them)."""
    from itertools import permutations
    for perm in permutations(range(n)):
        for mask in range(1 << n):
            yield SignedPermutation(perm, frozenset(i for i in range(n) if mask >> i & 1))


def unit(n: int, j: int, scale: int = 1) -> Weight:
    """scale * e_j, with j 1-indexed."""
    return tuple(scale if i == j - 1 else 0 for i in range(n))


def eps(n: int, m: int) -> Weight:
    """e_1 + ... + e_m."""
    return tuple(1 if i < m else 0 for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    positive_roots: tuple = field(repr=False)
    simple_roots: tuple = field(repr=False)
    rho2: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.rank

    @property
    def rho(self) -> tuple:
        from fractions import Fraction
        return tuple(Fraction(r, 2) for r in self.rho2)

    @property
    def exponents(self) -> tuple:
        return tuple(2 * i - 1 for i in range(1, self.rank + 1))

    @property
    def degrees(self) -> tuple:
        return tuple(2 * i for i in range(1, self.rank + 1))

    @property
    def theta(self) -> Weight:
        if self.family == "C":
            return unit(self.rank, 1, 2)
        return tuple(1 if i < 2 else 0 for i in range(self.rank))

    @property
    def theta_check(self) -> Weight:
        if self.family == "C":
            return unit(self.rank, 1)
        return tuple(1 if i < 2 else 0 for i in range(self.rank))

    @property
    def order(self) -> int:
        from math import factorial
        return 2 ** self.rank * factorial(self.rank)

    @property
    def dim(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    def simple_reflections(self) -> list:
        return [simple_reflection(self.rank, i) for i in range(1, self.rank + 1)]

    def pair_rho(self, mu) -> "Fraction":
        """(rho, mu) for an integral weight mu, as a Fraction."""
        from fractions import Fraction
        return Fraction(sum(r * m for r, m in zip(self.rho2, mu)), 2)

    def pair_rho2(self, mu) -> int:
        """2 (rho, mu), always an integer."""
        return sum(r * m for r, m in zip(self.rho2, mu))


def build_root_system(family: str, n: int, *, allow_rank_one: bool = False) -> RootSystem:
    """
    B_n or C_n realized on e_1..e_n.  Rank 1 is refused unless explicitly allowed
    (it is only used as a sanity case for the exterior-algebra oracle).
    """
    family = family.upper()
    if family not in ("B", "C"):
        raise ValueError(f"unsupported family {family!r}")
    if n < 2 and not (allow_rank_one and n == 1):
        raise UnsupportedRank(f"rank must be at least 2, got {n}")
    pos = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            minus = [0] * n
            minus[i - 1], minus[j - 1] = 1, -1
            plus = [0] * n
            plus[i - 1], plus[j - 1] = 1, 1
            pos += [tuple(minus), tuple(plus)]
    long_or_short = 2 if family == "C" else 1
    pos += [unit(n, j, long_or_short) for j in range(1, n + 1)]
    simple = [tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n)) for i in range(n - 1)]
    simple.append(unit(n, n, long_or_short))
    if family == "B":
        rho2 = tuple(2 * n - 2 * j + 1 for j in range(1, n + 1))
    else:
        rho2 = tuple(2 * (n - j + 1) for j in range(1, n + 1))
    return RootSystem(family, n, tuple(pos), tuple(simple), rho2)


# --- reduction ----------------------------------------------------------------


@dataclass(frozen=True)
class ReducedForm:
    sign: int
    dominant: Weight | None


def reduce_weight(mu, rs: RootSystem) -> ReducedForm:
    """Rewrite C_mu as sign * C_lambda with lambda dominant, or 0 if mu + rho is singular."""
    v2 = [2 * m + r for m, r in zip(mu, rs.rho2)]
    return _reduce_doubled(v2, rs.rho2)


reduce = reduce_weight


def _reduce_doubled(v2, rho2) -> ReducedForm:
    absv = [abs(x) for x in v2]
    if 0 in absv or len(set(absv)) < len(absv):
        return ReducedForm(0, None)
    negatives = sum(1 for x in v2 if x < 0)
    # parity of the permutation sorting |v| descending = parity of inversions
    inversions = sum(1 for i in range(len(absv)) for j in range(i + 1, len(absv)) if absv[i] < absv[j])
    sign = -1 if (inversions + negatives) % 2 else 1
    srt = sorted(absv, reverse=True)
    dominant = tuple((s - r) // 2 for s, r in zip(srt, rho2))
    return ReducedForm(sign, dominant)


def is_dominant(mu) -> bool:
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)) and mu[-1] >= 0


# --- orbits -------------------------------------------------------------------


def orbit_with_reps(lam, rs: RootSystem) -> dict:
    """Breadth-first orbit of lam; each element maps to a group element carrying lam to it."""
    gens = rs.simple_reflections()
    start = tuple(lam)
    reps = {start: SignedPermutation.identity(rs.rank)}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        w = reps[mu]
        for s in gens:
            nu = s.apply(mu)
            if nu not in reps:
                reps[nu] = s.compose(w)
                queue.append(nu)
    return reps


def weyl_orbit(lam, rs: RootSystem) -> set:
    return set(orbit_with_reps(lam, rs))


def stabilizer_generators(lam, rs: RootSystem) -> list:
    """Simple reflections fixing the dominant weight lam; they generate its stabilizer."""
    return [s for s in rs.simple_reflections() if s.apply(tuple(lam)) == tuple(lam)]


def stabilizer_orbit(lam, v, rs: RootSystem) -> set:
    gens = stabilizer_generators(lam, rs)
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        for s in gens:
            nu = s.apply(mu)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return seen


def _is_positive_root(beta, rs: RootSystem) -> bool:
    return tuple(beta) in set(rs.positive_roots)


def pair_orbit_qm(lam, rs: RootSystem) -> set:
    """All pairs (w lam, w theta) with w theta a positive root, by closure on pairs."""
    if rs.family != "C":
        raise NotQuasiMinusculePath("quasi-minuscule pairs are only used in type C")
    gens = rs.simple_reflections()
    start = (tuple(lam), rs.theta)
    seen = {start}
    queue = deque([start])
    while queue:
        mu, beta = queue.popleft()
        for s in gens:
            nxt = (s.apply(mu), s.apply(beta))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    positive = set(rs.positive_roots)
    return {(mu, beta) for mu, beta in seen if beta in positive}


class NotQuasiMinusculePath(ValueError):
    pass


# --- dominance order -------------------------------------------------------------


def in_root_lattice(d, rs: RootSystem) -> bool:
    if rs.family == "C":
        return sum(d) % 2 == 0
    return True


def in_positive_cone(d, rs: RootSystem) -> bool:
    """d is a nonnegative integer combination of simple roots (prefix-sum test)."""
    if not in_root_lattice(d, rs):
        return False
    s = 0
    for x in d[:-1]:
        s += x
        if s < 0:
            return False
    return sum(d) >= 0


def dominance_leq(mu, lam, rs: RootSystem) -> bool:
    d = tuple(a - b for a, b in zip(lam, mu))
    if not in_root_lattice(d, rs):
        raise IncomparableLattice(f"{lam} - {mu} is not in the root lattice of {rs.family}{rs.rank}")
    return in_positive_cone(d, rs)


def simple_root_coefficients(d, rs: RootSystem) -> tuple:
    """Coordinates of d in the basis of simple roots (may be negative)."""
    n = rs.rank
    prefix = []
    s = 0
    for x in d[:-1]:
        s += x
        prefix.append(s)
    total = sum(d)
    last = total // 2 if rs.family == "C" else total
    return tuple(prefix) + (last,)


def dominance_leq_bruteforce(mu, lam, rs: RootSystem, bound: int | None = None) -> bool:
    """Exhaustive search for a nonnegative simple-root expansion of lam - mu."""
    n = rs.rank
    d = tuple(a - b for a, b in zip(lam, mu))
    if bound is None:
        bound = 2 * sum(abs(x) for x in d) + 2
    simple = rs.simple_roots
    for coeffs in product(range(bound + 1), repeat=n):
        v = tuple(sum(c * a[i] for c, a in zip(coeffs, simple)) for i in range(n))
        if v == d:
            return True
    return False


# --- small weights --------------------------------------------------------------


def is_small(lam, rs: RootSystem) -> bool:
    lam = tuple(lam)
    if not in_root_lattice(lam, rs):
        return False
    # 2 alpha must not be a weight of V_lam; for dominant lam that is decided by
    # the dominant representative of alpha (a highest long or short root)
    for alpha in {tuple(sorted((abs(a) for a in r), reverse=True)) for r in rs.positive_roots}:
        d = tuple(l - 2 * a for l, a in zip(lam, alpha))
        if in_positive_cone(d, rs):
            return False
    return True


def small_weights(rs: RootSystem) -> list:
    """Nonzero small dominant weights, in the order used by the zero-weight tables."""
    n = rs.rank
    if rs.family == "B":
        return [eps(n, m) for m in range(1, n + 1)]
    out = [unit(n, 1, 2)]
    for i in range(1, n // 2 + 1):
        out.append(eps(n, 2 * i))
    for i in range(1, (n - 1) // 2 + 1):
        w = list(eps(n, 2 * i + 1))
        w[0] += 1
        out.append(tuple(w))
    return out


def c_even_weight(n: int, k: int) -> Weight:
    """omega_{2k} in type C_n (k = 0 gives the zero weight)."""
    return eps(n, 2 * k)


def c_odd_weight(n: int, k: int) -> Weight:
    """omega_1 + omega_{2k+1} in type C_n (k = 0 gives 2 omega_1)."""
    w = list(eps(n, 2 * k + 1))
    w[0] += 1
    return tuple(w)


def conj_zero_count_b(n: int, k: int) -> int:
    """Number of orbit points of eps_k conjugate to 0 in B_n."""
    if k % 2 == 0:
        return comb(n - k // 2, k // 2)
    s = (k - 1) // 2
    return comb(n - s - 1, s)


def conj_zero_sign_b(k: int) -> int:
    if k % 2 == 0:
        return (-1) ** (k // 2)
    return (-1) ** ((k - 1) // 2 + 1)


def weight_to_json(mu, half: bool = False):
    if half:
        return {"half": True, "coords": list(mu)}
    return list(mu)
