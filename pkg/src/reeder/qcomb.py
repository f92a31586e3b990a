"""Partitions, bipartitions, hook lengths and Gaussian binomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import ONE, ZERO, LaurentPoly2


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{self.parts} is not weakly decreasing")
        if any(p < 0 for p in parts):
            raise ValueError(f"{self.parts} has negative parts")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self):
        """(i, j), 1-indexed row and column, English convention."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))


@dataclass(frozen=True)
class Bipartition:
    alpha: Partition
    beta: Partition

    @classmethod
    def of(cls, alpha=(), beta=()) -> "Bipartition":
        return cls(Partition(tuple(alpha)), Partition(tuple(beta)))

    @property
    def size(self) -> int:
        return self.alpha.size + self.beta.size


def hooks(p: Partition) -> list:
    conj = p.transpose().parts
    return sorted((p.parts[i - 1] - j + conj[j - 1] - i + 1 for i, j in p.boxes()), reverse=True)


def contents(p: Partition) -> list:
    return sorted(j - i for i, j in p.boxes())


def n_stat(p: Partition) -> int:
    return sum((i - 1) * part for i, part in enumerate(p.parts, start=1))


def partitions(n: int, max_part: int | None = None):
    """All partitions of n with parts at most max_part, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def bipartitions(n: int):
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield Bipartition(a, b)


def q_integer(n: int, x: LaurentPoly2) -> LaurentPoly2:
    """(n)_x = 1 + x + ... + x^{n-1}."""
    out, power = ZERO, ONE
    for _ in range(n):
        out = out + power
        power = power * x
    return out


def q_binomial(n: int, m: int, x: LaurentPoly2 | None = None) -> LaurentPoly2:
    """
    Gaussian binomial [n choose m] evaluated at the monomial x (default q).

    Built by the Pascal recursion [n,m] = [n-1,m] + x^{n-m} [n-1,m-1], so no
    division is ever performed.
    """
    if x is None:
        x = LaurentPoly2.monomial(1, 0)
    if not 0 <= m <= n:
        raise ValueError(f"q-binomial out of range: n={n}, m={m}")
    return _q_binomial(n, m, x)


@lru_cache(maxsize=None)
def _q_binomial(n: int, m: int, x: LaurentPoly2) -> LaurentPoly2:
    if m == 0 or m == n:
        return ONE
    return _q_binomial(n - 1, m, x) + (x ** (n - m)) * _q_binomial(n - 1, m - 1, x)


def q_factorial(n: int, x: LaurentPoly2) -> LaurentPoly2:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i, x)
    return out


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a."""
    from math import comb
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)
