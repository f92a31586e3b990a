"""
Exact bivariate Laurent polynomials in (q, t) and unreduced rational functions.

Exponents are stored in half-units: the pair ``(a, b)`` stands for the monomial
``q^(a/2) t^(b/2)``.  This lets type-B pairings such as ``t^(1/2)`` live in the
same ring as the integral type-C data.  Coefficients are Python integers, so
arithmetic never wraps.

Rational functions are never reduced by a polynomial gcd.  Only integer content
and a monomial unit are normalized away; equality is decided by
cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


class FractionalExponent(ValueError):
    """A substitution produced an exponent that is not a multiple of 1/2."""


class NotDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


def _half(e) -> int:
    """Convert a mathematical exponent (int, Fraction or float .5) to half-units."""
    h = Fraction(e) * 2
    if h.denominator != 1:
        raise FractionalExponent(f"exponent {e} is not a multiple of 1/2")
    return int(h)


class LaurentPoly2:
    """Immutable Laurent polynomial in q^(1/2), t^(1/2) with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _from_clean(cls, terms: dict) -> "LaurentPoly2":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls._from_clean({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, q_exp=0, t_exp=0, coeff: int = 1) -> "LaurentPoly2":
        """``coeff * q^q_exp * t^t_exp``; exponents in ordinary (not half) units."""
        if not coeff:
            return cls._from_clean({})
        return cls._from_clean({(_half(q_exp), _half(t_exp)): int(coeff)})

    @classmethod
    def from_half(cls, a_half: int, b_half: int, coeff: int = 1) -> "LaurentPoly2":
        return cls._from_clean({(a_half, b_half): int(coeff)} if coeff else {})

    @classmethod
    def from_json(cls, triples: Iterable) -> "LaurentPoly2":
        return cls({(a, b): c for a, b, c in triples})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, q_exp=0, t_exp=0) -> int:
        return self._terms.get((_half(q_exp), _half(t_exp)), 0)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def leading(self) -> tuple[tuple[int, int], int]:
        """Lexicographically largest (a, b) term, as ((a, b), coeff)."""
        key = max(self._terms)
        return key, self._terms[key]

    def min_exponents(self) -> tuple[int, int]:
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def to_json(self) -> list:
        return [[a, b, c] for (a, b), c in sorted(self._terms.items())]

    # -- ring operations --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly2._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly2._from_clean({})
            return LaurentPoly2._from_clean({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for (a1, b1), c1 in b.items():
            for (a2, b2), c2 in a.items():
                key = (a1 + a2, b1 + b2)
                out[key] = get(key, 0) + c1 * c2
        return LaurentPoly2._from_clean({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            ((a, b), c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible("monomial with non-unit coefficient")
            return LaurentPoly2._from_clean({(a * e, b * e): c ** (-e)})
        result = LaurentPoly2.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, a_half: int, b_half: int) -> "LaurentPoly2":
        """Multiply by the monomial q^(a_half/2) t^(b_half/2)."""
        return LaurentPoly2._from_clean(
            {(a + a_half, b + b_half): c for (a, b), c in self._terms.items()})

    def scale_exact(self, d: int) -> "LaurentPoly2":
        out = {}
        for k, c in self._terms.items():
            qq, r = divmod(c, d)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {d}")
            out[k] = qq
        return LaurentPoly2._from_clean(out)

    # -- substitution -----------------------------------------------------

    def substitute(self, q_image: tuple[int, int, int], t_image: tuple[int, int, int]) -> "LaurentPoly2":
        """
        Homomorphic substitution q -> s q^(a/2) t^(b/2), t -> s' q^(a'/2) t^(b'/2).

        Images are given as ``(sign, a_half, b_half)``.  A negative sign may only
        be raised to integral powers; an odd half-unit exponent under a negative
        image raises :class:`FractionalExponent`.
        """
        sq, qa, qb = q_image
        st, ta, tb = t_image
        out: dict = {}
        for (a, b), c in self._terms.items():
            na2 = a * qa + b * ta
            nb2 = a * qb + b * tb
            if na2 % 2 or nb2 % 2:
                raise FractionalExponent(f"term q^({a}/2) t^({b}/2) lands off the half-unit grid")
            sign = 1
            if sq < 0:
                if a % 2:
                    raise FractionalExponent("(-1)^(1/2) under q substitution")
                if (a // 2) % 2:
                    sign = -sign
            if st < 0:
                if b % 2:
                    raise FractionalExponent("(-1)^(1/2) under t substitution")
                if (b // 2) % 2:
                    sign = -sign
            key = (na2 // 2, nb2 // 2)
            out[key] = out.get(key, 0) + sign * c
        return LaurentPoly2({k: c for k, c in out.items() if c})

    def bar(self) -> "LaurentPoly2":
        """(q, t) -> (q^-1, t^-1)."""
        return LaurentPoly2._from_clean({(-a, -b): c for (a, b), c in self._terms.items()})

    def specialize(self) -> "LaurentPoly2":
        """(q, t) -> (-q, q^2): the evaluation turning C_mu into a Poincare polynomial."""
        return self.substitute(SPECIALIZE_Q, SPECIALIZE_T)

    def eval_at(self, q, t):
        """Numeric evaluation (Fractions welcome); half exponents need perfect squares."""
        total = 0
        for (a, b), c in self._terms.items():
            total += c * _pow_half(q, a) * _pow_half(t, b)
        return total

    # -- division ---------------------------------------------------------

    def divmod_exact(self, other: "LaurentPoly2") -> "LaurentPoly2":
        """
        Quotient ``self / other`` when it exists in the Laurent ring.

        Lex order on exponent pairs is a group order, so leading terms multiply;
        repeated cancellation of the leading term finds the quotient or proves
        none exists once the remainder drops below the lowest admissible term.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        (la, lb), lc = other.leading()
        floor_self = self.min_exponents()
        floor_other = other.min_exponents()
        floor_q = (floor_self[0] - floor_other[0], floor_self[1] - floor_other[1])
        rem = dict(self._terms)
        quot: dict = {}
        o_items = list(other._terms.items())
        while rem:
            key = max(rem)
            c = rem[key]
            mono = (key[0] - la, key[1] - lb)
            # minimal degrees add in each variable, so each coordinate is bounded below
            if mono[0] < floor_q[0] or mono[1] < floor_q[1]:
                raise NotDivisible("remainder below admissible range")
            qc, r = divmod(c, lc)
            if r:
                raise NotDivisible("leading coefficient does not divide")
            quot[mono] = qc
            for (a, b), oc in o_items:
                k = (a + mono[0], b + mono[1])
                v = rem.get(k, 0) - qc * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly2._from_clean(quot)

    def divides(self, other: "LaurentPoly2") -> bool:
        try:
            other.divmod_exact(self)
        except NotDivisible:
            return False
        return True

    def __repr__(self):
        return f"LaurentPoly2({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def _pow_half(x, h: int):
    if h % 2 == 0:
        return Fraction(x) ** (h // 2)
    root = Fraction(x)
    num, den = root.numerator, root.denominator
    from math import isqrt
    rn, rd = isqrt(abs(num)), isqrt(den)
    if rn * rn != abs(num) or rd * rd != den or num < 0:
        raise ValueError("half exponent needs a nonnegative rational square")
    return Fraction(rn, rd) ** h


def format_poly(p: LaurentPoly2, names: tuple[str, str] = ("q", "t")) -> str:
    if p.is_zero():
        return "0"

    def exp(v):
        return str(v // 2) if v % 2 == 0 else f"{v}/2"

    parts = []
    for (a, b), c in sorted(p.items()):
        mono = []
        if a:
            mono.append(names[0] if a == 2 else f"{names[0]}^{exp(a)}")
        if b:
            mono.append(names[1] if b == 2 else f"{names[1]}^{exp(b)}")
        body = "*".join(mono)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
Q = LaurentPoly2.monomial(1, 0)
T = LaurentPoly2.monomial(0, 1)

SPECIALIZE_Q = (-1, 2, 0)   # q -> -q
SPECIALIZE_T = (1, 4, 0)    # t -> q^2
BAR_Q = (1, -2, 0)          # q -> q^-1
BAR_T = (1, 0, -2)          # t -> t^-1


def q(e=1) -> LaurentPoly2:
    return LaurentPoly2.monomial(e, 0)


def t(e=1) -> LaurentPoly2:
    return LaurentPoly2.monomial(0, e)


def lp_add(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    return a + b


def lp_mul(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    return a * b


def lp_substitute(p: LaurentPoly2, q_image, t_image) -> LaurentPoly2:
    return p.substitute(q_image, t_image)


class RationalFn:
    """
    ``num / den`` over LaurentPoly2, normalized but not gcd-reduced.

    Normal form: the joint integer content of num and den is 1, den has
    minimal q- and t-exponents equal to zero, and the lexicographically
    largest term of den has a positive coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, normalize: bool = True):
        if isinstance(num, int):
            num = LaurentPoly2.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = LaurentPoly2.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_json(cls, obj) -> "RationalFn":
        return cls(LaurentPoly2.from_json(obj["num"]), LaurentPoly2.from_json(obj["den"]))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def try_polynomial(self) -> "RationalFn":
        """Divide out the denominator when it divides exactly; otherwise self."""
        if self.den == ONE:
            return self
        try:
            return RationalFn(self.num.divmod_exact(self.den))
        except NotDivisible:
            return self

    def as_poly(self) -> LaurentPoly2:
        r = self.try_polynomial()
        if r.den != ONE:
            raise NotDivisible("rational function is not a Laurent polynomial")
        return r.num

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        # cheap common-denominator search; no gcd
        if len(self.den) >= len(other.den):
            try:
                e = self.den.divmod_exact(other.den)
                return RationalFn(self.num + other.num * e, self.den)
            except NotDivisible:
                pass
        else:
            try:
                e = other.den.divmod_exact(self.den)
                return RationalFn(self.num * e + other.num, other.den)
            except NotDivisible:
                pass
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def substitute(self, q_image, t_image) -> "RationalFn":
        return RationalFn(self.num.substitute(q_image, t_image),
                          self.den.substitute(q_image, t_image))

    def specialize(self) -> "RationalFn":
        return self.substitute(SPECIALIZE_Q, SPECIALIZE_T)

    def bar(self) -> "RationalFn":
        return RationalFn(self.num.bar(), self.den.bar())

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFn({self.num})"
        return f"RationalFn(({self.num}) / ({self.den}))"


def _coerce(x):
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, (LaurentPoly2, int)):
        return RationalFn(x)
    return None


def _normalize(num: LaurentPoly2, den: LaurentPoly2):
    if num.is_zero():
        return num, ONE
    g = gcd(num.content(), den.content())
    if g > 1:
        num, den = num.scale_exact(g), den.scale_exact(g)
    ma, mb = den.min_exponents()
    if ma or mb:
        num, den = num.shift(-ma, -mb), den.shift(-ma, -mb)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def frac_eq(x: RationalFn, y: RationalFn) -> bool:
    return x.num * y.den == y.num * x.den


def frac_arith(op: str, x: RationalFn, y: RationalFn) -> RationalFn:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")
