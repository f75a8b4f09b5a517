"""Exact scalars, univariate polynomials over Q and reduced rational functions.

Rationals are :class:`fractions.Fraction`.  Dense polynomials in one
indeterminate (conventionally ``w``) are backed by FLINT's ``fmpq_poly``,
which gives fast exact gcds for the degree-several-hundred numerators that
show up when Okamoto transformations are iterated.

Every :class:`RatFun` is kept in canonical form: coprime numerator and
denominator, denominator monic.  Two rational functions are equal iff their
canonical coefficient lists are identical.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

import flint

Rational = Fraction

__all__ = [
    "Rational",
    "RootScalar",
    "Poly",
    "RatFun",
    "poly_gcd",
    "ratfun_reduce",
    "root_mul",
    "squarefree_split",
    "W",
]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _to_fmpq(x) -> flint.fmpq:
    f = _to_fraction(x)
    return flint.fmpq(f.numerator, f.denominator)


# ---------------------------------------------------------------------------
# square roots of integers


def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * r`` with ``r`` squarefree; return ``(s, r)``.

    >>> squarefree_split(200)
    (10, 2)
    """
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n == 0:
        return 0, 1
    s, r = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * n


class RootScalar:
    """An exact number ``coeff * sqrt(radicand)`` with a squarefree radicand.

    The radicand is 1 exactly when the value is rational, and zero is stored
    as ``0 * sqrt(1)``.  Addition is only defined between equal radicands
    (or when one side is zero).
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff=0, radicand: int = 1):
        coeff = _to_fraction(coeff)
        radicand = int(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        s, r = squarefree_split(radicand)
        coeff *= s
        if coeff == 0:
            r = 1
        self.coeff = coeff
        self.radicand = r

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "RootScalar":
        """``coeff * sqrt(n)`` in canonical form."""
        return cls(coeff, n)

    def _coerce(self, other):
        if isinstance(other, RootScalar):
            return other
        try:
            return RootScalar(_to_fraction(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeff:
            return self
        if not self.coeff:
            return other
        if self.radicand != other.radicand:
            raise ValueError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        return RootScalar(self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return RootScalar(-self.coeff, self.radicand)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return root_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeff:
            raise ZeroDivisionError("division by zero root scalar")
        # 1/(c sqrt r) = sqrt(r) / (c r)
        inv = RootScalar(1 / (other.coeff * other.radicand), other.radicand)
        return self * inv

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RootScalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return self.coeff != 0

    def is_rational(self) -> bool:
        return self.radicand == 1

    def to_fraction(self) -> Fraction:
        if self.radicand != 1:
            raise ValueError(f"{self} is irrational")
        return self.coeff

    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def __eq__(self, other):
        if isinstance(other, RootScalar):
            return self.coeff == other.coeff and self.radicand == other.radicand
        try:
            f = _to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.radicand == 1 and self.coeff == f

    def __hash__(self):
        if self.radicand == 1:
            return hash(self.coeff)
        return hash((self.coeff, self.radicand))

    def __repr__(self):
        return f"RootScalar({self.coeff}, {self.radicand})"

    def __str__(self):
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        if self.coeff == -1:
            return f"-sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"


def root_mul(a: RootScalar, b: RootScalar) -> RootScalar:
    """Product of two root scalars, square factors pulled into the coefficient."""
    g = math.gcd(a.radicand, b.radicand)
    # sqrt(r1) sqrt(r2) = g * sqrt((r1/g)(r2/g)), and the cofactors stay squarefree
    return RootScalar(a.coeff * b.coeff * g, (a.radicand // g) * (b.radicand // g))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``Poly([c0, c1, ...])`` is ``c0 + c1*w + ...``.  Instances are immutable.
    """

    __slots__ = ("_p",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, flint.fmpq_poly):
            self._p = coeffs
        elif isinstance(coeffs, Poly):
            self._p = coeffs._p
        elif isinstance(coeffs, (int, Fraction, flint.fmpq, flint.fmpz)):
            self._p = flint.fmpq_poly([_to_fmpq(coeffs)])
        else:
            self._p = flint.fmpq_poly([_to_fmpq(c) for c in coeffs])

    @classmethod
    def _wrap(cls, p: flint.fmpq_poly) -> "Poly":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def gen(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots, lead=1) -> "Poly":
        out = cls([lead])
        for r in roots:
            out = out * cls([-_to_fraction(r), 1])
        return out

    # -- inspection
    def coeffs(self) -> list[Fraction]:
        return [_to_fraction(c) for c in self._p.coeffs()]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self._p.degree()

    def leading(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return _to_fraction(self._p[self._p.degree()])

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k > self._p.degree():
            return Fraction(0)
        return _to_fraction(self._p[k])

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs()[1::2])

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive over Z (0 for zero)."""
        if self.is_zero():
            return Fraction(0)
        cs = self.coeffs()
        den = math.lcm(*(c.denominator for c in cs))
        num = math.gcd(*(c.numerator * (den // c.denominator) for c in cs))
        return Fraction(num, den)

    def integer_coeffs(self) -> list[int]:
        """Coefficients of the primitive integer associate with positive lead."""
        if self.is_zero():
            return []
        c = self.content()
        if self.leading() < 0:
            c = -c
        return [int(x / c) for x in self.coeffs()]

    # -- arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other._p
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return flint.fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._wrap(o - self._p)

    def __neg__(self):
        return Poly._wrap(-self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Poly._wrap(self._p * o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return Poly._wrap(self._p ** k)

    def __divmod__(self, other):
        if isinstance(other, Poly) and other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        q, r = divmod(self._p, o)
        return Poly._wrap(q), Poly._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def scale(self, c) -> "Poly":
        return Poly._wrap(self._p * _to_fmpq(c))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly._wrap(self._p / self._p[self._p.degree()])

    def derivative(self) -> "Poly":
        return Poly._wrap(self._p.derivative())

    def __call__(self, x):
        """Evaluate at a rational point, or compose with another Poly."""
        if isinstance(x, Poly):
            out = Poly()
            for c in reversed(self.coeffs()):
                out = out * x + c
            return out
        return _to_fraction(self._p(_to_fmpq(x)))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._p == other._p
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(tuple(self.coeffs()))

    def __bool__(self):
        return not self._p.is_zero()

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs()]})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "w") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs()):
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c)
                if "/" in cs:
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}")
        s = " + ".join(reversed(terms))
        return s.replace("+ -", "- ")


W = Poly.gen()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; ``poly_gcd(0, 0) == 0``."""
    if p.is_zero() and q.is_zero():
        return Poly()
    return Poly._wrap(p._p.gcd(q._p)).monic()


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """Reduced quotient ``num/den`` of polynomials over Q.

    The constructor reduces; use :func:`ratfun_reduce` for the same thing as
    a function.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, Poly) else Poly(num)
        den = den if isinstance(den, Poly) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def gen(cls) -> "RatFun":
        return cls._raw(Poly.gen(), Poly([1]))

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls._raw(Poly(c), Poly([1]))

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun._raw(other, Poly([1]))
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return RatFun._raw(Poly(other), Poly([1]))
        return NotImplemented

    # -- arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        if o.den.degree == 0:
            return RatFun._raw(self.num + o.num * self.den, self.den)
        if self.den.degree == 0:
            return RatFun._raw(self.num * o.den + o.num, o.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFun()
            return RatFun._raw(self.num.scale(other), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.num.is_zero() or o.num.is_zero():
            return RatFun()
        # cross-cancel before multiplying keeps the operands small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num.exact_div(g1), o.den.exact_div(g1)
        n2, d1 = o.num.exact_div(g2), self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lc = den.leading()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RatFun._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        num, den = self.den, self.num
        lc = den.leading()
        return RatFun._raw(num.scale(1 / lc), den.scale(1 / lc))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun._raw(self.num ** k, self.den ** k)

    def derivative(self) -> "RatFun":
        """d/dw by the quotient rule, reduced."""
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        if isinstance(x, (RatFun, Poly)):
            x = self._coerce(x)
            return _compose(self.num, x) / _compose(self.den, x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at w = {x}")
        return self.num(x) / d

    # -- predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0]

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num[0])
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _compose(p: Poly, x: RatFun) -> RatFun:
    out = RatFun()
    for c in reversed(p.coeffs()):
        out = out * x + c
    return out


def ratfun_reduce(num: Poly, den: Poly) -> RatFun:
    """Canonical form of ``num/den``: coprime, monic denominator."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero rational function")
    return RatFun(num, den)
