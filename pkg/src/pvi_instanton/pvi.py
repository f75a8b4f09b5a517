"""Painleve VI solutions parametrized by the curve parameter ``w``.

Every solution here is algebraic and written as a rational function of
``w`` through the fixed covering

    t(w) = (1+w)(w-3)^3 / ((w-1)(w+3)^3).

Derivatives in ``t`` are taken by the chain rule in ``w``, and the PVI
residual is computed as a rational function of ``w``: it vanishes
identically iff the candidate is a solution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalog_data import TABLE
from .exact_core import Poly, RatFun

__all__ = [
    "Theta",
    "MU",
    "PviSolution",
    "ClassicParams",
    "t_of_w",
    "dt_dw",
    "lambda_from_fg",
    "fg_from_lambda",
    "d_dt",
    "pvi_residual",
    "theta_to_classic",
    "catalog",
    "catalog_keys",
    "catalog_fg",
    "solution_json",
    "solution_from_json",
    "NotInCatalog",
]

W = Poly.gen()


@dataclass(frozen=True)
class Theta:
    t1: Fraction
    t2: Fraction
    t3: Fraction
    t4: Fraction

    def __post_init__(self):
        for name in ("t1", "t2", "t3", "t4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, *vals) -> "Theta":
        if len(vals) == 1:
            vals = tuple(vals[0])
        return cls(*vals)

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3, self.t4))

    def __getitem__(self, k: int) -> Fraction:
        return tuple(self)[k]

    def dot(self, other: "Theta") -> Fraction:
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def __add__(self, other: "Theta") -> "Theta":
        return Theta(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Theta") -> "Theta":
        return Theta(*(a - b for a, b in zip(self, other)))

    def __mul__(self, c) -> "Theta":
        return Theta(*(a * c for a in self))

    __rmul__ = __mul__

    def __neg__(self) -> "Theta":
        return self * -1

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self) + ")"


MU = Theta(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


@dataclass(frozen=True, eq=False)
class PviSolution:
    """A candidate ``[lambda(w); theta]``; equality is exact on both parts."""

    lam: RatFun
    theta: Theta
    label: tuple[int, str] | None = None

    def __eq__(self, other):
        if not isinstance(other, PviSolution):
            return NotImplemented
        return self.lam == other.lam and self.theta == other.theta

    def __hash__(self):
        return hash((self.lam, self.theta))

    def __str__(self):
        tag = f"{self.label[0]}{self.label[1]}: " if self.label else ""
        return f"[{tag}lambda = {self.lam}; theta = {self.theta}]"


@dataclass(frozen=True)
class ClassicParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction


@lru_cache(maxsize=None)
def t_of_w() -> RatFun:
    return RatFun((1 + W) * (W - 3) ** 3, (W - 1) * (W + 3) ** 3)


@lru_cache(maxsize=None)
def dt_dw() -> RatFun:
    return t_of_w().derivative()


@lru_cache(maxsize=None)
def _dw_dt() -> RatFun:
    # closed form of 1/t'(w)
    return RatFun((W - 1) ** 2 * (W + 3) ** 4, 16 * W ** 2 * (W - 3) ** 2)


def d_dt(lam: RatFun) -> RatFun:
    """``d lambda / dt`` for ``lambda`` given as a function of ``w``."""
    if not isinstance(lam, RatFun):
        lam = RatFun(lam)
    return lam.derivative() * _dw_dt()


_PREFACTOR = RatFun((W - 3) ** 2, (W - 1) * (W + 3))


def lambda_from_fg(f: Poly, g: Poly) -> RatFun:
    """``((w-3)^2/((w-1)(w+3))) ((w^2-1) f + 8 g) / ((w^2+3) f - 24 g)``."""
    f, g = Poly(f), Poly(g)
    den = (W ** 2 + 3) * f - 24 * g
    if den.is_zero():
        raise ZeroDivisionError("(3+w^2) f - 24 g vanishes identically")
    return RatFun((W - 3) ** 2 * ((W ** 2 - 1) * f + 8 * g), (W - 1) * (W + 3) * den)


def fg_from_lambda(lam: RatFun) -> tuple[Poly, Poly]:
    """A coprime pair ``(f, g)`` with ``lambda_from_fg(f, g) == lam``.

    ``f`` and ``g`` are only defined up to a common constant; the result has
    integer coefficients with content 1 and a positive leading coefficient
    on the first nonzero of ``(f, g)``.
    """
    rho = lam / _PREFACTOR
    fr = -(8 + 24 * rho)
    gr = (W ** 2 - 1) - rho * (W ** 2 + 3)
    # clear denominators
    from .exact_core import poly_gcd

    den = fr.den * gr.den.exact_div(poly_gcd(fr.den, gr.den))
    f = fr.num * den.exact_div(fr.den)
    g = gr.num * den.exact_div(gr.den)
    common = poly_gcd(f, g)
    if common.degree > 0:
        f, g = f.exact_div(common), g.exact_div(common)
    cs = [c for c in f.coeffs() + g.coeffs() if c]
    from math import gcd, lcm

    dl = lcm(*(c.denominator for c in cs))
    nl = gcd(*(c.numerator * (dl // c.denominator) for c in cs))
    scale = Fraction(dl, nl)
    lead = f.leading() if not f.is_zero() else g.leading()
    if lead < 0:
        scale = -scale
    return f.scale(scale), g.scale(scale)


def theta_to_classic(theta: Theta) -> ClassicParams:
    t1, t2, t3, t4 = theta
    half = Fraction(1, 2)
    return ClassicParams(half * (t4 - 1) ** 2, -half * t1 ** 2, half * t3 ** 2, half * (1 - t2 ** 2))


def pvi_residual(s: PviSolution) -> RatFun:
    """``lambda'' - RHS`` of PVI(theta) as a rational function of ``w``.

    The zero function certifies that ``s`` solves PVI(theta).
    """
    lam = s.lam
    t = t_of_w()
    if lam.is_zero() or lam == 1 or lam == t:
        raise ValueError("degenerate solution candidate")
    t1, t2, t3, t4 = s.theta
    d1 = d_dt(lam)
    d2 = d_dt(d1)

    a, b, c = lam, lam - 1, lam - t
    tm1 = t - 1
    half = Fraction(1, 2)
    rhs = (
        (a.inverse() + b.inverse() + c.inverse()) * d1 * d1 * half
        - (t.inverse() + tm1.inverse() + c.inverse()) * d1
        + a * b * c * (t * t * tm1 * tm1 * 2).inverse() * (
            (t4 - 1) ** 2
            - t * (a * a).inverse() * t1 ** 2
            + tm1 * (b * b).inverse() * t3 ** 2
            + t * tm1 * (c * c).inverse() * (1 - t2 ** 2)
        )
    )
    return d2 - rhs


# ---------------------------------------------------------------------------
# catalog


class NotInCatalog(KeyError):
    def __str__(self):
        return f"not in catalog: {self.args[0]}"


def _norm_sign(sign) -> str:
    if sign in ("+", "plus", 1):
        return "+"
    if sign in ("-", "minus", -1):
        return "-"
    raise ValueError(f"sign must be + or -, got {sign!r}")


def _even_poly(coeffs: list[str]) -> Poly:
    out = [0] * (2 * len(coeffs) - 1)
    for k, c in enumerate(coeffs):
        out[2 * k] = int(c)
    return Poly(out)


def _expand(entry) -> Poly:
    const, factors = entry
    out = Poly([int(const)])
    for coeffs, e in factors:
        out = out * _even_poly(coeffs) ** e
    return out


def catalog_keys() -> list[tuple[int, str]]:
    return sorted(TABLE)


def catalog_fg(m: int, sign) -> tuple[Poly, Poly]:
    key = (m, _norm_sign(sign))
    if key not in TABLE:
        raise NotInCatalog(key)
    return _expand(TABLE[key]["f"]), _expand(TABLE[key]["g"])


@lru_cache(maxsize=None)
def _catalog(m: int, sign: str) -> PviSolution:
    f, g = catalog_fg(m, sign)
    s = 1 if sign == "+" else -1
    return PviSolution(lambda_from_fg(f, g), MU * (s * (2 * m + 1)), (m, sign))


def catalog(m: int, sign) -> PviSolution:
    """``Lambda_m^sign`` with ``theta = sign (2m+1) mu``."""
    return _catalog(m, _norm_sign(sign))


def _even_coeff_strings(p: Poly) -> list[str]:
    cs = p.coeffs()
    if any(c for c in cs[1::2]):
        raise ValueError("polynomial is not even")
    return [str(c) for c in cs[0::2]]


def solution_json(m: int, sign, f: Poly | None = None, g: Poly | None = None, theta: Theta | None = None) -> dict:
    """JSON-ready record: theta as rational strings, f and g by even degree."""
    sign = _norm_sign(sign)
    if f is None or g is None:
        f, g = catalog_fg(m, sign)
    if theta is None:
        theta = MU * ((1 if sign == "+" else -1) * (2 * m + 1))
    return {
        "m": m,
        "sign": sign,
        "theta": [str(x) for x in theta],
        "f": _even_coeff_strings(f),
        "g": _even_coeff_strings(g),
    }


def solution_from_json(data: dict | str) -> PviSolution:
    if isinstance(data, str):
        data = json.loads(data)
    f = _even_poly(data["f"]) if data["f"] else Poly()
    g = _even_poly(data["g"]) if data["g"] else Poly()
    theta = Theta(*(Fraction(x) for x in data["theta"]))
    return PviSolution(lambda_from_fg(f, g), theta, (int(data["m"]), _norm_sign(data["sign"])))
