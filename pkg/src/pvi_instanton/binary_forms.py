"""Binary forms, transvectants and the sl2 structure they induce.

A :class:`BiForm` is a polynomial in ``x, y`` stored sparsely as
``{(i, j): coeff}`` for the monomial ``x**i * y**j``.  The coefficient field
is whatever the coefficients are: ``Fraction``, :class:`RootScalar` or
:class:`RatFun` all work, as long as a single form does not mix fields.

The degree-2 forms are identified with sl2 by taking the first transvectant
as the Lie bracket, and the same first transvectant gives the action of sl2
on every ``V_d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Any

from .exact_core import RatFun

Scalar = Any

__all__ = [
    "BiForm",
    "Sl2Elem",
    "transvectant",
    "pairing",
    "bracket",
    "sl2_basis",
    "sl2_forms",
    "sl2_coords",
    "cg_components",
    "bracket_matrix",
    "X",
    "Y",
]


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def _inv(s):
    if isinstance(s, int):
        return Fraction(1, s)
    return 1 / s


class BiForm:
    """Polynomial in (x, y); zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int], Scalar] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiForm":
        return cls({(i, j): c})

    @classmethod
    def from_coeffs(cls, coeffs) -> "BiForm":
        """Homogeneous form ``sum_k coeffs[k] * x**(d-k) * y**k`` with ``d = len - 1``."""
        d = len(coeffs) - 1
        return cls({(d - k, k): c for k, c in enumerate(coeffs)})

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {i + j for i, j in self.terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (d is None or d in ds)

    def degree(self) -> int:
        """Homogeneous degree (-1 for the zero form)."""
        ds = self.degrees()
        if not ds:
            return -1
        if len(ds) > 1:
            raise ValueError("form is not homogeneous")
        return ds.pop()

    def component(self, d: int) -> "BiForm":
        return BiForm({m: c for m, c in self.terms.items() if sum(m) == d})

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    def coeffs(self, d: int | None = None) -> list:
        """Coefficients of ``x**(d-k) y**k`` for ``k = 0..d``."""
        if d is None:
            d = self.degree()
        return [self.terms.get((d - k, k), 0) for k in range(d + 1)]

    def scalar(self):
        """Value of a degree-0 form."""
        if any(m != (0, 0) for m in self.terms):
            raise ValueError("form is not a constant")
        return self.terms.get((0, 0), 0)

    def map_coeffs(self, fn) -> "BiForm":
        return BiForm({m: fn(c) for m, c in self.terms.items()})

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, BiForm):
            if other == 0:
                return self
            other = BiForm({(0, 0): other})
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return BiForm(out)

    __radd__ = __add__

    def __neg__(self):
        return BiForm({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiForm):
            return BiForm({m: c * other for m, c in self.terms.items()})
        out: dict[tuple[int, int], Scalar] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                prod = c1 * c2
                out[m] = out[m] + prod if m in out else prod
        return BiForm(out)

    def __rmul__(self, other):
        return BiForm({m: other * c for m, c in self.terms.items()})

    def __truediv__(self, s):
        return self * _inv(s)

    def __pow__(self, k: int):
        out = BiForm({(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def diff(self, nx: int, ny: int) -> "BiForm":
        """``d^(nx+ny) / dx^nx dy^ny``."""
        out = {}
        for (i, j), c in self.terms.items():
            if i >= nx and j >= ny:
                out[(i - nx, j - ny)] = c * (_falling(i, nx) * _falling(j, ny))
        return BiForm(out)

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            if isinstance(other, (list, tuple, dict, str)):
                return NotImplemented
            other = BiForm({(0, 0): other})
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"BiForm({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if " " in cs else cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


X = BiForm.monomial(1, 0)
Y = BiForm.monomial(0, 1)


def transvectant(u: BiForm, v: BiForm, p: int) -> BiForm:
    """The p-th transvectant ``<u, v>_p``.

    ``(1/p!) sum_k (-1)^k C(p,k) d^p u/dx^(p-k)dy^k * d^p v/dx^k dy^(p-k)``.
    On ``V_i x V_j`` it lands in ``V_(i+j-2p)`` and vanishes for ``p > min(i, j)``.
    """
    if p < 0:
        raise ValueError("transvectant index must be nonnegative")
    if p == 0:
        return u * v
    out = BiForm()
    for k in range(p + 1):
        du = u.diff(p - k, k)
        if du.is_zero():
            continue
        dv = v.diff(k, p - k)
        if dv.is_zero():
            continue
        weight = Fraction((-1) ** k * comb(p, k), factorial(p))
        out = out + (du * dv) * weight
    return out


def pairing(u: BiForm, v: BiForm):
    """The invariant bilinear form: ``<u_d, v_d>_d`` summed over common degrees d."""
    total = 0
    for d in sorted(u.degrees() & v.degrees()):
        total = total + transvectant(u.component(d), v.component(d), d).scalar()
    return total


def bracket(g: BiForm, v: BiForm) -> BiForm:
    """Action of ``g`` in ``V_2 = sl2`` on a form: the first transvectant."""
    if not g.is_homogeneous(2):
        raise ValueError("bracket expects a degree-2 form as the Lie algebra element")
    return transvectant(g, v, 1)


def cg_components(i: int, j: int) -> list[int]:
    """Degrees of the irreducible summands of ``V_i (x) V_j``."""
    return list(range(i + j, abs(i - j) - 1, -2))


# ---------------------------------------------------------------------------
# sl2 frames


def _frame_pairing(a: BiForm, b: BiForm):
    if not (a.is_homogeneous(1) and b.is_homogeneous(1)):
        raise ValueError("frame vectors must be linear forms")
    ab = transvectant(a, b, 1).scalar()
    if not ab:
        raise ValueError("degenerate frame")
    return ab


def sl2_forms(a: BiForm, b: BiForm) -> tuple[BiForm, BiForm, BiForm]:
    """``(g0, g+, g-) = (-ab/<a,b>, a^2/(2<a,b>), -b^2/(2<a,b>))``."""
    ab = _frame_pairing(a, b)
    inv = _inv(ab)
    return (
        -(a * b) * inv,
        (a * a) * (inv * Fraction(1, 2)),
        -(b * b) * (inv * Fraction(1, 2)),
    )


@dataclass(frozen=True, eq=False)
class Sl2Elem:
    """Coordinates ``c0 g0 + cplus g+ + cminus g-`` relative to a frame ``(a, b)``."""

    c0: Scalar
    cplus: Scalar
    cminus: Scalar
    a: BiForm = X
    b: BiForm = Y

    @property
    def form(self) -> BiForm:
        g0, gp, gm = sl2_forms(self.a, self.b)
        return g0 * self.c0 + gp * self.cplus + gm * self.cminus

    def coords(self) -> tuple:
        return (self.c0, self.cplus, self.cminus)

    def __eq__(self, other):
        if not isinstance(other, Sl2Elem):
            return NotImplemented
        return self.form == other.form

    __hash__ = None


def sl2_basis(a: BiForm, b: BiForm) -> tuple[Sl2Elem, Sl2Elem, Sl2Elem]:
    """The basis ``(g0, g+, g-)`` of sl2 attached to the frame ``(a, b)``."""
    _frame_pairing(a, b)
    return (
        Sl2Elem(1, 0, 0, a, b),
        Sl2Elem(0, 1, 0, a, b),
        Sl2Elem(0, 0, 1, a, b),
    )


def sl2_coords(g: BiForm, a: BiForm = X, b: BiForm = Y) -> Sl2Elem:
    """Expand a degree-2 form in the frame basis, using the invariant pairing.

    ``<g0, g0> = -1``, ``<g+, g-> = -1/2`` and all other pairings vanish, so
    the coordinates are ``-<g, g0>``, ``-2<g, g->`` and ``-2<g, g+>``.
    """
    if not g.is_homogeneous(2):
        raise ValueError("sl2 elements are degree-2 forms")
    g0, gp, gm = sl2_forms(a, b)
    return Sl2Elem(
        -pairing(g, g0),
        -2 * pairing(g, gm),
        -2 * pairing(g, gp),
        a,
        b,
    )


def bracket_matrix(g: BiForm, d: int = 1) -> list[list]:
    """Matrix of ``v -> [g, v]`` on ``V_d`` in the basis ``x^(d-k) y^k``."""
    cols = []
    for k in range(d + 1):
        cols.append(bracket(g, BiForm.monomial(d - k, k)).coeffs(d) if d else [0])
    return [[cols[c][r] for c in range(d + 1)] for r in range(d + 1)]


def as_ratfun_form(u: BiForm) -> BiForm:
    """Lift a form with rational coefficients to ``Q(w)`` coefficients."""
    return u.map_coeffs(lambda c: c if isinstance(c, RatFun) else RatFun.const(c))
