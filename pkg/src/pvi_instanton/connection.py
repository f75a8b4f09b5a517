"""Hitchin's logarithmic connection on the trivial bundle and the m = 0 solutions.

Points of ``P(V_3)`` are binary cubics.  The quartic invariant ``p`` cuts out
the hypersurface of cubics with a repeated root; off it, every tangent
vector ``v`` at ``u`` is uniquely ``[a, u] + beta u`` with ``a`` in sl2, and

    a(u, v) = h(u, v) / p(u),    beta(u, v) = sigma(u, v) / p(u).

Restricting ``a`` to the pencil ``u + z v`` gives a Fuchsian system in ``z``
whose residues and eigen-conditions produce the two solutions
``lambda_0^+`` and ``lambda_0^-``.

Polynomials in the pencil parameter ``z`` are recovered exactly by
evaluating at ``z = 0, 1, ..., d`` and interpolating, so the coefficient
field never needs a second indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable

from .binary_forms import (
    X,
    Y,
    BiForm,
    Sl2Elem,
    bracket,
    pairing,
    sl2_coords,
    sl2_forms,
    transvectant,
)
from .exact_core import Poly, RatFun

__all__ = [
    "FormPair",
    "HCoeffs",
    "quartic_invariant",
    "q_from_factors",
    "r_determinant",
    "h_form",
    "sigma_form",
    "alpha_inverse",
    "curve_family",
    "z_polynomial",
    "h_coeffs",
    "h_coeffs_direct",
    "residue_at_zero",
    "residue_at_infinity",
    "eigen_coefficients",
    "solve_lambda0",
    "m0_residue_eigenvalues",
    "theta_m0",
    "K_Q",
    "K_R",
]

K_Q = Fraction(-1, 48)
# r / p for the bases (x^3, x^2y, xy^2, y^3) and (g0, g+, g-) of the frame (x, y)
K_R = Fraction(-1, 24)


def _check_cubic(u: BiForm) -> None:
    if not u.is_homogeneous(3):
        raise ValueError("expected a binary cubic")


def quartic_invariant(u: BiForm):
    """``p(u) = <u^2, u^2>_6``."""
    _check_cubic(u)
    u2 = u * u
    return pairing(u2, u2)


def q_from_factors(a: BiForm, b: BiForm, c: BiForm):
    """``(<a,b> <b,c> <c,a>)^2`` for linear factors of ``u = abc``."""
    ab = transvectant(a, b, 1).scalar()
    bc = transvectant(b, c, 1).scalar()
    ca = transvectant(c, a, 1).scalar()
    prod = ab * bc * ca
    return prod * prod


def _det(mat: list[list]) -> Any:
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term = term * mat[i][perm[i]]
            if not term:
                break
        total = total + term
    return total


def r_determinant(u: BiForm):
    """Determinant of ``([g0,u], [g+,u], [g-,u], u)`` in the basis ``x^3, x^2y, xy^2, y^3``."""
    _check_cubic(u)
    cols = [bracket(g, u).coeffs(3) for g in sl2_forms(X, Y)] + [u.coeffs(3)]
    return _det([[cols[c][r] for c in range(4)] for r in range(4)])


def h_form(u: BiForm, v: BiForm) -> BiForm:
    """The sl2-valued covariant ``(1/5)<<u^2,u>_3, v>_2 - (2/35)<<u^2,u>_2, v>_3``."""
    _check_cubic(u)
    u2 = u * u
    return (
        transvectant(transvectant(u2, u, 3), v, 2) * Fraction(1, 5)
        - transvectant(transvectant(u2, u, 2), v, 3) * Fraction(2, 35)
    )


def sigma_form(u: BiForm, v: BiForm):
    """``<<u^2, u>_3, v>``, the scalar part of the inverse infinitesimal action."""
    _check_cubic(u)
    return pairing(transvectant(u * u, u, 3), v)


def alpha_inverse(u: BiForm, v: BiForm) -> tuple[BiForm, Any]:
    """``(a, beta)`` with ``[a, u] + beta u = v``; requires ``p(u) != 0``."""
    pu = quartic_invariant(u)
    if not pu:
        raise ValueError("p(u) = 0: u lies on the discriminant hypersurface")
    inv = 1 / pu if not isinstance(pu, int) else Fraction(1, pu)
    return h_form(u, v) * inv, sigma_form(u, v) * inv


# ---------------------------------------------------------------------------
# the explicit curve family


@dataclass(frozen=True, eq=False)
class FormPair:
    """The pencil ``z -> u + z v`` of binary cubics."""

    u: BiForm
    v: BiForm

    def at(self, z) -> BiForm:
        return self.u + self.v * z


def curve_family() -> FormPair:
    """``u(w) = -((w+1)/(w+3)^3)(x+y)^2(8x + (w^2-1)y)`` and ``v = x^2 y`` over ``Q(w)``."""
    w = Poly.gen()
    scale = RatFun(-(w + 1), (w + 3) ** 3)
    xy = X + Y
    u = (xy * xy) * (X * RatFun.const(8) + Y * RatFun(w * w - 1))
    u = u * scale
    v = (X * X * Y).map_coeffs(RatFun.const)
    return FormPair(u, v)


# ---------------------------------------------------------------------------
# polynomials in the pencil parameter


def _vandermonde_inverse(deg: int) -> list[list[Fraction]]:
    n = deg + 1
    m = [[Fraction(i) ** k for k in range(n)] + [Fraction(int(r == i)) for r in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [row[n:] for row in m]


def z_polynomial(fn: Callable[[int], Any], deg: int) -> list:
    """Coefficients ``[c0, ..., c_deg]`` of ``fn(z)``, known to be polynomial of degree <= deg.

    ``fn`` may return scalars or forms; trailing zero coefficients are dropped.
    """
    vals = [fn(z) for z in range(deg + 1)]
    vinv = _vandermonde_inverse(deg)
    coeffs = []
    for k in range(deg + 1):
        acc = 0
        for i in range(deg + 1):
            if vinv[k][i]:
                acc = acc + vals[i] * vinv[k][i]
        coeffs.append(acc)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _zdeg(coeffs: list) -> int:
    return len(coeffs) - 1


@dataclass(frozen=True, eq=False)
class HCoeffs:
    """``h(u + z a^2 b, a^2 b) = h0(z) g0 + hplus(z) g+ + hminus(z) g-``.

    Each entry is a coefficient list in ``z`` (lowest degree first).
    """

    h0: list
    hplus: list
    hminus: list

    def degrees(self) -> tuple[int, int, int]:
        return (_zdeg(self.h0), _zdeg(self.hplus), _zdeg(self.hminus))

    def __eq__(self, other):
        if not isinstance(other, HCoeffs):
            return NotImplemented
        return all(
            _zlist_eq(p, q)
            for p, q in ((self.h0, other.h0), (self.hplus, other.hplus), (self.hminus, other.hminus))
        )

    __hash__ = None


def _zlist_eq(p: list, q: list) -> bool:
    n = max(len(p), len(q))
    p = list(p) + [0] * (n - len(p))
    q = list(q) + [0] * (n - len(q))
    return all(not (a - b) for a, b in zip(p, q))


def _strip(coeffs: list) -> list:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def h_coeffs(u: BiForm, a: BiForm, b: BiForm) -> HCoeffs:
    """Closed-form ``h0, h+, h-`` for the pencil through ``a^2 b`` (pairings are ``<.,.>_3``)."""
    _check_cubic(u)
    ab = transvectant(a, b, 1).scalar()
    if not ab:
        raise ValueError("degenerate frame")
    ua3 = pairing(u, a ** 3)
    ua2b = pairing(u, a * a * b)
    uab2 = pairing(u, a * b * b)
    ub3 = pairing(u, b ** 3)
    ab3 = ab * ab * ab
    inv = 1 / ab3 if not isinstance(ab3, int) else Fraction(1, ab3)

    h0 = [
        3 * ua2b * ua2b * uab2 - 2 * ua3 * uab2 * uab2 - ua3 * ua2b * ub3,
        2 * ab3 * (4 * ua3 * uab2 - 3 * ua2b * ua2b),
        -8 * ab3 * ab3 * ua3,
    ]
    hp = [
        4 * ub3 * (ua2b * ua2b - ua3 * uab2),
        4 * ub3 * 2 * ab3 * ua3,
    ]
    hm = [
        2 * ua3 * (ua3 * ub3 - ua2b * uab2),
        2 * ua3 * 2 * ab3 * ua2b,
    ]
    return HCoeffs(
        _strip([c * inv for c in h0]),
        _strip([c * inv for c in hp]),
        _strip([c * inv for c in hm]),
    )


def h_coeffs_direct(u: BiForm, a: BiForm, b: BiForm) -> HCoeffs:
    """Same coefficients obtained by expanding :func:`h_form` on the pencil."""
    v = a * a * b
    forms = z_polynomial(lambda z: h_form(u + v * z, v), 3)
    coords = [sl2_coords(f, a, b) for f in forms]
    return HCoeffs(
        _strip([c.c0 for c in coords]),
        _strip([c.cplus for c in coords]),
        _strip([c.cminus for c in coords]),
    )


# ---------------------------------------------------------------------------
# residues


def residue_at_zero(a: BiForm, b: BiForm, v: BiForm) -> Sl2Elem:
    """Residue at ``z = 0`` of ``a(a^2 b + z v, v) dz``; equals ``-(1/4) g0(a, b)``."""
    ab = transvectant(a, b, 1).scalar()
    if not ab:
        raise ValueError("degenerate frame")
    if not pairing(v, a ** 3):
        raise ValueError("nongeneric configuration")
    u0 = a * a * b
    pz = z_polynomial(lambda z: quartic_invariant(u0 + v * z), 4)
    if pz and pz[0]:
        raise ValueError("a^2 b is not on the discriminant")  # cannot happen
    slope = pz[1]
    h0 = h_form(u0, v)
    return sl2_coords(h0 / slope, a, b)


def residue_at_infinity(u: BiForm, a: BiForm, b: BiForm) -> Sl2Elem:
    """Residue at ``z = oo`` of ``a(u + z a^2 b, a^2 b) dz``.

    With ``h ~ H z^2`` and ``p ~ P z^3`` at infinity this is ``-H/P``.
    """
    v = a * a * b
    hz = z_polynomial(lambda z: h_form(u + v * z, v), 3)
    pz = z_polynomial(lambda z: quartic_invariant(u + v * z), 4)
    if len(pz) != 4 or len(hz) > 3:
        raise ValueError("pencil is not transverse at infinity")
    top = hz[2] if len(hz) == 3 else BiForm()
    return sl2_coords(-(top / pz[3]), a, b)


def _pencil_residue(pair: FormPair, z0, pz: list):
    """Residue of ``a(u + z v, v) dz`` at a simple root ``z0`` of ``p``."""
    dp = 0
    for k in range(len(pz) - 1, 0, -1):
        dp = dp * z0 + pz[k] * k
    if not dp:
        raise ValueError(f"z = {z0} is not a simple pole")
    return h_form(pair.at(z0), pair.v) / dp


def _eigen_square(g: BiForm):
    """``k^2`` where ``+-k`` are the eigenvalues of ``-[g, .]`` on ``V_1``."""
    m = [[bracket(g, X).coeff(1, 0), bracket(g, Y).coeff(1, 0)],
         [bracket(g, X).coeff(0, 1), bracket(g, Y).coeff(0, 1)]]
    trace = m[0][0] + m[1][1]
    if trace:
        raise ValueError("residue is not traceless")
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return -det


def m0_residue_eigenvalues() -> dict[str, Any]:
    """``k^2`` for the residues of ``A dz`` at ``0, 1, t, oo`` on the explicit family."""
    pair = curve_family()
    pz = z_polynomial(lambda z: quartic_invariant(pair.at(z)), 4)
    from .pvi import t_of_w

    out = {}
    for name, z0 in (("0", 0), ("1", 1), ("t", t_of_w())):
        out[name] = _eigen_square(_pencil_residue(pair, z0, pz))
    res_inf = residue_at_infinity(pair.u, X, Y)
    out["inf"] = _eigen_square(res_inf.form)
    return out


def theta_m0(sign: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Parameter vector ``+-s mu`` read off from the common residue eigenvalue ``s/4``."""
    ks = m0_residue_eigenvalues()
    values = set()
    for k2 in ks.values():
        k2 = k2.constant_value() if isinstance(k2, RatFun) else Fraction(k2)
        values.add(k2)
    if len(values) != 1:
        raise ValueError(f"residues have different eigenvalues: {ks}")
    k2 = values.pop()
    s = 4 * _exact_sqrt(k2)
    return tuple(Fraction(sign) * s / 2 for _ in range(4))


def _exact_sqrt(q: Fraction) -> Fraction:
    from math import isqrt

    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        raise ValueError(f"{q} is not a rational square")
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# the eigenvector condition


def eigen_coefficients(r: BiForm, a: BiForm = X, b: BiForm = Y) -> tuple:
    """``(f, g) = (<r, [g-, r]>, -<r, [g+, r]>)`` for an eigenvector ``r`` of ``[g0, .]``."""
    _, gp, gm = sl2_forms(a, b)
    return pairing(r, bracket(gm, r)), -pairing(r, bracket(gp, r))


def solve_lambda0(sign: str | int) -> RatFun:
    """Solve ``h-(z) f - h+(z) g = 0`` on the explicit family for the eigenvector ``x`` or ``y``."""
    r = _eigenvector(sign)
    f, g = eigen_coefficients(r)
    pair = curve_family()
    hc = h_coeffs(pair.u, X, Y)
    hp = hc.hplus + [0] * (2 - len(hc.hplus))
    hm = hc.hminus + [0] * (2 - len(hc.hminus))
    c0 = hm[0] * f - hp[0] * g
    c1 = hm[1] * f - hp[1] * g
    if not c1:
        raise ValueError("degenerate eigencondition")
    lam = -c0 / c1
    return lam if isinstance(lam, RatFun) else RatFun.const(lam)


def _eigenvector(sign) -> BiForm:
    if sign in ("+", "plus", 1, +1):
        return X
    if sign in ("-", "minus", -1):
        return Y
    raise ValueError(f"sign must be + or -, got {sign!r}")


def eigencondition_residual(sign, lam: RatFun):
    """``<r, [h(u + lam v, v), r]>``; zero iff ``r`` is an eigenvector of ``A(lam)``."""
    r = _eigenvector(sign)
    pair = curve_family()
    h = h_form(pair.at(lam), pair.v)
    return pairing(r, bracket(h, r))
