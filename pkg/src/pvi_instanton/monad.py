"""Coefficients of the SL2-equivariant self-dual monads and their checks.

For each ``m`` the monad is ``W(m) (x) V_3 -> Vhat(m)`` with

* ``W(m)`` the sum of ``V_2l`` over ``0 <= l <= m-1``, ``l = m-1 (mod 2)``,
* ``Vhat(m) = V_1 + V_3 + ... + V_(2m+1)``,

and the component ``V_2l (x) V_3 -> Vhat`` is ``sum_p a[l,p] <w, z>_p`` for
``0 <= p <= min(2l, 3)``.  Coefficients are square roots of integers, held as
:class:`RootScalar`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact_core import RootScalar
from .report import VerificationReport

__all__ = [
    "MonadCoeffs",
    "SpaceDims",
    "w_indices",
    "generate_coeffs",
    "closed_form",
    "p_range",
    "verify_monad",
    "space_dims",
    "rescale",
]


def w_indices(m: int) -> list[int]:
    """The ``l`` with ``V_2l`` a summand of ``W(m)``."""
    return [l for l in range(m) if (l - (m - 1)) % 2 == 0]


def p_range(l: int) -> range:
    return range(min(2 * l, 3) + 1)


@dataclass
class MonadCoeffs:
    m: int
    entries: dict[tuple[int, int], RootScalar] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> RootScalar:
        return self.entries[key]

    def get(self, l: int, p: int) -> RootScalar | None:
        return self.entries.get((l, p))


def closed_form(m: int, l: int, p: int) -> RootScalar:
    """``a[l,p]`` from the closed formulas, whether or not ``p`` is in range for ``l``."""
    n = 2 * m + 1
    c, r = {
        0: (2 * l - 1, 9 * n * n - (2 * l + 3) ** 2),
        1: (2 * l - 1, n * n - (2 * l + 3) ** 2),
        2: (2 * l + 3, n * n - (2 * l - 1) ** 2),
        3: (2 * l + 3, 9 * n * n - (2 * l - 1) ** 2),
    }[p]
    if r < 0:
        raise ValueError(f"negative radicand for a[{l},{p}] at m={m}")
    return RootScalar(c, r)


def generate_coeffs(m: int) -> MonadCoeffs:
    """The explicit solution of the injectivity and isotropy conditions."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = MonadCoeffs(m)
    for l in w_indices(m):
        for p in p_range(l):
            out.entries[(l, p)] = closed_form(m, l, p)
    return out


def rescale(coeffs: MonadCoeffs, gamma: dict[int, object], kappa: dict[int, int] | None = None) -> MonadCoeffs:
    """Equivalent coefficient set ``gamma_l * a[l,p] * kappa_(2l+3-2p)``."""
    kappa = kappa or {}
    out = MonadCoeffs(coeffs.m)
    for (l, p), a in coeffs.entries.items():
        k = kappa.get(2 * l + 3 - 2 * p, 1)
        if k * k != 1:
            raise ValueError("kappa entries must square to 1")
        out.entries[(l, p)] = a * gamma.get(l, 1) * k
    return out


def verify_monad(c: MonadCoeffs) -> VerificationReport:
    """Check injectivity, diagonal and off-diagonal isotropy, and a[m-1,1] = 0.

    Diagonal conditions only involve squares, so both sides are compared as
    rationals.  The off-diagonal condition compares canonical root scalars,
    keeping the sign.
    """
    rep = VerificationReport(f"monad verify --m {c.m}")
    ls = w_indices(c.m)

    for l in ls:
        a0 = c.get(l, 0)
        rep.add(f"injectivity l={l}", a0 is not None and bool(a0), f"a[{l},0]={a0}")

    for l in ls:
        a = [c.get(l, p) for p in range(4)]
        sq = [x.square() if x is not None else None for x in a]
        if l >= 1:
            lhs = (2 * l - 1) ** 2 * sq[2]
            rhs = (2 * l + 1) * sq[0] + 2 * l * (2 * l - 3) * sq[1]
            rep.add(f"diagonal-1 l={l}", lhs == rhs, f"lhs={lhs} rhs={rhs}")
        if l >= 2:
            lhs = (2 * l - 1) ** 2 * sq[3]
            rhs = (2 * l + 2) * (2 * l + 5) * sq[0] - 9 * (2 * l + 1) * sq[1]
            rep.add(f"diagonal-2 l={l}", lhs == rhs, f"lhs={lhs} rhs={rhs}")

    for l in ls:
        if l >= 1 and l + 2 in ls:
            lhs = c[(l, 0)] * c[(l + 2, 2)]
            rhs = c[(l, 1)] * c[(l + 2, 3)]
            rep.add(f"off-diagonal l={l},{l + 2}", lhs == rhs, f"lhs={lhs} rhs={rhs}")

    if c.m >= 1:
        top = c.get(c.m - 1, 1)
        if top is not None:
            rep.add(f"splitting a[{c.m - 1},1]=0", not top, f"a[{c.m - 1},1]={top}")
        else:
            # m = 1: p = 1 is out of range for l = 0; fall back to the formula
            val = closed_form(c.m, c.m - 1, 1)
            rep.add(f"splitting a[{c.m - 1},1]=0", not val, f"a[{c.m - 1},1]={val} (not stored)")
    return rep


@dataclass(frozen=True)
class SpaceDims:
    m: int
    dimW: int
    dimVhat: int
    dimV: int
    rank: int
    c2: int


def space_dims(m: int) -> SpaceDims:
    """Dimension bookkeeping for ``W(m)``, ``Vhat(m)`` and ``V(m)``."""
    dim_w = sum(2 * l + 1 for l in w_indices(m))
    dim_vhat = sum(2 * j + 2 for j in range(m + 1))
    cancelled = 2 * m  # dim V_(2m-1), with V_(-1) = 0
    dim_v = dim_vhat - cancelled
    return SpaceDims(m, dim_w, dim_vhat, dim_v, dim_vhat - 2 * dim_w - cancelled, dim_w)
