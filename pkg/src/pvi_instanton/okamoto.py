"""Okamoto transformations acting on :class:`PviSolution` values.

Words are written left to right as in the usual operator notation and
applied rightmost-first, so ``B L`` with ``B = (R1 R2 R3 R5) R4 (R5 R3 R2 R1)``
applies ``R1`` to ``L`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .exact_core import RatFun
from .pvi import MU, PviSolution, Theta, catalog, d_dt, pvi_residual, t_of_w
from .report import PASS, VerificationReport

__all__ = [
    "OkamotoOp",
    "r5",
    "r_reflect",
    "apply_word",
    "B_WORD",
    "Q_WORD",
    "QINV_WORD",
    "theta_action",
    "hierarchy_check",
    "perturbed_reference",
]

GENERATORS = ("R1", "R2", "R3", "R4", "R5")

B_WORD = ("R1", "R2", "R3", "R5", "R4", "R5", "R3", "R2", "R1")
Q_WORD = B_WORD + ("R5",)
QINV_WORD = ("R5",) + B_WORD

_ALIASES = {"B": B_WORD, "Q": Q_WORD, "QINV": QINV_WORD, "Q^-1": QINV_WORD, "Q-1": QINV_WORD}
_TOKEN = re.compile(r"Q\^-1|Q-1|QINV|R[1-5]|B|Q", re.IGNORECASE)


@dataclass(frozen=True)
class OkamotoOp:
    """A word over ``R1..R5``; ``word[-1]`` acts first."""

    word: tuple[str, ...]

    def __post_init__(self):
        bad = [g for g in self.word if g not in GENERATORS]
        if bad:
            raise ValueError(f"unknown generator(s): {', '.join(bad)}")
        object.__setattr__(self, "word", tuple(self.word))

    @classmethod
    def parse(cls, text: str) -> "OkamotoOp":
        """Parse e.g. ``"R5"``, ``"R1 R2 R3"``, ``"B R5"`` or ``"Q Q Q"``."""
        compact = re.sub(r"[\s,*()]+", "", text)
        if not compact:
            raise ValueError("empty Okamoto word")
        pos, out = 0, []
        while pos < len(compact):
            mt = _TOKEN.match(compact, pos)
            if not mt:
                raise ValueError(f"cannot parse Okamoto word at {compact[pos:]!r}")
            tok = mt.group(0).upper()
            out.extend(_ALIASES.get(tok, (tok,)))
            pos = mt.end()
        return cls(tuple(out))

    def __mul__(self, other: "OkamotoOp") -> "OkamotoOp":
        return OkamotoOp(self.word + other.word)

    def __pow__(self, k: int) -> "OkamotoOp":
        return OkamotoOp(self.word * k)

    def __str__(self):
        return " ".join(self.word)


B = OkamotoOp(B_WORD)
Q = OkamotoOp(Q_WORD)
QINV = OkamotoOp(QINV_WORD)


def _reflect_theta(j: int, theta: Theta) -> Theta:
    th = list(theta)
    if j in (1, 2, 3):
        th[j - 1] = -th[j - 1]
    elif j == 4:
        th[3] = 2 - th[3]
    else:
        raise ValueError("reflection index must be 1..4")
    return Theta(*th)


def r_reflect(j: int, s: PviSolution) -> PviSolution:
    """``R1..R3`` negate ``theta_j``; ``R4`` sends ``theta_4`` to ``2 - theta_4``."""
    return PviSolution(s.lam, _reflect_theta(j, s.theta))


def _r5_theta(theta: Theta) -> Theta:
    return theta - MU * (2 * MU.dot(theta))


def r5(s: PviSolution) -> PviSolution:
    """The fundamental transformation.

    ``lambda + 2 (mu.theta) / D`` with
    ``D = ((t-1) l' - theta1)/l + (l' - 1 - theta2)/(l - t) - (t l' + theta3)/(l - 1)``.
    """
    lam, theta = s.lam, s.theta
    k = MU.dot(theta)
    if k == 0:
        return PviSolution(lam, theta)
    t = t_of_w()
    d1 = d_dt(lam)
    t1, t2, t3, _ = theta
    try:
        den = (
            ((t - 1) * d1 - t1) / lam
            + (d1 - 1 - t2) / (lam - t)
            - (t * d1 + t3) / (lam - 1)
        )
        if den.is_zero():
            raise ZeroDivisionError
        new = lam + RatFun.const(2 * k) / den
    except ZeroDivisionError:
        raise ValueError("R5 undefined (Riccati-type degeneracy)") from None
    return PviSolution(new, _r5_theta(theta))


def _step(g: str, s: PviSolution) -> PviSolution:
    return r5(s) if g == "R5" else r_reflect(int(g[1]), s)


def apply_word(op: OkamotoOp | str | tuple, s: PviSolution) -> PviSolution:
    """Apply the generators of ``op`` to ``s``, rightmost first."""
    if isinstance(op, str):
        op = OkamotoOp.parse(op)
    elif not isinstance(op, OkamotoOp):
        op = OkamotoOp(tuple(op))
    for g in reversed(op.word):
        s = _step(g, s)
    return s


def theta_action(op: OkamotoOp | str, theta: Theta) -> Theta:
    """The affine action of a word on parameters alone."""
    if isinstance(op, str):
        op = OkamotoOp.parse(op)
    for g in reversed(op.word):
        theta = _r5_theta(theta) if g == "R5" else _reflect_theta(int(g[1]), theta)
    return theta


# ---------------------------------------------------------------------------
# hierarchy


CATALOG_PLUS_MAX = 5
CATALOG_MINUS_MAX = 4

Reference = Callable[[int, str], PviSolution]


def _same(a: PviSolution, b: PviSolution) -> tuple[bool, str]:
    if a.theta != b.theta:
        return False, f"theta {a.theta} != {b.theta}"
    if a.lam != b.lam:
        return False, "lambda differs"
    return True, f"theta = {a.theta}"


def _link(rep: VerificationReport, name: str, compute: Callable[[], PviSolution], ref: Callable[[], PviSolution]):
    with rep.case(name) as c:
        ok, detail = _same(compute(), ref())
        c.status, c.detail = (PASS if ok else "fail"), detail


def hierarchy_check(max_m: int, reference: Reference | None = None) -> VerificationReport:
    """Compare ``Q^m L0+`` and ``Q^-m L0-`` with the catalog, plus the R5 and B links.

    Chains beyond the tabulated range are still computed; those steps are
    only checked against the PVI equation and are labelled as having no
    reference data.  ``reference`` replaces :func:`catalog` (used to inject
    perturbed tables).
    """
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    ref = reference or catalog
    rep = VerificationReport(f"hierarchy --max-m {max_m}")

    for sign, op, top, label in (("+", Q, CATALOG_PLUS_MAX, "Q^"), ("-", QINV, CATALOG_MINUS_MAX, "Q^-")):
        cur = ref(0, sign)
        for m in range(1, max_m + 1):
            name = f"{label}{m} L0{sign} = L{m}{sign}"
            with rep.case(name if m <= top else f"{label}{m} L0{sign} solves PVI (no reference data)") as c:
                nxt = apply_word(op, cur)
                cur = PviSolution(nxt.lam, nxt.theta, (m, sign))
                if m <= top:
                    ok, detail = _same(cur, ref(m, sign))
                else:
                    ok = pvi_residual(cur).is_zero()
                    detail = f"theta = {cur.theta}, deg num = {cur.lam.num.degree}; residual {'zero' if ok else 'nonzero'}"
                c.status, c.detail = (PASS if ok else "fail"), detail

    for m in range(0, min(max_m, CATALOG_MINUS_MAX) + 1):
        _link(rep, f"R5 L{m}+ = L{m}-", lambda m=m: r5(ref(m, "+")), lambda m=m: ref(m, "-"))
    for m in range(0, min(max_m - 1, CATALOG_MINUS_MAX - 1) + 1):
        _link(rep, f"B L{m}- = L{m + 1}+", lambda m=m: apply_word(B, ref(m, "-")), lambda m=m: ref(m + 1, "+"))
    return rep


def perturbed_reference(m: int, sign: str, poly: str = "f", index: int = 0) -> Reference:
    """A catalog lookup with one coefficient of ``f`` or ``g`` of one entry negated."""
    from .pvi import _norm_sign, catalog_fg, lambda_from_fg

    sign = _norm_sign(sign)
    f, g = catalog_fg(m, sign)
    target = f if poly == "f" else g
    cs = target.coeffs()
    nz = [k for k, c in enumerate(cs) if c]
    k = nz[index % len(nz)]
    cs[k] = -cs[k]
    target = type(target)(cs)
    f, g = (target, g) if poly == "f" else (f, target)
    bad = PviSolution(lambda_from_fg(f, g), catalog(m, sign).theta, (m, sign))

    def lookup(mm: int, ss: str) -> PviSolution:
        ss = _norm_sign(ss)
        return bad if (mm, ss) == (m, sign) else catalog(mm, ss)

    return lookup
