"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

from pvi_instanton.binary_forms import X, Y, bracket, pairing, sl2_forms, transvectant
from pvi_instanton.connection import (
    curve_family,
    h_coeffs,
    h_coeffs_direct,
    q_from_factors,
    quartic_invariant,
    r_determinant,
    residue_at_zero,
    solve_lambda0,
)
from pvi_instanton.exact_core import Poly, RatFun
from pvi_instanton.monad import generate_coeffs, space_dims, verify_monad
from pvi_instanton.okamoto import apply_word, hierarchy_check, r5
from pvi_instanton.properties import DEFAULT_CASES, DEFAULT_SEED, property_suite
from pvi_instanton.pvi import MU, PviSolution, catalog, catalog_keys, pvi_residual

W = Poly.gen()
RESULTS: dict[str, tuple[bool, str]] = {}


def _record(key: str, ok: bool, detail: str) -> bool:
    RESULTS[key] = (ok, detail)
    return ok


def _keys_upto(m_max):
    return [(m, s) for m, s in catalog_keys() if m <= m_max]


def criterion_01():
    start = time.perf_counter()
    bad = [k for k in _keys_upto(4) if not pvi_residual(catalog(*k)).is_zero()]
    secs = time.perf_counter() - start
    ok = not bad and secs < 60
    return ok, f"10 residuals, nonzero: {bad or 'none'}, {secs:.2f}s"


def criterion_02():
    res = pvi_residual(PviSolution(catalog(1, "-").lam, -MU))
    return (not res.is_zero()), f"residual numerator degree {res.num.degree}"


def criterion_03():
    r5_bad = [m for m in range(5) if r5(catalog(m, "+")) != catalog(m, "-")]
    b_bad = [m for m in range(4) if apply_word("B", catalog(m, "-")) != catalog(m + 1, "+")]
    return not (r5_bad or b_bad), f"R5 failures {r5_bad}, B failures {b_bad}"


def criterion_04():
    start = time.perf_counter()
    rep = hierarchy_check(5)
    secs = time.perf_counter() - start
    wanted = [f"Q^{m} L0+ = L{m}+" for m in range(1, 6)] + [f"Q^-{m} L0- = L{m}-" for m in range(1, 5)]
    status = {c.name: c.passed for c in rep.cases}
    missing = [n for n in wanted if not status.get(n)]
    ok = not missing and secs < 300
    return ok, f"{len(wanted) - len(missing)}/{len(wanted)} chain comparisons, {secs:.2f}s"


def criterion_05():
    bad = []
    for k in catalog_keys():
        s = catalog(*k)
        if r5(r5(s)) != s:
            bad.append(("R5R5", k))
        if apply_word("B B", s) != s:
            bad.append(("BB", k))
    return not bad, f"{2 * len(catalog_keys())} involution checks, failures {bad}"


def criterion_06():
    lam_p = RatFun((W - 3) ** 2 * (W ** 2 - 1), (W - 1) * (W + 3) * (W ** 2 + 3))
    lam_m = RatFun(-(W - 3) ** 2, 3 * (W - 1) * (W + 3))
    u = curve_family().u
    hc = h_coeffs(u, X, Y)
    c = RatFun(96 * (W + 1) ** 3, (W + 3) ** 7)
    hp = [-c * 8 * (W - 3) ** 2, -c * 8 * 3 * (W - 1) * (W + 3)]
    hm = [c * (W - 1) * (W - 3) ** 2 * (W + 1), -c * (W - 1) * (W + 3) * (3 + W ** 2)]
    parts = {
        "lambda0+": solve_lambda0("+") == lam_p,
        "lambda0-": solve_lambda0("-") == lam_m,
        "h+": hc.hplus == hp,
        "h-": hc.hminus == hm,
        "closed form = expansion": hc == h_coeffs_direct(u, X, Y),
    }
    return all(parts.values()), ", ".join(f"{k}: {'ok' if v else 'MISMATCH'}" for k, v in parts.items())


def _factored_cubics(n=20, seed=DEFAULT_SEED):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        ls = [X * rng.randint(-5, 5) + Y * rng.randint(-5, 5) for _ in range(3)]
        u = ls[0] * ls[1] * ls[2]
        if quartic_invariant(u):
            out.append((ls, u))
    return out


def criterion_07_kq_residue():
    cubics = _factored_cubics()
    kq = {Fraction(q_from_factors(*ls)) / quartic_invariant(u) for ls, u in cubics}
    g0 = sl2_forms(X, Y)[0]
    res = residue_at_zero(X, Y, X ** 3 + X * Y * Y + Y ** 3).form
    eig = bracket(res, X) == -X * Fraction(1, 4) and bracket(res, Y) == Y * Fraction(1, 4)
    ok = kq == {Fraction(-1, 48)} and res == -g0 * Fraction(1, 4) and eig
    return ok, f"K_q values {sorted(str(k) for k in kq)}; residue -(1/4) g0: {res == -g0 * Fraction(1, 4)}; eigenvalues +-1/4: {eig}"


def criterion_07_kr():
    cubics = _factored_cubics()
    kr = {Fraction(r_determinant(u)) / quartic_invariant(u) for _, u in cubics}
    u0 = X * Y * (X + Y)
    r0 = r_determinant(u0)
    ok = kr == {Fraction(-6)} and r0 == 288
    return ok, f"K_r values {sorted(str(k) for k in kr)} (expected -6); r(xy(x+y)) = {r0} (expected 288)"


def criterion_08():
    start = time.perf_counter()
    bad = [m for m in range(11) if not verify_monad(generate_coeffs(m)).passed]
    split_ok = all(
        any(c.name.startswith("splitting") and c.passed for c in verify_monad(generate_coeffs(m)).cases)
        for m in range(1, 11)
    )
    dims_bad = [m for m in range(11) if space_dims(m).dimW != m * (m + 1) // 2]
    secs = time.perf_counter() - start
    ok = not bad and split_ok and not dims_bad and secs < 1
    return ok, f"failing m {bad}, a[m-1,1]=0 for all m: {split_ok}, dimW mismatches {dims_bad}, {secs:.3f}s"


def criterion_09():
    same = catalog(1, "+").lam == catalog(0, "+").lam
    differ = catalog(1, "-").lam != catalog(0, "-").lam
    return same and differ, f"lambda1+ = lambda0+: {same}; lambda1- != lambda0-: {differ}"


def criterion_10():
    rep = property_suite(DEFAULT_SEED, DEFAULT_CASES)
    needed = ["transvectant symmetry", "pairing values", "sl2 bracket relations", "monomial action",
              "pencil degree bounds", "reconstruction"]
    status = {c.name: c for c in rep.cases}
    bad = [n for n in needed if n not in status or not status[n].passed]
    return not bad, f"{len(needed)} suites x {DEFAULT_CASES} cases at seed {DEFAULT_SEED}; failing {bad}"


CRITERIA = {
    "1 PVI residual certificates": [criterion_01],
    "2 negative control": [criterion_02],
    "3 Okamoto links": [criterion_03],
    "4 creation-operator hierarchy": [criterion_04],
    "5 involutions": [criterion_05],
    "6 m=0 pipeline": [criterion_06],
    "7 invariant constants and residues": [criterion_07_kq_residue, criterion_07_kr],
    "8 monad verification": [criterion_08],
    "9 coincidence structure": [criterion_09],
    "10 property suites": [criterion_10],
}


def summary_lines() -> list[str]:
    lines = []
    for label, fns in CRITERIA.items():
        parts = [RESULTS[fn.__name__] for fn in fns if fn.__name__ in RESULTS]
        if len(parts) < len(fns):
            continue
        ok = all(p[0] for p in parts)
        lines.append(f"criterion {label}: {'PASS' if ok else 'FAIL'} | " + " | ".join(p[1] for p in parts))
    return lines


def _check(fn):
    ok, detail = fn()
    _record(fn.__name__, ok, detail)
    assert ok, detail


def test_criterion_01():
    _check(criterion_01)


def test_criterion_02():
    _check(criterion_02)


def test_criterion_03():
    _check(criterion_03)


def test_criterion_04():
    _check(criterion_04)


def test_criterion_05():
    _check(criterion_05)


def test_criterion_06():
    _check(criterion_06)


def test_criterion_07_kq_and_residue():
    _check(criterion_07_kq_residue)


def test_criterion_07_kr():
    _check(criterion_07_kr)


def test_criterion_08():
    _check(criterion_08)


def test_criterion_09():
    _check(criterion_09)


def test_criterion_10():
    _check(criterion_10)


if __name__ == "__main__":
    for fns in CRITERIA.values():
        for fn in fns:
            _record(fn.__name__, *fn())
    for line in summary_lines():
        print(line)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
