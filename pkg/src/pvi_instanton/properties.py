"""Seeded randomized property checks behind ``selftest``.

Every property draws small integer coefficients in ``[-5, 5]`` from a
:class:`random.Random` seeded once per property, so a given seed always
reproduces the same cases.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import factorial
from typing import Callable

from .binary_forms import X, Y, BiForm, bracket, pairing, sl2_forms, transvectant
from .connection import (
    K_Q,
    K_R,
    alpha_inverse,
    h_coeffs,
    h_coeffs_direct,
    h_form,
    q_from_factors,
    quartic_invariant,
    r_determinant,
    z_polynomial,
)
from .report import ERROR, FAIL, PASS, Case, VerificationReport

__all__ = ["DEFAULT_SEED", "DEFAULT_CASES", "PROPERTIES", "property_suite", "rand_form", "rand_frame"]

DEFAULT_SEED = 20240601
DEFAULT_CASES = 100
LO, HI = -5, 5


def rand_form(rng: random.Random, d: int, nonzero: bool = True) -> BiForm:
    while True:
        f = BiForm.from_coeffs([rng.randint(LO, HI) for _ in range(d + 1)])
        if f or not nonzero:
            return f


def rand_frame(rng: random.Random) -> tuple[BiForm, BiForm]:
    while True:
        a, b = rand_form(rng, 1), rand_form(rng, 1)
        if transvectant(a, b, 1).scalar():
            return a, b


def rand_generic_cubic(rng: random.Random) -> BiForm:
    while True:
        u = rand_form(rng, 3)
        if quartic_invariant(u):
            return u


# each check returns None on success or a short failure description


def _symmetry(rng):
    i, j = rng.randint(0, 8), rng.randint(0, 8)
    u, v = rand_form(rng, i), rand_form(rng, j)
    p = rng.randint(0, min(i, j) + 1)
    if transvectant(u, v, p) != transvectant(v, u, p) * (-1) ** p:
        return f"<u,v>_{p} != (-1)^{p} <v,u>_{p} for u={u}, v={v}"
    return None


def _pairing_values(rng):
    a, b = rand_frame(rng)
    p = rng.randint(0, 6)
    j, k = rng.randint(0, p), rng.randint(0, p)
    ab = transvectant(a, b, 1).scalar()
    got = transvectant(a ** (p - j) * b ** j, a ** k * b ** (p - k), p).scalar()
    want = (-1) ** j * factorial(j) * factorial(p - j) * ab ** p if j == k else 0
    if got != want:
        return f"frame ({a}, {b}), p={p}, j={j}, k={k}: {got} != {want}"
    return None


def _bracket_relations(rng):
    a, b = rand_frame(rng)
    g0, gp, gm = sl2_forms(a, b)
    ok = bracket(g0, gp) == gp * 2 and bracket(g0, gm) == gm * -2 and bracket(gp, gm) == g0
    return None if ok else f"bracket relations fail for frame ({a}, {b})"


def _monomial_action(rng):
    a, b = rand_frame(rng)
    g0, gp, gm = sl2_forms(a, b)
    i, j = rng.randint(0, 6), rng.randint(0, 6)
    mono = a ** i * b ** j
    checks = [
        bracket(g0, mono) == mono * (i - j),
        bracket(gp, mono) == (a ** (i + 1) * b ** (j - 1) * j if j else BiForm()),
        bracket(gm, mono) == (a ** (i - 1) * b ** (j + 1) * i if i else BiForm()),
    ]
    return None if all(checks) else f"monomial action fails for a^{i} b^{j}, frame ({a}, {b})"


def _derivation(rng):
    g = rand_form(rng, 2)
    u, v = rand_form(rng, rng.randint(0, 5)), rand_form(rng, rng.randint(0, 5))
    if bracket(g, u * v) != bracket(g, u) * v + u * bracket(g, v):
        return f"[g, uv] != [g,u]v + u[g,v] for g={g}"
    return None


def _jacobi(rng):
    f, g, h = (rand_form(rng, 2) for _ in range(3))
    total = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))
    return None if not total else f"Jacobi fails for {f}, {g}, {h}"


def _degree_bounds(rng):
    u = rand_form(rng, 3)
    a, b = rand_frame(rng)
    v = a * a * b
    g0 = sl2_forms(a, b)[0]
    ab = transvectant(a, b, 1).scalar()
    corr = g0 * (8 * ab ** 3 * pairing(u, a ** 3))
    k = z_polynomial(lambda z: h_form(u + v * z, v) + corr * (z * z), 3)
    if len(k) > 2:
        return f"k(z) has degree {len(k) - 1} for u={u}, frame ({a}, {b})"
    hc = h_coeffs(u, a, b)
    if len(hc.hplus) > 2 or len(hc.hminus) > 2:
        return f"h+ or h- above degree one for u={u}"
    return None


def _h_coeffs_match(rng):
    u = rand_form(rng, 3)
    a, b = rand_frame(rng)
    if h_coeffs(u, a, b) != h_coeffs_direct(u, a, b):
        return f"closed-form h coefficients disagree with expansion for u={u}, frame ({a}, {b})"
    return None


def _reconstruction(rng):
    u = rand_generic_cubic(rng)
    v = rand_form(rng, 3, nonzero=False)
    alpha, beta = alpha_inverse(u, v)
    if bracket(alpha, u) + u * beta != v:
        return f"[a(u,v), u] + beta u != v for u={u}, v={v}"
    return None


def _invariant_constants(rng):
    while True:
        ls = [rand_form(rng, 1) for _ in range(3)]
        u = ls[0] * ls[1] * ls[2]
        p = quartic_invariant(u)
        if p:
            break
    q, r = q_from_factors(*ls), r_determinant(u)
    if q != K_Q * p or r != K_R * p:
        return f"u={u}: q/p = {Fraction(q) / p}, r/p = {Fraction(r) / p}"
    return None


PROPERTIES: dict[str, Callable[[random.Random], str | None]] = {
    "transvectant symmetry": _symmetry,
    "pairing values": _pairing_values,
    "sl2 bracket relations": _bracket_relations,
    "monomial action": _monomial_action,
    "bracket is a derivation": _derivation,
    "jacobi identity": _jacobi,
    "pencil degree bounds": _degree_bounds,
    "h coefficients closed form": _h_coeffs_match,
    "reconstruction": _reconstruction,
    "invariant constants q/p and r/p": _invariant_constants,
}


def run_property(name: str, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> Case:
    check = PROPERTIES[name]
    rng = random.Random(f"{seed}:{name}")
    start = time.perf_counter()
    failures = []
    try:
        for _ in range(cases):
            msg = check(rng)
            if msg:
                failures.append(msg)
    except (ArithmeticError, ValueError) as exc:
        return Case(name, ERROR, f"{type(exc).__name__}: {exc}", int(1000 * (time.perf_counter() - start)))
    elapsed = int(round(1000 * (time.perf_counter() - start)))
    if failures:
        return Case(name, FAIL, f"{len(failures)}/{cases} failed; first: {failures[0]}", elapsed)
    return Case(name, PASS, f"{cases}/{cases} cases", elapsed)


def property_suite(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES, names=None) -> VerificationReport:
    rep = VerificationReport(f"selftest --seed {seed}")
    for name in names or PROPERTIES:
        rep.cases.append(run_property(name, seed, cases))
    return rep
