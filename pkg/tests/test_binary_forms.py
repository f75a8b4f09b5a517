import random
from fractions import Fraction
from math import factorial

import pytest
import sympy as sp

from pvi_instanton.binary_forms import (
    X, Y, BiForm, bracket, bracket_matrix, cg_components, pairing, sl2_basis, sl2_coords, sl2_forms, transvectant,
)
from pvi_instanton.properties import rand_form, rand_frame

import oracles


def test_zeroth_transvectant_is_product():
    u, v = X * X + Y, X * Y - 3
    assert transvectant(u, v, 0) == u * v


def test_first_transvectant_of_x_y():
    assert transvectant(X, Y, 1) == 1


def test_top_transvectant_example():
    assert transvectant(X * X * Y, X * Y * Y, 3).scalar() == -2


def test_vanishes_above_min_degree():
    assert transvectant(X ** 2, Y ** 5, 3).is_zero()


def test_matches_sympy_oracle():
    rng = random.Random(7)
    for _ in range(40):
        i, j = rng.randint(0, 6), rng.randint(0, 6)
        u, v = rand_form(rng, i), rand_form(rng, j)
        p = rng.randint(0, min(i, j))
        ours = oracles.to_sympy(transvectant(u, v, p))
        ref = oracles.transvectant(oracles.to_sympy(u), oracles.to_sympy(v), p)
        assert sp.expand(ours - ref) == 0


def test_sl2_basis_standard_frame():
    g0, gp, gm = sl2_forms(X, Y)
    assert g0 == -(X * Y)
    assert gp == X * X * Fraction(1, 2)
    assert gm == -(Y * Y) * Fraction(1, 2)
    assert [e.coords() for e in sl2_basis(X, Y)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


@pytest.mark.parametrize("a,b", [(X, Y), (X + Y, Y), (2 * X - Y, X + 3 * Y)])
def test_bracket_relations(a, b):
    g0, gp, gm = sl2_forms(a, b)
    assert bracket(g0, gp) == 2 * gp
    assert bracket(g0, gm) == -2 * gm
    assert bracket(gp, gm) == g0


def test_shifted_frame_pairing_is_one():
    assert transvectant(X + Y, Y, 1).scalar() == 1


def test_degenerate_frame():
    with pytest.raises(ValueError, match="degenerate frame"):
        sl2_basis(X, 2 * X)


def test_monomial_action_examples():
    g0, gp, _ = sl2_forms(X, Y)
    assert bracket(g0, X ** 3) == 3 * X ** 3
    assert bracket(gp, Y ** 3) == 3 * X * Y * Y
    assert bracket(gp, X ** 5).is_zero()


def test_bracket_requires_quadratic():
    with pytest.raises(ValueError):
        bracket(X ** 3, Y)


def test_cg_components():
    assert cg_components(2, 2) == [4, 2, 0]
    assert cg_components(3, 3) == [6, 4, 2, 0]
    for l in range(2, 7):
        assert cg_components(2 * l, 3) == [2 * l + 3, 2 * l + 1, 2 * l - 1, 2 * l - 3]


def test_pairing_values_table():
    for p in range(7):
        for j in range(p + 1):
            for k in range(p + 1):
                got = pairing(X ** (p - j) * Y ** j, X ** k * Y ** (p - k))
                want = (-1) ** j * factorial(j) * factorial(p - j) if j == k else 0
                assert got == want


def test_sl2_coords_round_trip():
    rng = random.Random(3)
    for _ in range(30):
        a, b = rand_frame(rng)
        g = rand_form(rng, 2)
        assert sl2_coords(g, a, b).form == g


def test_bracket_matrix_of_g0_on_v1():
    g0 = sl2_forms(X, Y)[0]
    assert bracket_matrix(g0, 1) == [[1, 0], [0, -1]]


def test_zero_form_is_falsy():
    assert not BiForm()
    assert X
