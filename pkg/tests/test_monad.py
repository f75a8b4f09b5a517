from fractions import Fraction
from math import isqrt

import pytest

from pvi_instanton.exact_core import RootScalar
from pvi_instanton.monad import MonadCoeffs, generate_coeffs, rescale, space_dims, verify_monad, w_indices


def _sqrt_closed(c, n):
    # oracle: c * sqrt(n) via integer square-part extraction by trial
    s = 1
    for k in range(2, isqrt(n) + 1):
        while n % (k * k) == 0:
            n //= k * k
            s *= k
    return c * s, n


def test_m0_is_empty():
    assert generate_coeffs(0).entries == {}
    assert w_indices(0) == []


def test_m2_entries():
    c = generate_coeffs(2)
    assert c[(1, 0)] == RootScalar(10, 2)
    assert not c[(1, 1)]
    assert c[(1, 2)] == RootScalar(10, 6)
    assert set(c.entries) == {(1, 0), (1, 1), (1, 2)}


@pytest.mark.parametrize("m", range(1, 11))
def test_entries_match_substitution_oracle(m):
    n = 2 * m + 1
    c = generate_coeffs(m)
    for l in w_indices(m):
        raw = [
            (2 * l - 1, 9 * n * n - (2 * l + 3) ** 2),
            (2 * l - 1, n * n - (2 * l + 3) ** 2),
            (2 * l + 3, n * n - (2 * l - 1) ** 2),
            (2 * l + 3, 9 * n * n - (2 * l - 1) ** 2),
        ]
        for p in range(min(2 * l, 3) + 1):
            coeff, rad = _sqrt_closed(*raw[p])
            got = c[(l, p)]
            if coeff == 0 or rad == 0:
                assert not got
            else:
                assert (got.coeff, got.radicand) == (coeff, rad)


@pytest.mark.parametrize("m", range(0, 11))
def test_generated_sets_pass(m):
    rep = verify_monad(generate_coeffs(m))
    assert rep.passed, rep.summary_lines()


@pytest.mark.parametrize("m", range(1, 11))
def test_splitting_entry_vanishes(m):
    rep = verify_monad(generate_coeffs(m))
    split = [c for c in rep.cases if c.name.startswith("splitting")]
    assert len(split) == 1 and split[0].passed


def test_m2_diagonal_values():
    rep = verify_monad(generate_coeffs(2))
    case = next(c for c in rep.cases if c.name == "diagonal-1 l=1")
    assert case.detail == "lhs=600 rhs=600"


def test_perturbation_breaks_diagonal():
    c = generate_coeffs(2)
    a = c[(1, 2)]
    bad = MonadCoeffs(2, dict(c.entries))
    bad.entries[(1, 2)] = RootScalar(a.coeff + 1, a.radicand)
    rep = verify_monad(bad)
    assert [x.name for x in rep.failed()] == ["diagonal-1 l=1"]


def test_off_diagonal_sign_matters():
    c = generate_coeffs(5)
    bad = MonadCoeffs(5, dict(c.entries))
    bad.entries[(4, 3)] = -c[(4, 3)]
    rep = verify_monad(bad)
    assert [x.name for x in rep.failed()] == ["off-diagonal l=2,4"]


def test_rescaling_per_l_preserves_verdicts():
    for m in (3, 4, 6):
        c = generate_coeffs(m)
        gammas = {l: 2 for l in w_indices(m)}
        assert verify_monad(rescale(c, gammas)).passed


def test_single_entry_scaling_fails():
    c = generate_coeffs(4)
    bad = MonadCoeffs(4, dict(c.entries))
    bad.entries[(3, 0)] = c[(3, 0)] * 2
    assert not verify_monad(bad).passed


def test_kappa_must_square_to_one():
    with pytest.raises(ValueError):
        rescale(generate_coeffs(3), {}, {5: 2})


def test_diagonal_quantities_are_rational():
    for m in range(11):
        for a in generate_coeffs(m).entries.values():
            assert isinstance(a.square(), Fraction)


@pytest.mark.parametrize("m,dim_w", [(0, 0), (3, 6), (4, 10)])
def test_space_dims_examples(m, dim_w):
    d = space_dims(m)
    assert d.dimW == dim_w and d.rank == 2 and d.c2 == dim_w


def test_space_dims_m0():
    d = space_dims(0)
    assert (d.dimW, d.dimVhat, d.rank) == (0, 2, 2)


@pytest.mark.parametrize("m", range(11))
def test_instanton_number(m):
    d = space_dims(m)
    assert d.dimW == m * (m + 1) // 2
    assert d.dimVhat == d.dimV + 2 * m
    assert d.rank == 2
