from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvi_instanton.exact_core import Poly, RatFun, RootScalar, W, poly_gcd, ratfun_reduce, root_mul, squarefree_split

small = st.integers(-6, 6)
polys = st.lists(small, min_size=0, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
radicands = st.integers(0, 400)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# -- an independent gcd: schoolbook Euclid on Fraction coefficient lists


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a, b):
    a = _trim(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = _trim(a)
    return a


def euclid_gcd(a, b):
    a, b = _trim(map(Fraction, a)), _trim(map(Fraction, b))
    while b:
        a, b = b, _rem(a, b)
    if not a:
        return []
    return [c / a[-1] for c in a]


def test_gcd_shared_root():
    assert poly_gcd(W ** 2 - 1, W - 1) == W - 1


def test_gcd_with_zero_is_monic_multiple():
    p = 3 * W ** 2 + 6
    assert poly_gcd(p, Poly()) == W ** 2 + 2
    assert poly_gcd(Poly(), Poly()).is_zero()


def test_gcd_recovers_cancelled_factor_in_r5_image():
    # lambda0+ pushed through the fundamental transformation, assembled by hand
    # over a common denominator; the raw quotient has a common factor.
    from pvi_instanton.pvi import catalog, d_dt, t_of_w

    lam = catalog(0, "+").lam
    t = t_of_w()
    d1 = d_dt(lam)
    theta = Fraction(1, 2)
    terms = [
        ((t - 1) * d1 - theta, lam),
        (d1 - 1 - theta, lam - t),
        (-(t * d1 + theta), lam - 1),
    ]
    num, den = Poly(), Poly([1])
    for a, b in terms:
        q = a / b
        num = num * q.den + q.num * den
        den = den * q.den
    # lambda + 2/D = (lambda.num * num + 2 lambda.den * den) / (lambda.den * num)
    raw_num = lam.num * num + 2 * lam.den * den
    raw_den = lam.den * num
    g = poly_gcd(raw_num, raw_den)
    assert g.degree > 0
    assert ratfun_reduce(raw_num, raw_den) == catalog(0, "-").lam


@given(polys, polys)
def test_gcd_matches_euclid(p, q):
    assert poly_gcd(p, q).coeffs() == euclid_gcd(p.coeffs(), q.coeffs())


@given(polys, polys, nonzero_polys)
def test_gcd_multiplicative(p, q, r):
    assert poly_gcd(p * r, q * r) == r.monic() * poly_gcd(p, q)


def test_reduce_examples():
    assert ratfun_reduce(W ** 2 - 1, W - 1) == RatFun(W + 1)
    r = ratfun_reduce(2 * W, Poly([2]))
    assert r.num == W and r.den == Poly([1])


@given(nonzero_polys)
def test_reduce_known_lambda(c):
    num = (W - 3) ** 2 * (W ** 2 - 1) * c
    den = (W - 1) * (W + 3) * (W ** 2 + 3) * c
    lam = ratfun_reduce(num, den)
    assert lam.num == (W - 3) ** 2 * (W + 1)
    assert lam.den == (W + 3) * (W ** 2 + 3)


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero rational function"):
        ratfun_reduce(W, Poly())


@given(polys, nonzero_polys)
def test_reduce_idempotent_and_canonical(p, q):
    r = ratfun_reduce(p, q)
    again = ratfun_reduce(r.num, r.den)
    assert again.num == r.num and again.den == r.den
    assert r.den.leading() == 1
    assert poly_gcd(r.num, r.den).degree <= 0


@given(polys, nonzero_polys)
def test_quotient_rule(p, q):
    r = RatFun(p, q)
    oracle = ratfun_reduce(p.derivative() * q - p * q.derivative(), q * q)
    assert r.derivative() == oracle


@settings(max_examples=50)
@given(polys, nonzero_polys, polys, nonzero_polys, fracs)
def test_field_arithmetic_by_evaluation(a, b, c, d, x):
    if not b(x) or not d(x):
        return
    r, s = RatFun(a, b), RatFun(c, d)
    rv, sv = a(x) / b(x), c(x) / d(x)
    assert (r + s)(x) == rv + sv
    assert (r - s)(x) == rv - sv
    assert (r * s)(x) == rv * sv
    if s and sv:
        assert (r / s)(x) == rv / sv


def test_squarefree_split():
    assert squarefree_split(200) == (10, 2)
    assert squarefree_split(0) == (0, 1)
    assert squarefree_split(1) == (1, 1)


def test_root_mul_examples():
    assert root_mul(RootScalar(1, 2), RootScalar(1, 2)) == RootScalar(2, 1)
    assert root_mul(RootScalar(1, 6), RootScalar(1, 10)) == RootScalar(2, 15)


def test_root_mul_monad_product_m3():
    n = 7
    a10 = RootScalar(1, 9 * n * n - 25)
    a11 = RootScalar(1, n * n - 25)
    a32 = RootScalar(9, n * n - 25)
    a33 = RootScalar(9, 9 * n * n - 25)
    assert root_mul(a10, a32) == root_mul(a11, a33)


def test_root_scalar_canonical_zero():
    z = RootScalar(0, 7)
    assert z.radicand == 1 and not z
    assert RootScalar(3, 0) == RootScalar(0, 1)


def test_mixed_radicand_addition_rejected():
    with pytest.raises(ValueError):
        RootScalar(1, 2) + RootScalar(1, 3)
    assert RootScalar(1, 2) + RootScalar(0, 3) == RootScalar(1, 2)


@given(fracs, radicands, fracs, radicands, fracs, radicands)
def test_root_mul_commutative_associative(c1, r1, c2, r2, c3, r3):
    a, b, c = RootScalar(c1, r1), RootScalar(c2, r2), RootScalar(c3, r3)
    assert root_mul(a, b) == root_mul(b, a)
    assert root_mul(root_mul(a, b), c) == root_mul(a, root_mul(b, c))


@given(fracs, radicands)
def test_root_square_is_rational(c, r):
    x = RootScalar(c, r)
    sq = root_mul(x, x)
    assert sq.radicand == 1
    assert sq.coeff == c * c * r


@given(radicands)
def test_radicand_squarefree(n):
    r = RootScalar(1, n).radicand
    assert all(r % (k * k) for k in range(2, int(r ** 0.5) + 1))


def test_poly_basics():
    p = Poly([1, 0, 3])
    assert p.degree == 2 and p.is_even()
    assert Poly().degree == -1
    assert p(2) == 13
    assert p(W + 1) == 3 * W ** 2 + 6 * W + 4
