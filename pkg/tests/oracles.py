"""Independent reference computations in sympy, used only by the tests."""

import sympy as sp

x, y = sp.symbols("x y")


def to_sympy(form):
    return sum((sp.Rational(c.numerator, c.denominator) if hasattr(c, "numerator") else c) * x ** i * y ** j
               for (i, j), c in form.terms.items()) if form.terms else sp.Integer(0)


def transvectant(u, v, p):
    tot = 0
    for k in range(p + 1):
        du = sp.diff(u, x, p - k, y, k) if p else u
        dv = sp.diff(v, x, k, y, p - k) if p else v
        tot += (-1) ** k * sp.binomial(p, k) * du * dv
    return sp.expand(tot / sp.factorial(p))


def bracket(g, v):
    return transvectant(g, v, 1)


def coeffs3(f):
    poly = sp.Poly(f, x, y)
    return [poly.coeff_monomial(x ** (3 - k) * y ** k) for k in range(4)]


def r_determinant(u):
    gs = [-x * y, x ** 2 / 2, -y ** 2 / 2]
    cols = [coeffs3(bracket(g, u)) for g in gs] + [coeffs3(u)]
    return sp.Matrix(cols).T.det()


def quartic(u):
    u2 = sp.expand(u * u)
    return transvectant(u2, u2, 6)


def inverse_action(u, v):
    """Solve [c0 g0 + c+ g+ + c- g-, u] + beta u = v as a 4x4 linear system."""
    c0, cp, cm, beta = sp.symbols("c0 cp cm beta")
    g = c0 * (-x * y) + cp * x ** 2 / 2 + cm * (-(y ** 2) / 2)
    expr = sp.expand(bracket(g, u) + beta * u - v)
    eqs = sp.Poly(expr, x, y).coeffs()
    sol = sp.solve(eqs, [c0, cp, cm, beta], dict=True)
    assert len(sol) == 1
    s = sol[0]
    return sp.expand(g.subs(s)), s[beta]
