"""Transvectants and the sl2 structure on binary forms.

Run: python3 demos/01_transvectants.py
"""

from pvi_instanton import X, Y, bracket, cg_components, pairing, sl2_basis, transvectant

# %% The p-th transvectant lands in degree i + j - 2p
u, v = X ** 2 * Y, X * Y ** 2
for p in range(4):
    print(f"<x^2y, xy^2>_{p} =", transvectant(u, v, p))

# %% Clebsch-Gordan: V_2 x V_3 splits into V_5 + V_3 + V_1
print("V_2 (x) V_3 ->", cg_components(2, 3))

# %% The frame (x, y) gives the basis g0, g+, g- of sl2 ...
g0, gp, gm = (e.form for e in sl2_basis(X, Y))
print("g0 =", g0, " g+ =", gp, " g- =", gm)

# ... whose first transvectants are the usual brackets
print("[g0, g+] =", bracket(g0, gp))
print("[g0, g-] =", bracket(g0, gm))
print("[g+, g-] =", bracket(gp, gm))

# %% Action on monomials: x^i y^j is a weight vector of weight i - j
for i, j in [(3, 0), (2, 1), (0, 3)]:
    m = X ** i * Y ** j
    print(f"[g0, x^{i}y^{j}] = {bracket(g0, m)};  [g+, x^{i}y^{j}] = {bracket(gp, m)}")

# %% The invariant pairing on V_3 in the monomial basis is antidiagonal
for j in range(4):
    print([str(pairing(X ** (3 - j) * Y ** j, X ** k * Y ** (3 - k))) for k in range(4)])
