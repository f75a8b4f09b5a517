"""From the trivial bundle to lambda0+-: the eigenvector condition on a pencil of cubics.

Run: python3 demos/03_m0_connection.py
"""

from pvi_instanton import X, Y
from pvi_instanton.connection import (
    curve_family,
    h_coeffs,
    m0_residue_eigenvalues,
    quartic_invariant,
    solve_lambda0,
    theta_m0,
    z_polynomial,
)

pair = curve_family()
print("u(w) =", pair.u)
print("v    =", pair.v)

# %% p(u + z v) is a cubic in z with roots 0, 1 and t(w)
pz = z_polynomial(lambda z: quartic_invariant(pair.at(z)), 4)
for k, c in enumerate(pz):
    print(f"  z^{k}: {c}")

# %% h(u + z x^2y, x^2y) in the sl2 basis: h+ and h- are linear in z
hc = h_coeffs(pair.u, X, Y)
print("h+ =", [str(c) for c in hc.hplus])
print("h- =", [str(c) for c in hc.hminus])

# %% All four residues have eigenvalues +-1/4, so theta = +-mu
print("k^2 at 0, 1, t, oo:", {k: str(v) for k, v in m0_residue_eigenvalues().items()})
print("theta:", [str(x) for x in theta_m0(1)])

# %% The degree-one eigenvector condition gives lambda
print("lambda0+ =", solve_lambda0("+"))
print("lambda0- =", solve_lambda0("-"))
