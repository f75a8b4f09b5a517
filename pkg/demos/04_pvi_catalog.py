"""The catalog of algebraic PVI solutions and their exact residuals.

Run: python3 demos/04_pvi_catalog.py
"""

import time

from pvi_instanton import MU, PviSolution, catalog, pvi_residual, t_of_w
from pvi_instanton.pvi import catalog_fg, catalog_keys

print("t(w) =", t_of_w())

# %% Each entry solves PVI identically in w
for m, s in catalog_keys():
    f, g = catalog_fg(m, s)
    start = time.perf_counter()
    res = pvi_residual(catalog(m, s))
    ms = 1000 * (time.perf_counter() - start)
    print(f"L{m}{s}: deg f={f.degree:2d} deg g={g.degree:2d}  residual={'0' if res.is_zero() else res}  ({ms:.1f} ms)")

# %% lambda1- solves PVI only at its own theta; lambda1+ repeats lambda0+
lam = catalog(1, "-").lam
print("lambda1- at theta = -3mu:", pvi_residual(PviSolution(lam, MU * -3)).is_zero())
print("lambda1- at theta = -mu: ", pvi_residual(PviSolution(lam, -MU)).is_zero())
print("lambda1+ == lambda0+:", catalog(1, "+").lam == catalog(0, "+").lam)
