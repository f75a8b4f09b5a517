"""Monad coefficients for the equivariant instantons and their checks.

Run: python3 demos/02_monads.py
"""

from pvi_instanton import generate_coeffs, space_dims, verify_monad

# %% m = 2 has a single summand V_2 in W, with three coefficients
c = generate_coeffs(2)
for (l, p), a in sorted(c.entries.items()):
    print(f"a[{l},{p}] = {a}")

print("\n".join(verify_monad(c).summary_lines()))

# %% The same closed formulas work for every m; the off-diagonal
# conditions are exact identities between products of square roots
for m in range(11):
    rep = verify_monad(generate_coeffs(m))
    d = space_dims(m)
    print(f"m={m:2d}  checks={len(rep.cases):2d}  {rep.overall}  dimW={d.dimW:2d} rank={d.rank}")
