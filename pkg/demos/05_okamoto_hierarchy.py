"""Creation operators: Q = B R5 climbs the hierarchy from the ground state.

Run: python3 demos/05_okamoto_hierarchy.py
"""

from pvi_instanton import apply_word, catalog, hierarchy_check, pvi_residual
from pvi_instanton.okamoto import theta_action

# %% R5 swaps the two ground states
L0p, L0m = catalog(0, "+"), catalog(0, "-")
print("R5 L0+ == L0-:", apply_word("R5", L0p) == L0m)

# %% The parameter trace of B, applied rightmost-first
theta = L0m.theta
for word in ["R1", "R2 R1", "R3 R2 R1", "R5 R3 R2 R1", "R4 R5 R3 R2 R1", "B"]:
    print(f"{word:>16}: {theta_action(word, theta)}")

# %% Q^m L0+ against the catalog, and a step past it
s = L0p
for m in range(1, 7):
    s = apply_word("Q", s)
    if m <= 5:
        tag = "matches catalog" if s == catalog(m, "+") else "differs from catalog"
    else:
        tag = "no reference; residual " + ("0" if pvi_residual(s).is_zero() else "nonzero")
    print(f"Q^{m} L0+: theta={s.theta} deg={s.lam.num.degree}  {tag}")

# %% The full report
print("\n".join(hierarchy_check(5).summary_lines()))
